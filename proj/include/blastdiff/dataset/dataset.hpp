#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "blastdiff/agent/features.hpp"
#include "blastdiff/dataset/level_features.hpp"
#include "blastdiff/dataset/split.hpp"
#include "blastdiff/puzzle/level.hpp"

namespace blastdiff::dataset {

enum class Combination { Historic, PlayerLevel, Agent, All };
enum class Granularity { Personalised, Cohort };
enum class FeatureGroup { Historic, Player, Level, Agent };

std::string to_string(Combination c);
std::string to_string(Granularity g);
std::string to_string(FeatureGroup g);
Combination parse_combination(const std::string& text);
Granularity parse_granularity(const std::string& text);
FeatureGroup parse_feature_group(const std::string& text);

/// Feature groups in column order for a combination.
std::vector<FeatureGroup> combination_groups(Combination c);

const std::vector<std::string>& player_feature_names();
const std::vector<std::string>& historic_feature_names();

/// Dense rows of one split side. `entity_ids` are player ids (personalised)
/// or cohort ids (cohort granularity).
struct Dataset {
    Scenario scenario = Scenario::PD;
    Granularity granularity = Granularity::Personalised;
    Combination combination = Combination::All;
    std::vector<std::string> feature_names;
    std::vector<FeatureGroup> feature_groups;
    std::vector<int> entity_ids;
    std::vector<int> level_ids;
    std::vector<double> targets;
    std::vector<double> features;  // rows x dim, row-major, raw scale

    std::size_t rows() const { return targets.size(); }
    std::size_t dim() const { return feature_names.size(); }
    std::span<const double> row(std::size_t i) const { return {features.data() + i * dim(), dim()}; }
};

/// Train-set column statistics. Constant columns get scale 1.
struct Standardizer {
    std::vector<double> mean;
    std::vector<double> scale;

    static Standardizer fit(const Dataset& train);
    void apply(std::span<const double> raw, std::span<double> out) const;
    std::vector<double> transform(const Dataset& data) const;  // rows x dim
};

struct DatasetPair {
    Dataset train;
    Dataset test;  // evaluation rows only
    Standardizer standardizer;
};

struct PrepareOptions {
    SplitSpec split;
    std::uint64_t seed = 0;
    int calibration_levels = 100;
    int cohorts = 10;
    std::uint64_t cohort_seed = 0;
    /// Personalised training rows are subsampled to this many (0 keeps all).
    std::size_t max_train_rows = 0;
    /// Range [lo, hi) of levels for the constant baseline.
    int constant_lo = 100;
    int constant_hi = 400;
};

/// Split, feature tables and cohorts for one scenario; combinations are
/// assembled from it without recomputation.
struct PreparedScenario {
    PrepareOptions options;
    SplitResult split;
    std::vector<std::size_t> train_sample;  // indices into split.train used for personalised rows
    HistoricFeatures historic;
    std::map<int, std::vector<double>> player_features;
    std::map<int, std::vector<double>> level_features;
    std::map<int, std::vector<double>> agent_features;
    std::vector<int> excluded_players;  // no calibration records in train
    std::vector<CohortRecord> train_cohorts;  // from non-test players
    std::vector<CohortRecord> test_cohorts;   // from test players
    std::map<std::pair<int, int>, double> cohort_eval_targets;  // (cohort, level) on evaluation records
};

PreparedScenario prepare_scenario(std::span<const population::SimulatedAttempt> records,
                                  std::span<const puzzle::LevelSpec> levels,
                                  std::span<const agent::AgentFeatureRecord> agent_records, const PrepareOptions& options);

/// Rows for one combination. Throws ConfigError for Historic under CS and for
/// any row whose features are missing.
DatasetPair assemble(const PreparedScenario& prepared, Combination combination, Granularity granularity);

}  // namespace blastdiff::dataset
