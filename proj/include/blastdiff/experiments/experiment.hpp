#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "blastdiff/dataset/dataset.hpp"
#include "blastdiff/predictors/fm.hpp"
#include "blastdiff/predictors/forest.hpp"
#include "blastdiff/predictors/mlp.hpp"

namespace blastdiff::experiments {

/// How predictions are compared with targets.
///   Personalised: one row per (player, level) evaluation record.
///   LevelAggregate: per-level mean of personalised predictions against the
///     per-level mean attempts of the test players.
///   CohortFeatures: one row per (cohort, level), predicted from cohort features.
enum class Grouping { Personalised, LevelAggregate, CohortFeatures };

std::string to_string(Grouping g);
Grouping parse_grouping(const std::string& text);

struct ExperimentConfig {
    std::vector<predictors::Method> methods = {predictors::Method::FM, predictors::Method::RF, predictors::Method::NN};
    std::vector<dataset::Combination> combinations = {dataset::Combination::Historic, dataset::Combination::PlayerLevel,
                                                      dataset::Combination::Agent, dataset::Combination::All};
    std::vector<int> fm_factors = {1, 2, 4, 8};
    std::vector<bool> fm_bias = {true, false};
    predictors::FmConfig fm;
    predictors::RfConfig rf;
    predictors::MlpConfig mlp;
    /// Training rows per method are subsampled to these caps (0 keeps all).
    std::size_t fm_max_rows = 0;
    std::size_t rf_max_rows = 20000;
    std::size_t nn_max_rows = 100000;
    bool cohort_experiment = true;
    int constant_lo = 100;
    int constant_hi = 400;
    double interval_coverage = 0.8;
    /// Adds an "oracle" cell that predicts the evaluation targets themselves.
    bool include_oracle = false;
    /// Per-cell training time limit in seconds (0 = none).
    double cell_timeout_seconds = 0.0;
    int workers = 1;
};

void validate(const ExperimentConfig& config);

/// One evaluated cell. Baselines use combination "-"; factors and bias are
/// only set for FM (0 and -1 otherwise).
struct ResultRow {
    int repetition = 0;
    dataset::Scenario scenario = dataset::Scenario::PD;
    Grouping grouping = Grouping::Personalised;
    std::string method;
    std::string combination;
    int factors = 0;
    int bias = -1;
    std::string status = "ok";  // ok, timeout, failed
    std::string message;
    double rmse = 0.0;
    double mae = 0.0;
    double pass_rate_mae = 0.0;
    std::size_t n_eval = 0;
    std::size_t n_train = 0;
    double runtime_seconds = 0.0;

    /// Identifies the cell independent of repetition and scenario.
    std::string cell_key() const;
};

/// Per-level prediction dump for the aggregate and cohort groupings.
struct LevelPrediction {
    int repetition = 0;
    dataset::Scenario scenario = dataset::Scenario::PD;
    Grouping grouping = Grouping::LevelAggregate;
    std::string method;
    std::string combination;
    int factors = 0;
    int bias = -1;
    int level_id = 0;
    int entity_id = -1;  // cohort id for the cohort grouping
    double prediction = 0.0;
    double target = 0.0;
    std::size_t n = 0;  // personalised predictions behind the level mean
    bool has_interval = false;
    double lo = 0.0;
    double hi = 0.0;
};

struct ImportanceRow {
    int repetition = 0;
    dataset::Scenario scenario = dataset::Scenario::PD;
    Grouping grouping = Grouping::Personalised;
    std::string combination;
    std::string feature;
    std::string group;
    double importance = 0.0;
};

struct ResultTable {
    std::vector<ResultRow> rows;
    std::vector<LevelPrediction> level_predictions;
    std::vector<ImportanceRow> importances;

    void append(ResultTable other);
    /// Deterministic order independent of the order cells finished in.
    void sort();
};

/// Personalised rows plus their level-aggregate evaluation, for every
/// method x combination x FM ablation cell and the baselines.
ResultTable run_experiment_a(const dataset::PreparedScenario& prepared, const ExperimentConfig& config, int repetition,
                             std::uint64_t seed);

/// Cohort-feature rows for every method x combination x FM ablation cell and
/// the constant baseline (plus the per-level baseline under PD).
ResultTable run_experiment_b(const dataset::PreparedScenario& prepared, const ExperimentConfig& config, int repetition,
                             std::uint64_t seed);

struct DifferenceRow {
    Grouping grouping = Grouping::Personalised;
    std::string method;
    std::string combination;
    int factors = 0;
    int bias = -1;
    double pd_rmse = 0.0;  // mean over repetitions
    double cs_rmse = 0.0;
    int repetitions = 0;
    double difference() const { return cs_rmse - pd_rmse; }
};

/// CS minus PD RMSE for cells that completed in both scenarios, averaged
/// over the repetitions where both are present.
std::vector<DifferenceRow> difference_table(const ResultTable& table);

/// Per-feature-group mean RF importance for one scenario/grouping/combination,
/// averaged over repetitions. Returns 0 for groups without rows.
double mean_importance(const ResultTable& table, dataset::Scenario scenario, Grouping grouping,
                       dataset::Combination combination, dataset::FeatureGroup group);

/// Deterministic subsample of at most `max_rows` rows (all rows when 0 or fewer
/// rows exist). Row order is preserved.
dataset::Dataset subsample_rows(const dataset::Dataset& data, std::size_t max_rows, std::uint64_t seed);

}  // namespace blastdiff::experiments
