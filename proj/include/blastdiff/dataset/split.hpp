#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "blastdiff/population/population.hpp"

namespace blastdiff::dataset {

enum class Scenario { PD, CS };

std::string to_string(Scenario s);
Scenario parse_scenario(const std::string& text);

struct SplitSpec {
    Scenario scenario = Scenario::PD;
    int n_obs = 100;        // PD: test players' levels <= n_obs are training data
    int cs_boundary = 400;  // CS: training levels are < cs_boundary
    int eval_floor = 400;   // evaluation uses test-player records with level > eval_floor
    double test_player_fraction = 0.01;
    friend bool operator==(const SplitSpec&, const SplitSpec&) = default;
};

/// Throws ConfigError if the spec is inconsistent.
void validate(const SplitSpec& spec);

struct SplitResult {
    std::vector<population::SimulatedAttempt> train;
    std::vector<population::SimulatedAttempt> test;
    /// Per test record: 1 iff the record belongs to a test player and level > eval_floor.
    std::vector<std::uint8_t> eval_mask;
    std::vector<int> test_players;  // sorted

    std::size_t eval_count() const;
    std::size_t ignored_count() const { return test.size() - eval_count(); }
    std::vector<population::SimulatedAttempt> eval_records() const;
};

/// Test players are drawn by player count: max(1, round(fraction * players)).
/// PD: test players' records above n_obs go to test, everything else to train.
/// CS: records with level < cs_boundary go to train, the rest to test.
/// Throws ConfigError when no record survives the evaluation mask.
SplitResult split(std::span<const population::SimulatedAttempt> records, const SplitSpec& spec, std::uint64_t seed);

std::vector<int> choose_test_players(std::vector<int> player_ids, double fraction, std::uint64_t seed);

/// Means computed from training records only. Lookups of absent ids throw.
class HistoricFeatures {
public:
    HistoricFeatures() = default;
    HistoricFeatures(std::span<const population::SimulatedAttempt> train, int calibration_levels);

    bool has_level(int level_id) const { return level_.contains(level_id); }
    bool has_player(int player_id) const { return player_.contains(player_id); }
    double avg_attempts_level(int level_id) const;
    double avg_attempts_player(int player_id) const;

private:
    std::map<int, double> level_;
    std::map<int, double> player_;
};

struct CohortRecord {
    int cohort_id = 0;
    std::vector<int> members;  // sorted
    population::PlayerFeatures features;  // member means; player_id holds the cohort id
    std::map<int, double> level_targets;  // presence-weighted member mean attempts per level
};

/// Uniform random partition of `players` into k nonempty cohorts numbered
/// first_id, first_id+1, ... Features are member means over `player_features`;
/// targets come from `records`.
std::vector<CohortRecord> make_cohorts(std::span<const int> players, int k, std::uint64_t seed,
                                       std::span<const population::SimulatedAttempt> records,
                                       std::span<const population::PlayerFeatures> player_features, int first_id = 0);

}  // namespace blastdiff::dataset
