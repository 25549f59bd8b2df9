#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "blastdiff/core/random.hpp"
#include "blastdiff/puzzle/level.hpp"

namespace blastdiff::population {

struct PopulationConfig {
    double skill_effect = 0.8;    // a: logit shift per unit of skill
    double booster_effect = 0.5;  // b: logit shift when a booster is used on the attempt
    double pass_rate_floor = 0.01;
    // Booster propensity = logistic(base + spread * z - skill_link * skill).
    double pre_booster_logit = -2.0;
    double in_booster_logit = -2.5;
    double booster_logit_spread = 0.8;
    double booster_skill_link = 0.4;
    // persistence_cap = persistence_min + round(Exp(mean = persistence_extra_mean)).
    int persistence_min = 25;
    double persistence_extra_mean = 60.0;
    // Moves used on the winning attempt, as a fraction of the move limit:
    // logistic(base - skill_link * skill + noise * z).
    double moves_ratio_logit = 1.0;
    double moves_ratio_skill_link = 0.4;
    double moves_ratio_noise = 0.5;
};

/// Throws ConfigError on invalid constants.
void validate(const PopulationConfig& config);

struct PlayerProfile {
    int player_id = 0;
    double skill = 0.0;
    double booster_propensity_pre = 0.0;
    double booster_propensity_in = 0.0;
    int persistence_cap = 1;
    friend bool operator==(const PlayerProfile&, const PlayerProfile&) = default;
};

struct AttemptRecord {
    int player_id = 0;
    int level_id = 0;
    int attempts = 1;
    friend bool operator==(const AttemptRecord&, const AttemptRecord&) = default;
};

/// Per-record observations that are not part of the regression target.
struct AttemptSide {
    int moves_used = 0;  // on the completing attempt
    int move_limit = 1;
    int pre_boosters = 0;  // attempts that used a pre-game booster
    int in_boosters = 0;   // attempts that used an in-game booster
    friend bool operator==(const AttemptSide&, const AttemptSide&) = default;
};

struct SimulatedAttempt {
    AttemptRecord record;
    AttemptSide side;
    friend bool operator==(const SimulatedAttempt&, const SimulatedAttempt&) = default;
};

struct PlayerFeatures {
    int player_id = 0;
    double moves_used_ratio_mean = 0.0;
    double in_game_booster_rate = 0.0;
    double pre_game_booster_rate = 0.0;
};

std::vector<PlayerProfile> sample_population(int n_players, std::uint64_t seed, const PopulationConfig& config = {});

/// clamp(logistic(logit(p) + a*skill + b*booster), floor, 1). A pass rate
/// below the floor is raised to it and counted in `floor_clamps` if given.
double success_probability(const PlayerProfile& profile, double level_pass_rate, bool booster_used,
                           const PopulationConfig& config = {}, std::int64_t* floor_clamps = nullptr);

/// Attempts until the first success, truncated at the persistence cap (which
/// counts as completion). Boosters are drawn per attempt and shift q.
SimulatedAttempt simulate_attempts(const PlayerProfile& profile, const puzzle::LevelSpec& level,
                                   double intrinsic_pass_rate, Rng& rng, const PopulationConfig& config = {},
                                   std::int64_t* floor_clamps = nullptr);
SimulatedAttempt simulate_attempts(const PlayerProfile& profile, const puzzle::LevelSpec& level,
                                   double intrinsic_pass_rate, std::uint64_t seed,
                                   const PopulationConfig& config = {});

struct SimulationResult {
    std::vector<SimulatedAttempt> attempts;  // ordered by (player_id, level_id)
    std::int64_t floor_clamps = 0;
};

/// Every player plays every level in order. Player p draws from the stream
/// derive_seed(seed, "player-attempts", p), so output is independent of the
/// worker count.
SimulationResult simulate_population(std::span<const PlayerProfile> players,
                                     std::span<const puzzle::LevelSpec> levels, std::span<const double> pass_rates,
                                     std::uint64_t seed, const PopulationConfig& config = {}, int workers = 1);

struct PlayerFeatureResult {
    std::vector<PlayerFeatures> features;  // ordered by player_id
    std::vector<int> excluded_players;     // no record on a calibration level
};

/// Means over records with level_id < calibration_levels.
PlayerFeatureResult compute_player_features(std::span<const SimulatedAttempt> records, int calibration_levels);

}  // namespace blastdiff::population
