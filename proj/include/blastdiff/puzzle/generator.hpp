#pragma once

#include <cstdint>
#include <vector>

#include "blastdiff/puzzle/level.hpp"

namespace blastdiff::puzzle {

class GenerationError : public Error {
public:
    using Error::Error;
};

/// Ranges for synthetic levels. Difficulty ramps with the level's position
/// in [0, level_count): more colours, larger goals, more obstacles, and a
/// lower target pass rate for the greedy reference policy, which fixes the
/// move limit.
struct GeneratorConfig {
    int level_count = 500;
    int width = 9;
    int height = 7;
    int min_colours = 3;
    int max_colours = 5;
    bool uniform_weights = false;
    int max_void_slots = 4;
    int max_blockers = 8;
    int max_crates = 6;
    int min_colour_goal = 10;
    int max_colour_goal = 45;
    int tutorial_levels = 10;
    double tutorial_pass_rate = 0.95;
    double easy_pass_rate = 0.68;   // greedy target at the start of the ramp
    double hard_pass_rate = 0.27;   // greedy target at the end of the ramp
    double pass_rate_spread = 0.9;  // logit-space standard deviation around the ramp
    int min_move_limit = 4;
    int max_move_limit = 60;
    int calibration_playouts = 48;
    int calibration_cap = 150;
    int max_attempts = 24;
    int power_threshold = kDefaultPowerThreshold;

    friend bool operator==(const GeneratorConfig&, const GeneratorConfig&) = default;
};

/// Throws GenerationError naming the first unsatisfiable constraint.
void validate(const GeneratorConfig& config);

/// Deterministic in (config, level_id, seed).
LevelSpec generate_level(const GeneratorConfig& config, int level_id, std::uint64_t seed);

/// Levels 0..level_count-1.
std::vector<LevelSpec> generate_levels(const GeneratorConfig& config, std::uint64_t seed);

/// Target greedy pass rate the generator aims for at `level_id` before noise.
double ramp_pass_rate(const GeneratorConfig& config, int level_id);

}  // namespace blastdiff::puzzle
