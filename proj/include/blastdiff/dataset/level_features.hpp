#pragma once

#include <array>
#include <string>
#include <vector>

#include "blastdiff/puzzle/level.hpp"

namespace blastdiff::dataset {

struct LevelFeatures {
    int level_id = 0;
    int board_size = 0;  // non-void slots
    double colour_entropy = 0.0;
    int num_colours = 0;
    std::array<int, 6> board_piece_counts{};  // indexed by PieceKind
    puzzle::GoalCounts collect_goal_counts{};
};

LevelFeatures level_attributes(const puzzle::LevelSpec& level);

/// Numeric encoding used by the regressors, in the order of level_feature_names().
const std::vector<std::string>& level_feature_names();
std::vector<double> level_feature_values(const LevelFeatures& features);

}  // namespace blastdiff::dataset
