#pragma once

#include "blastdiff/puzzle/board.hpp"

namespace blastdiff::agent {

inline constexpr double kGoalReward = 0.1;
inline constexpr double kCompletionReward = 0.8;
inline constexpr double kMoveBonusPerMove = 0.05;
inline constexpr double kMovePenaltyFloor = -0.8;
inline constexpr double kComboReward = 0.1;

/// 0.1 per goal collected, 0.8 + max(-0.8, 0.05 (M - n)) on completion with
/// n the moves used, and 0.1 per power-piece combination.
double compute_reward(const puzzle::StepOutcome& outcome, const puzzle::BoardState& board,
                      const puzzle::LevelSpec& level);

}  // namespace blastdiff::agent
