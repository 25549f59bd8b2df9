#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "blastdiff/core/random.hpp"
#include "blastdiff/puzzle/board.hpp"

namespace blastdiff::puzzle {

enum class PolicyKind { UniformRandom, GreedyLargestCluster };

PolicyKind parse_policy_kind(std::string_view name);
std::string_view to_string(PolicyKind kind);

/// Picks a legal tap. Uniform draws from `rng`; greedy taps the largest
/// cluster (a power piece scores its blast area), ties to the lowest cell index.
/// Precondition: the board has a legal action.
Action choose_action(PolicyKind kind, const BoardState& board, Rng& rng);

struct PlayoutResult {
    bool completed = false;
    int moves = 0;
};

/// Plays one episode of at most `max_moves` taps. Board refill and policy
/// randomness derive from (seed, playout_index).
PlayoutResult playout(const LevelSpec& level, PolicyKind kind, std::uint64_t seed,
                      std::uint64_t playout_index, int max_moves);

/// Fraction of playouts completing within the level's move limit.
double intrinsic_pass_rate(const LevelSpec& level, PolicyKind kind, int n_playouts,
                           std::uint64_t seed);

/// Moves needed to complete in each playout (-1 if not completed within `cap`).
std::vector<int> moves_to_complete(const LevelSpec& level, PolicyKind kind, int n_playouts,
                                   std::uint64_t seed, int cap);

}  // namespace blastdiff::puzzle
