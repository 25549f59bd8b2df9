#pragma once

#include <cstdint>
#include <vector>

#include "blastdiff/puzzle/board.hpp"

namespace blastdiff::agent {

/// Encoding channels. A piece adds its hit points to every channel whose
/// mechanic it has.
enum Channel : int {
    kColour0 = 0,  // kColour0 + c for basic pieces of colour c
    kBlocker = puzzle::kMaxColours,
    kGoalPiece,  // crates, and basic pieces of a colour that still has an open goal
    kPower,
    kClickable,
    kNumChannels,
};

struct Observation {
    int width = 0;
    int height = 0;
    /// height x width x kNumChannels, channel fastest.
    std::vector<float> tensor;
    int moves_taken = 0;
    int moves_left = 0;  // move_limit - moves_taken; negative past the limit
    int total_goals_remaining = 0;
    std::vector<std::uint8_t> action_mask;

    // Normalisers carried along for the network input.
    int move_limit = 1;
    int initial_goals = 1;
    int episode_cap = puzzle::kDefaultEpisodeCap;

    float at(int x, int y, int channel) const {
        return tensor[static_cast<std::size_t>((y * width + x) * kNumChannels + channel)];
    }
};

Observation encode_observation(const puzzle::BoardState& board, const puzzle::LevelSpec& level);
/// Re-encodes into `out`, reusing its buffers.
void encode_observation(const puzzle::BoardState& board, const puzzle::LevelSpec& level, Observation& out);

}  // namespace blastdiff::agent
