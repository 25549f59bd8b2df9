#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "blastdiff/core/error.hpp"

namespace blastdiff::puzzle {

inline constexpr int kMaxWidth = 13;
inline constexpr int kMaxHeight = 9;
inline constexpr int kMaxCells = kMaxWidth * kMaxHeight;
inline constexpr int kMaxColours = 6;
inline constexpr int kMaxHitPoints = 3;
inline constexpr int kDefaultPowerThreshold = 5;
inline constexpr int kDefaultEpisodeCap = 100;

enum class PieceKind : std::uint8_t {
    Empty,
    Basic,
    Blocker,
    Goal,  // collectible crate: collected when its hit points reach zero
    Power,
    Void,  // slot that is not part of the board
};

struct Cell {
    PieceKind kind = PieceKind::Empty;
    std::int8_t colour = -1;
    std::uint8_t hp = 0;

    static constexpr Cell empty() { return {}; }
    static constexpr Cell void_slot() { return {PieceKind::Void, -1, 0}; }
    static constexpr Cell basic(int colour) {
        return {PieceKind::Basic, static_cast<std::int8_t>(colour), 1};
    }
    static constexpr Cell blocker(int hp) {
        return {PieceKind::Blocker, -1, static_cast<std::uint8_t>(hp)};
    }
    static constexpr Cell goal(int hp) { return {PieceKind::Goal, -1, static_cast<std::uint8_t>(hp)}; }
    static constexpr Cell power() { return {PieceKind::Power, -1, 1}; }

    bool occupied() const { return kind != PieceKind::Empty && kind != PieceKind::Void; }
    friend bool operator==(const Cell&, const Cell&) = default;
};

// Goal kinds: index 0 collects crates, index 1 + c collects basic pieces of colour c.
inline constexpr int kNumGoalKinds = 1 + kMaxColours;
inline constexpr int kCrateGoal = 0;
constexpr int colour_goal(int colour) { return 1 + colour; }
using GoalCounts = std::array<int, kNumGoalKinds>;

inline int total(const GoalCounts& g) {
    int t = 0;
    for (int v : g) t += v;
    return t;
}

class LevelError : public Error {
public:
    using Error::Error;
};

/// Immutable puzzle definition. `cells` is row-major with y = 0 the top row.
struct LevelSpec {
    int level_id = 0;
    int width = 0;
    int height = 0;
    std::vector<Cell> cells;
    std::vector<double> colour_weights;
    int move_limit = 1;
    GoalCounts goals{};
    std::uint64_t seed = 0;
    int power_threshold = kDefaultPowerThreshold;
    bool refill = true;
    bool tutorial = false;

    int num_colours() const { return static_cast<int>(colour_weights.size()); }
    int num_cells() const { return width * height; }
    const Cell& at(int x, int y) const { return cells[static_cast<std::size_t>(y * width + x)]; }
    Cell& at(int x, int y) { return cells[static_cast<std::size_t>(y * width + x)]; }

    friend bool operator==(const LevelSpec&, const LevelSpec&) = default;
};

/// Throws LevelError naming the first violated invariant.
void validate(const LevelSpec& level);

/// Count of pieces of each kind on the initial board (indexed by PieceKind).
std::array<int, 6> piece_counts(const LevelSpec& level);

std::string to_string(PieceKind kind);

}  // namespace blastdiff::puzzle
