#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "blastdiff/core/random.hpp"
#include "blastdiff/puzzle/level.hpp"

namespace blastdiff::puzzle {

struct Action {
    int x = 0;
    int y = 0;
    friend bool operator==(const Action&, const Action&) = default;
};

struct StepOutcome {
    int cleared_count = 0;
    /// Goal progress credited this step (never more than what remained).
    GoalCounts goals_collected{};
    bool power_piece_created = false;
    bool power_combo_triggered = false;
    bool completed = false;
    bool failed = false;

    int total_goals_collected() const { return total(goals_collected); }
};

enum class EpisodeStatus { Ongoing, Completed, Failed };

class IllegalActionError : public Error {
public:
    using Error::Error;
};

/// Mutable game state for one episode. Self-contained: it copies the level
/// parameters it needs, so it outlives the LevelSpec it was started from.
class BoardState {
public:
    /// Fresh board from the level's initial layout. Refill draws come from
    /// `episode_seed`.
    static BoardState start(const LevelSpec& level, std::uint64_t episode_seed,
                            int episode_cap = kDefaultEpisodeCap);

    int width() const { return width_; }
    int height() const { return height_; }
    int num_cells() const { return width_ * height_; }
    int move_limit() const { return move_limit_; }
    int episode_cap() const { return episode_cap_; }
    int moves_used() const { return moves_used_; }
    const GoalCounts& goals_remaining() const { return goals_remaining_; }
    int total_goals_remaining() const { return total(goals_remaining_); }

    const Cell& at(int x, int y) const { return cells_[static_cast<std::size_t>(y * width_ + x)]; }
    const Cell& at(int index) const { return cells_[static_cast<std::size_t>(index)]; }
    /// Direct cell edit for constructing test positions.
    void set(int x, int y, Cell cell) { cells_[static_cast<std::size_t>(y * width_ + x)] = cell; }

    bool goals_met() const { return total_goals_remaining() == 0; }
    bool is_legal(Action a) const;
    bool has_legal_action() const;
    /// One byte per cell (row-major), 1 where a tap is legal.
    std::vector<std::uint8_t> legal_mask() const;
    void legal_mask(std::span<std::uint8_t> out) const;
    /// Size of the same-colour basic cluster containing each cell (0 for non-basic).
    std::array<std::uint8_t, kMaxCells> cluster_sizes() const;

    /// Applies a legal tap in place. Throws IllegalActionError otherwise.
    StepOutcome apply(Action a);

    EpisodeStatus status() const;

    friend bool operator==(const BoardState&, const BoardState&) = default;

private:
    int index(int x, int y) const { return y * width_ + x; }
    int flood_fill(int start, std::array<int, kMaxCells>& members) const;
    void damage(int idx, StepOutcome& out, int& cleared);
    void remove_basic(int idx, GoalCounts& raw, int& cleared);
    void settle();

    int width_ = 0;
    int height_ = 0;
    int move_limit_ = 1;
    int episode_cap_ = kDefaultEpisodeCap;
    int power_threshold_ = kDefaultPowerThreshold;
    int num_colours_ = 0;
    bool refill_ = true;
    int moves_used_ = 0;
    std::array<double, kMaxColours> cumulative_weights_{};
    std::array<Cell, kMaxCells> cells_{};
    GoalCounts goals_remaining_{};
    Rng rng_;
};

/// Legal-tap mask over width*height cells.
std::vector<std::uint8_t> legal_actions(const BoardState& board);

/// Functional form of BoardState::apply.
std::pair<BoardState, StepOutcome> apply_action(const BoardState& board, Action action);

/// Completed iff all goals are met; failed iff the episode cap is reached or
/// no legal tap exists; otherwise ongoing. Exceeding the level's move limit
/// alone does not end the episode.
EpisodeStatus episode_status(const BoardState& board, int episode_cap);

}  // namespace blastdiff::puzzle
