#pragma once

#include <cstdint>
#include <vector>

#include "blastdiff/puzzle/level.hpp"

namespace blastdiff::agent {

struct PpoConfig {
    int rollout_steps = 512;
    int minibatch_size = 128;
    int epochs = 2;
    double gamma = 0.99;
    double gae_lambda = 0.95;
    double clip = 0.2;
    double learning_rate = 1.5e-3;
    double entropy_coef = 0.01;
    double value_coef = 0.5;
    double max_grad_norm = 0.5;
    int conv_channels = 16;
    int value_hidden = 32;
    int episode_cap = puzzle::kDefaultEpisodeCap;
};

/// Throws ConfigError on out-of-range hyperparameters.
void validate(const PpoConfig& config);

struct Checkpoint {
    std::int64_t training_step = 0;
    double avg_episode_length = 0.0;
    double completion_rate_within_m = 0.0;
    double completion_rate_within_cap = 0.0;
    double action_entropy = 0.0;
    /// Largest per-decision entropy minus ln(#legal) since the previous checkpoint.
    double max_entropy_excess = 0.0;
    double policy_loss = 0.0;
    double value_loss = 0.0;
    friend bool operator==(const Checkpoint&, const Checkpoint&) = default;
};

struct AgentTrainingLog {
    int level_id = 0;
    std::uint64_t seed = 0;
    std::int64_t budget_steps = 0;
    std::int64_t checkpoint_interval = 0;
    std::vector<Checkpoint> checkpoints;
    friend bool operator==(const AgentTrainingLog&, const AgentTrainingLog&) = default;
};

/// PPO with masked action sampling on a single level. Checkpoints are taken
/// every `checkpoint_interval` environment steps from rolling statistics of
/// the last 100 finished episodes. Throws DivergenceError on a non-finite loss.
AgentTrainingLog train_agent(const puzzle::LevelSpec& level, std::uint64_t seed, std::int64_t budget_steps,
                             std::int64_t checkpoint_interval, const PpoConfig& config = {});

}  // namespace blastdiff::agent
