#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "blastdiff/agent/ppo.hpp"

namespace blastdiff::agent {

struct StdWindow {
    std::int64_t lo = 0;
    std::int64_t hi = 0;
};

struct AgentFeatureRecord {
    int level_id = 0;
    double training_steps_to_min = 0.0;
    int move_limit = 0;
    double game_length_min = 0.0;
    double game_length_std = 0.0;
    double completion_rate_min = 0.0;
    double completion_rate_std = 0.0;
    double completion_rate_cap_min = 0.0;
    double completion_rate_cap_std = 0.0;
    double action_entropy_min = 0.0;
    double action_entropy_std = 0.0;
    double policy_loss_min = 0.0;
    double policy_loss_std = 0.0;
    double value_loss_min = 0.0;
    double value_loss_std = 0.0;
    int seeds = 0;
};

/// Feature names in the order returned by `feature_values` (level_id and seeds excluded).
const std::vector<std::string>& agent_feature_names();
std::vector<double> feature_values(const AgentFeatureRecord& record);

/// Per-seed statistics averaged over seeds. `_min` is read at the checkpoint
/// with the smallest average length (earliest on ties); `_std` is the
/// population standard deviation over checkpoints inside `window`.
AgentFeatureRecord extract_agent_features(const std::vector<AgentTrainingLog>& logs, StdWindow window,
                                          int move_limit);

}  // namespace blastdiff::agent
