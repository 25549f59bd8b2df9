#pragma once

#include <filesystem>
#include <vector>

#include "blastdiff/agent/features.hpp"
#include "blastdiff/agent/ppo.hpp"
#include "blastdiff/io/records.hpp"

namespace blastdiff::agent {

io::Json to_json(const AgentTrainingLog& log);
AgentTrainingLog log_from_json(const io::Json& j);
io::Json to_json(const AgentFeatureRecord& record);
AgentFeatureRecord features_from_json(const io::Json& j);

void write_training_logs(const std::filesystem::path& path, const std::vector<AgentTrainingLog>& logs);
std::vector<AgentTrainingLog> read_training_logs(const std::filesystem::path& path);
void write_agent_features(const std::filesystem::path& path, const std::vector<AgentFeatureRecord>& records);
std::vector<AgentFeatureRecord> read_agent_features(const std::filesystem::path& path);

}  // namespace blastdiff::agent
