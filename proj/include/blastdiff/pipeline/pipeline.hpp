#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "blastdiff/experiments/experiment.hpp"
#include "blastdiff/pipeline/config.hpp"

namespace blastdiff::pipeline {

inline constexpr const char* kSoftwareVersion = "1.0.0";

struct StageOutcome {
    std::string stage;
    bool ran = false;  // false: cache hit
    double seconds = 0.0;
};

/// Stage runner over one output directory. Each stage records its config
/// hash, input hashes and output hashes in <output_dir>/manifest.json and is
/// skipped when all of them still match.
class Pipeline {
public:
    explicit Pipeline(PipelineConfig config, std::ostream* log = nullptr);

    const PipelineConfig& config() const { return config_; }

    StageOutcome gen_levels(bool force = false);
    StageOutcome train_agents(bool force = false);
    StageOutcome simulate_players(bool force = false);
    StageOutcome build_dataset(bool force = false);
    StageOutcome evaluate(bool force = false);

    /// All stages in order. Once a stage runs, every later stage runs too.
    std::vector<StageOutcome> run_all(bool force = false);

    std::filesystem::path levels_path() const;
    std::filesystem::path agent_logs_path() const;
    std::filesystem::path agent_features_path() const;
    std::filesystem::path pass_rates_path() const;
    std::filesystem::path attempts_path() const;
    std::filesystem::path players_path() const;
    std::filesystem::path datasets_dir() const;
    std::filesystem::path results_dir() const;
    std::filesystem::path manifest_path() const;

private:
    PipelineConfig config_;
    std::ostream* log_;

    template <typename Body>
    StageOutcome stage(const std::string& name, const std::vector<std::string>& sections,
                       const std::vector<std::filesystem::path>& inputs, bool force, Body body);
    void say(const std::string& line) const;
};

/// All experiment repetitions for both scenarios from in-memory artifacts.
experiments::ResultTable run_experiments(const PipelineConfig& config,
                                         std::span<const population::SimulatedAttempt> records,
                                         std::span<const puzzle::LevelSpec> levels,
                                         std::span<const agent::AgentFeatureRecord> agents, std::ostream* log = nullptr);

/// Trains `seeds` agents per level and extracts their features; parallel over
/// (level, seed) jobs, deterministic in the master seed.
struct AgentStageResult {
    std::vector<agent::AgentTrainingLog> logs;  // ordered by (level, seed)
    std::vector<agent::AgentFeatureRecord> features;
};
AgentStageResult run_agents(const PipelineConfig& config, std::span<const puzzle::LevelSpec> levels,
                            std::ostream* log = nullptr);

/// Greedy-policy intrinsic pass rate of each level.
std::vector<double> level_pass_rates(const PipelineConfig& config, std::span<const puzzle::LevelSpec> levels);

}  // namespace blastdiff::pipeline
