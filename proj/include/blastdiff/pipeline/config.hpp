#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include "blastdiff/agent/ppo.hpp"
#include "blastdiff/dataset/split.hpp"
#include "blastdiff/experiments/experiment.hpp"
#include "blastdiff/population/population.hpp"
#include "blastdiff/puzzle/generator.hpp"

namespace blastdiff::pipeline {

struct AgentStageConfig {
    std::int64_t budget_steps = 200000;
    std::int64_t checkpoint_interval = 2000;
    int seeds = 4;
    std::int64_t window_lo = 20000;
    std::int64_t window_hi = 180000;
    agent::PpoConfig ppo;
};

struct PopulationStageConfig {
    int players = 20000;
    int pass_rate_playouts = 200;
    population::PopulationConfig model;
};

struct DatasetStageConfig {
    dataset::SplitSpec split;
    int calibration_levels = 100;
    int cohorts = 10;
    std::size_t max_train_rows = 200000;
    int constant_lo = 100;
    int constant_hi = 400;
};

struct PipelineConfig {
    std::uint64_t master_seed = 1;
    std::filesystem::path output_dir = "out";
    int workers = 1;
    puzzle::GeneratorConfig generator;
    AgentStageConfig agent;
    PopulationStageConfig population;
    DatasetStageConfig dataset;
    experiments::ExperimentConfig experiments;
    int repetitions = 3;
};

/// One settable key. `section` and `name` form the "section.name" key used in
/// files and overrides.
struct ConfigField {
    std::string section;
    std::string name;
    std::string help;
    std::function<std::string()> get;
    std::function<void(const std::string&)> set;

    std::string key() const { return section + "." + name; }
};

/// All keys of `config`, bound by reference.
std::vector<ConfigField> config_fields(PipelineConfig& config);

/// INI-style text: "[section]" headers, "key = value" lines, '#' comments.
/// Unknown keys, malformed lines and invalid values throw ConfigError naming
/// the source, line and key. The result is validated.
PipelineConfig parse_config_text(const std::string& text, const std::string& source = "<config>");
PipelineConfig parse_config(const std::filesystem::path& path);

/// Applies "section.key=value".
void apply_override(PipelineConfig& config, const std::string& assignment);

/// Every key, grouped by section; parses back to an equal config.
std::string serialise(const PipelineConfig& config);

/// Serialised keys of the given sections only (plus pipeline.master_seed),
/// for stage cache keys.
std::string serialise_sections(const PipelineConfig& config, const std::vector<std::string>& sections);

/// Throws ConfigError naming the offending key.
void validate(const PipelineConfig& config);

/// Options for dataset preparation in one scenario and repetition.
dataset::PrepareOptions prepare_options(const PipelineConfig& config, dataset::Scenario scenario, int repetition);

/// Experiment settings with the dataset's constant range and worker count applied.
experiments::ExperimentConfig experiment_config(const PipelineConfig& config);

}  // namespace blastdiff::pipeline
