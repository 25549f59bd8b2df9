#pragma once

#include <map>
#include <span>

#include "blastdiff/population/population.hpp"
#include "blastdiff/predictors/model.hpp"

namespace blastdiff::predictors {

/// Mean training attempts of each level. Throws ConfigError for a level with
/// no training data.
class PerLevelBaseline final : public Model {
public:
    explicit PerLevelBaseline(std::map<int, double> level_means) : means_(std::move(level_means)) {}
    Method method() const override { return Method::PerLevel; }
    double predict(const Sample& sample) const override;
    io::Json to_json() const override;
    static PerLevelBaseline from_json(const io::Json& j);
    const std::map<int, double>& level_means() const { return means_; }

private:
    std::map<int, double> means_;
};

/// One number for every query.
class ConstantBaseline final : public Model {
public:
    explicit ConstantBaseline(double value) : value_(value) {}
    Method method() const override { return Method::Constant; }
    double predict(const Sample&) const override { return value_; }
    io::Json to_json() const override;
    static ConstantBaseline from_json(const io::Json& j);
    double value() const { return value_; }

private:
    double value_;
};

PerLevelBaseline baseline_per_level(std::span<const population::AttemptRecord> train);
PerLevelBaseline baseline_per_level(const dataset::Dataset& train);

/// Mean attempts over training records with level in [level_lo, level_hi).
/// Throws ConfigError if the range holds no records.
ConstantBaseline baseline_constant(std::span<const population::AttemptRecord> train, int level_lo, int level_hi);
ConstantBaseline baseline_constant(const dataset::Dataset& train, int level_lo, int level_hi);

}  // namespace blastdiff::predictors
