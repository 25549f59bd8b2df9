#pragma once

#include <optional>
#include <span>

namespace blastdiff::experiments {

/// Both throw ConfigError on empty or mismatched inputs.
double rmse(std::span<const double> predictions, std::span<const double> targets);
double mae(std::span<const double> predictions, std::span<const double> targets);

/// Mean absolute difference of 1/attempts, in percent. Throws ConfigError for
/// attempts below 1.
double pass_rate_mae(std::span<const double> predicted_attempts, std::span<const double> target_attempts);

struct Interval {
    double lo = 0.0;
    double hi = 0.0;
};

/// Central interval from the (1-coverage)/2 and (1+coverage)/2 percentiles,
/// interpolated linearly between order statistics.
/// Empty when fewer than `min_count` values are given.
std::optional<Interval> prediction_interval(std::span<const double> predictions, double coverage = 0.8,
                                            std::size_t min_count = 10);

}  // namespace blastdiff::experiments
