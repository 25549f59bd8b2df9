#pragma once

#include <span>
#include <vector>

namespace blastdiff {

double mean(std::span<const double> xs);
/// Population standard deviation (divides by n).
double stddev(std::span<const double> xs);
/// Linear-interpolation percentile on sorted positions q*(n-1); q in [0,1].
double percentile(std::vector<double> xs, double q);

double logistic(double z);
double logit(double p);

struct RankCorrelation {
    double rho = 0.0;
    double p_value = 1.0;
};
/// Spearman rank correlation with average ranks for ties; the p-value uses
/// the t approximation with n-2 degrees of freedom (two-sided).
RankCorrelation spearman(std::span<const double> x, std::span<const double> y);

}  // namespace blastdiff
