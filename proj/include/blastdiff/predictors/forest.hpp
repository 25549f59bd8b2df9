#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "blastdiff/core/deadline.hpp"
#include "blastdiff/predictors/model.hpp"

namespace blastdiff::predictors {

struct RfConfig {
    int n_trees = 100;
    int max_depth = 12;
    double feature_fraction = 1.0 / 3.0;  // features tried per split
    int min_samples_leaf = 5;
    bool bootstrap = true;
    std::uint64_t seed = 0;
    int workers = 1;
};

void validate(const RfConfig& config);

struct TreeNode {
    int feature = -1;  // -1 marks a leaf
    double threshold = 0.0;
    int left = -1;   // x[feature] <= threshold
    int right = -1;
    double value = 0.0;  // mean target of the node's training rows
};

using Tree = std::vector<TreeNode>;

double tree_predict(const Tree& tree, std::span<const double> x);

/// Fits one tree on rows `x` (n x d, row-major). Splits maximise the
/// reduction in squared error; ties keep the lowest feature index, then the
/// lowest threshold. Thresholds are midpoints between adjacent distinct values.
/// `importance` (size d) accumulates each split's error reduction.
Tree fit_tree(std::span<const double> x, std::span<const double> y, std::size_t d, std::span<const std::size_t> rows,
              int max_depth, int features_per_split, int min_samples_leaf, std::uint64_t seed,
              std::span<double> importance);

class RfModel final : public Model {
public:
    Method method() const override { return Method::RF; }
    double predict(const Sample& sample) const override;
    io::Json to_json() const override;
    static RfModel from_json(const io::Json& j);

    const std::vector<Tree>& trees() const { return trees_; }
    std::vector<Tree>& trees() { return trees_; }
    const RfConfig& config() const { return config_; }
    /// Total squared-error reduction per feature, averaged over trees.
    const std::vector<double>& importance() const { return importance_; }
    const std::vector<std::string>& feature_names() const { return feature_names_; }

    friend RfModel rf_train(const dataset::Dataset& train, const RfConfig& config, const Deadline& deadline);

private:
    RfConfig config_;
    std::vector<Tree> trees_;
    std::vector<double> importance_;
    std::vector<std::string> feature_names_;
    std::size_t dim_ = 0;
};

/// Trees are fitted from per-tree seeds, so results do not depend on `workers`.
/// Throws TimeoutError once the deadline passes (checked per tree).
RfModel rf_train(const dataset::Dataset& train, const RfConfig& config, const Deadline& deadline = {});

}  // namespace blastdiff::predictors
