#pragma once

#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "blastdiff/core/deadline.hpp"
#include "blastdiff/predictors/model.hpp"

namespace blastdiff::predictors {

struct SparseEntry {
    int index = 0;
    double value = 0.0;
};

/// w0 + sum_i w_i x_i + sum_{i<j} <v_i, v_j> x_i x_j
struct FmParams {
    bool global_bias = true;
    double w0 = 0.0;
    std::vector<double> w;  // n
    int k = 1;
    std::vector<double> v;  // n x k, row-major

    std::size_t dim() const { return w.size(); }
};

/// Linear-time evaluation. The dense overload throws ConfigError on a
/// dimension mismatch.
double fm_predict(const FmParams& params, std::span<const double> x);
double fm_predict(const FmParams& params, std::span<const SparseEntry> x);

/// Gradient of 0.5 (y_hat - y)^2 w.r.t. (w0, w, v), laid out as
/// [w0, w_0..w_{n-1}, v row-major]. Returns y_hat.
double fm_gradient(const FmParams& params, std::span<const double> x, double y, std::span<double> grad);

struct FmConfig {
    int factors = 4;
    bool global_bias = true;
    bool entity_onehot = true;
    bool level_onehot = true;
    double learning_rate = 0.002;
    double reg_w = 1e-4;
    double reg_v = 1e-3;
    double init_std = 0.01;
    /// Per-sample gradient norm limit on the standardised target scale (0 = off).
    double grad_clip = 5.0;
    int max_epochs = 60;
    int patience = 4;
    double validation_fraction = 0.05;
    std::uint64_t seed = 0;
};

void validate(const FmConfig& config);

/// FM over [standardised dense columns, entity one-hots, level one-hots].
/// One-hots of ids not seen in training are dropped at prediction time.
class FmModel final : public Model {
public:
    FmModel() = default;
    Method method() const override { return Method::FM; }
    double predict(const Sample& sample) const override;
    io::Json to_json() const override;
    static FmModel from_json(const io::Json& j);

    const FmParams& params() const { return params_; }
    FmParams& params() { return params_; }
    const FmConfig& config() const { return config_; }
    int epochs_trained() const { return epochs_; }

    /// Sparse encoding of a sample under this model's index map.
    void encode(const Sample& sample, std::vector<SparseEntry>& out) const;
    /// Index of an entity/level one-hot, or -1 if unseen.
    int entity_index(int id) const;
    int level_index(int id) const;

    friend FmModel fm_train(const dataset::Dataset& train, const dataset::Standardizer& standardizer,
                            const FmConfig& config, const Deadline& deadline);

private:
    FmConfig config_;
    FmParams params_;
    dataset::Standardizer standardizer_;
    std::size_t dense_dim_ = 0;
    std::vector<int> entity_ids_, level_ids_;
    std::unordered_map<int, int> entity_index_, level_index_;
    int epochs_ = 0;

    void rebuild_index();
};

/// SGD with L2 and early stopping on a seeded validation slice. Throws
/// DivergenceError if the loss becomes non-finite and TimeoutError once the
/// deadline passes (checked per epoch).
FmModel fm_train(const dataset::Dataset& train, const dataset::Standardizer& standardizer, const FmConfig& config,
                 const Deadline& deadline = {});

}  // namespace blastdiff::predictors
