#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "blastdiff/core/deadline.hpp"
#include "blastdiff/core/random.hpp"
#include "blastdiff/predictors/model.hpp"

namespace blastdiff::predictors {

/// Fully connected ReLU network with a linear scalar output.
/// Parameters are stored flat as [W_0, b_0, W_1, b_1, ...] with W_l [in x out].
class MlpNetwork {
public:
    MlpNetwork() = default;
    MlpNetwork(std::size_t inputs, std::vector<int> hidden, std::uint64_t seed);

    std::size_t inputs() const { return sizes_.front(); }
    const std::vector<std::size_t>& sizes() const { return sizes_; }
    std::size_t num_params() const { return params_.size(); }
    std::span<double> params() { return params_; }
    std::span<const double> params() const { return params_; }

    /// Predictions for n rows of x (n x inputs).
    void forward(std::size_t n, std::span<const double> x, std::span<double> out) const;
    double forward_one(std::span<const double> x) const;

    /// Loss 0.5 * mean (y_hat - y)^2 and its gradient (overwritten). When
    /// `dropout` > 0, hidden units are dropped with that probability using
    /// `rng` and the survivors scaled by 1/(1-dropout).
    double loss_gradient(std::size_t n, std::span<const double> x, std::span<const double> y, std::span<double> grad,
                         double dropout = 0.0, Rng* rng = nullptr) const;

private:
    std::vector<std::size_t> sizes_;   // inputs, hidden..., 1
    std::vector<std::size_t> offsets_;  // start of W_l; b_l follows it
    std::vector<double> params_;

    friend class MlpModel;
};

struct MlpConfig {
    std::vector<int> hidden = {64, 32};
    double dropout = 0.2;
    double learning_rate = 1e-3;
    int batch_size = 128;
    int max_epochs = 100;
    int patience = 8;
    double validation_fraction = 0.05;
    std::uint64_t seed = 0;
};

void validate(const MlpConfig& config);

/// Inputs are standardised with the given standardizer and the target with
/// its training mean and standard deviation.
class MlpModel final : public Model {
public:
    Method method() const override { return Method::NN; }
    double predict(const Sample& sample) const override;
    io::Json to_json() const override;
    static MlpModel from_json(const io::Json& j);

    const MlpNetwork& network() const { return net_; }
    const MlpConfig& config() const { return config_; }
    int epochs_trained() const { return epochs_; }

    friend MlpModel mlp_train(const dataset::Dataset& train, const dataset::Standardizer& standardizer,
                              const MlpConfig& config, const Deadline& deadline);

private:
    MlpConfig config_;
    MlpNetwork net_;
    dataset::Standardizer standardizer_;
    double y_mean_ = 0.0, y_scale_ = 1.0;
    int epochs_ = 0;
};

/// Adam on minibatches with early stopping on a seeded validation slice.
/// Throws DivergenceError if the loss becomes non-finite and TimeoutError once
/// the deadline passes (checked per epoch).
MlpModel mlp_train(const dataset::Dataset& train, const dataset::Standardizer& standardizer, const MlpConfig& config,
                   const Deadline& deadline = {});

}  // namespace blastdiff::predictors
