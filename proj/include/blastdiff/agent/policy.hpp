#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "blastdiff/agent/observation.hpp"

namespace blastdiff::agent {

/// Actor-critic network for one board geometry.
///
/// Policy: a 3x3 convolution over the encoded board (ReLU), then a 1x1
/// projection to one logit per cell plus a per-cell bias. Masked cells get
/// probability exactly zero.
/// Value: mean-pooled conv features and the three scalars through one tanh
/// hidden layer.
class PolicyNetwork {
public:
    static constexpr int kPatchCells = 9;
    static constexpr int kScalars = 3;

    PolicyNetwork() = default;
    PolicyNetwork(int width, int height, int conv_channels, int value_hidden, std::uint64_t seed);

    int width() const { return width_; }
    int height() const { return height_; }
    int cells() const { return width_ * height_; }
    int patch_size() const { return kPatchCells * kNumChannels; }
    int conv_channels() const { return conv_; }
    int value_hidden() const { return hidden_; }
    std::size_t num_params() const { return params_.size(); }
    std::span<float> params() { return params_; }
    std::span<const float> params() const { return params_; }

    /// im2col patches (cells x patch_size) and normalised scalars for one observation.
    void build_inputs(const Observation& obs, float* patches, float* scalars) const;

    struct Activations {
        int n = 0;
        std::vector<float> h1;      // n*cells x conv
        std::vector<float> vin;     // n x (conv + kScalars)
        std::vector<float> vh;      // n x hidden
        std::vector<float> logits;  // n x cells
        std::vector<float> probs;   // n x cells
        std::vector<float> values;  // n
    };

    void forward(int n, const float* patches, const float* scalars, const std::uint8_t* masks,
                 Activations& act) const;

    /// Accumulates dLoss/dparams into `grad` given dLoss/dlogits and dLoss/dvalue.
    void backward(int n, const float* patches, const Activations& act, const float* dlogits,
                  const float* dvalues, std::span<float> grad) const;

    /// Masked action distribution for a single observation.
    std::vector<double> action_distribution(const Observation& obs) const;

private:
    int width_ = 0;
    int height_ = 0;
    int conv_ = 0;
    int hidden_ = 0;
    // Offsets into params_.
    std::size_t w1_ = 0, b1_ = 0, w2_ = 0, bcell_ = 0, wv1_ = 0, bv1_ = 0, wv2_ = 0, bv2_ = 0;
    std::vector<float> params_;
};

}  // namespace blastdiff::agent
