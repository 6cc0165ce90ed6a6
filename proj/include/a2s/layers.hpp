#ifndef A2S_LAYERS_HPP
#define A2S_LAYERS_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "a2s/tensor.hpp"

// Forward and backward passes of every layer the matching network uses.
// Spatial layers take [N, C, H, W] batches; a rank-3 [C, H, W] input is
// treated as a batch of one and the result keeps rank 3.

namespace a2s {

enum class Mode { train, eval };

template <typename T>
struct LayerGradients {
    Tensor<T> input_grad;
    std::map<std::string, Tensor<T>> param_grads;
};

struct ConvGeometry {
    std::size_t pad_h = 0;
    std::size_t pad_w = 0;
    std::size_t stride_h = 1;
    std::size_t stride_w = 1;
};

/// Output extent of a convolution along one axis.
std::size_t conv_out_extent(std::size_t in, std::size_t kernel, std::size_t pad, std::size_t stride);

/// Cross-correlation (no kernel flip) plus per-channel bias.
/// kernels: [C_out, C_in, kH, kW], bias: [C_out].
template <typename T>
Tensor<T> conv2d(const Tensor<T>& input, const Tensor<T>& kernels, const Tensor<T>& bias,
                 const ConvGeometry& geom);

/// Gradients keyed "weight" and "bias". The input gradient is left empty
/// when `need_input_grad` is false.
template <typename T>
LayerGradients<T> conv2d_backward(const Tensor<T>& input, const Tensor<T>& kernels,
                                  const ConvGeometry& geom, const Tensor<T>& output_grad,
                                  bool need_input_grad = true);

/// Input gradient only; skips the kernel/bias reductions.
template <typename T>
Tensor<T> conv2d_backward_input(const Shape& input_shape, const Tensor<T>& kernels,
                                const ConvGeometry& geom, const Tensor<T>& output_grad);

template <typename T>
struct PoolResult {
    Tensor<T> output;
    std::vector<std::uint32_t> argmax; // flat input index per output cell
};

/// 2x2 max pooling with stride 2. Odd trailing rows/columns are dropped,
/// ties resolve to the first element in row-major order.
template <typename T>
PoolResult<T> maxpool2x2(const Tensor<T>& input);

template <typename T>
Tensor<T> maxpool2x2_backward(const Shape& input_shape, const std::vector<std::uint32_t>& argmax,
                              const Tensor<T>& output_grad);

/// Fully connected layer. input: [N, In] or [In]; weights: [Out, In].
template <typename T>
Tensor<T> dense(const Tensor<T>& input, const Tensor<T>& weights, const Tensor<T>& bias);

/// Gradients keyed "weight" and "bias".
template <typename T>
LayerGradients<T> dense_backward(const Tensor<T>& input, const Tensor<T>& weights,
                                 const Tensor<T>& output_grad);

inline constexpr double kBatchNormEps = 1e-5;
inline constexpr double kBatchNormMomentum = 0.9; // weight of the old running value

/// Learnable scale/shift plus running statistics of one batch-norm layer.
template <typename T>
struct BatchNormParams {
    Tensor<T> gamma;
    Tensor<T> beta;
    Tensor<T> running_mean;
    Tensor<T> running_var;

    static BatchNormParams identity(std::size_t channels)
    {
        return {Tensor<T>({channels}, T{1}), Tensor<T>({channels}, T{0}), Tensor<T>({channels}, T{0}),
                Tensor<T>({channels}, T{1})};
    }
};

/// What the backward pass needs from a train-mode forward.
template <typename T>
struct BatchNormCache {
    Tensor<T> normalized; // x_hat, same shape as input
    std::vector<T> inv_std; // per channel
    Mode mode = Mode::train;
};

/// Batch normalization over [N, F] (per feature) or [N, C, H, W] (per channel,
/// statistics over batch and space). Normalizes with the biased batch variance
/// and folds the batch statistics into the running ones.
template <typename T>
Tensor<T> batchnorm_train(const Tensor<T>& input, const Tensor<T>& gamma, const Tensor<T>& beta,
                          Tensor<T>& running_mean, Tensor<T>& running_var, BatchNormCache<T>* cache = nullptr);

/// Inference form: normalizes with the running statistics, mutates nothing.
template <typename T>
Tensor<T> batchnorm_eval(const Tensor<T>& input, const Tensor<T>& gamma, const Tensor<T>& beta,
                         const Tensor<T>& running_mean, const Tensor<T>& running_var,
                         BatchNormCache<T>* cache = nullptr);

template <typename T>
Tensor<T> batchnorm(const Tensor<T>& input, BatchNormParams<T>& p, Mode mode, BatchNormCache<T>* cache = nullptr)
{
    if (mode == Mode::train) return batchnorm_train(input, p.gamma, p.beta, p.running_mean, p.running_var, cache);
    return batchnorm_eval(input, p.gamma, p.beta, p.running_mean, p.running_var, cache);
}

/// Gradients keyed "gamma" and "beta".
template <typename T>
LayerGradients<T> batchnorm_backward(const BatchNormCache<T>& cache, const Tensor<T>& gamma,
                                     const Tensor<T>& output_grad);

template <typename T>
Tensor<T> relu(const Tensor<T>& input);

/// Masks the gradient where the forward input (or output) was <= 0. With
/// `guided` set, negative incoming gradients are zeroed as well.
template <typename T>
Tensor<T> relu_backward(const Tensor<T>& forward_value, const Tensor<T>& output_grad,
                        bool guided = false);

template <typename T>
struct DropoutResult {
    Tensor<T> output;
    Tensor<T> mask; // 0 or 1/(1-rate); empty in eval mode or at rate 0
};

/// Inverted dropout: survivors are scaled by 1/(1-rate); eval mode is the identity.
template <typename T>
DropoutResult<T> dropout(const Tensor<T>& input, double rate, Mode mode, Rng& rng);

template <typename T>
Tensor<T> dropout_backward(const Tensor<T>& mask, const Tensor<T>& output_grad);

/// Row-wise softmax over the last axis of a [B] or [N, B] tensor.
template <typename T>
Tensor<T> softmax(const Tensor<T>& logits);

inline constexpr double kCceEps = 1e-12;

/// Mean categorical cross-entropy over rows of [B] or [N, B] predictions.
/// Each target row must be nonnegative and sum to 1 within 1e-5.
template <typename T>
double cce_loss(const Tensor<T>& predictions, const Tensor<T>& targets);

/// Gradient of the mean softmax+CCE loss with respect to the logits: (p - t) / N.
template <typename T>
Tensor<T> softmax_cce_logit_grad(const Tensor<T>& predictions, const Tensor<T>& targets);

} // namespace a2s

#endif
