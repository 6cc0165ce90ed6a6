#ifndef A2S_MODEL_HPP
#define A2S_MODEL_HPP

#include <array>
#include <map>
#include <string>
#include <vector>

#include "a2s/layers.hpp"
#include "a2s/tensor.hpp"

namespace a2s {

/// Geometry and widths of the two-branch matching network. The topology is
/// fixed; only extents and channel widths vary.
///
/// sheet: conv5x5(pad 2, stride 1x2)-BN-ReLU, conv3x3-BN-ReLU, pool+drop,
///        conv3x3-BN-ReLU x2, pool+drop, dense-BN-ReLU+drop
/// audio: conv3x3-BN-ReLU x2, pool+drop, conv3x3-BN-ReLU, pool+drop,
///        conv3x3-BN-ReLU, pool+drop, dense-BN-ReLU+drop
/// head:  concat, (dense-BN-ReLU+drop) x2, dense-B, softmax
struct ModelConfig {
    std::size_t image_height = 40;
    std::size_t image_width = 390;
    std::size_t excerpt_bins = 136;
    std::size_t excerpt_frames = 40;
    std::size_t num_buckets = 40;
    std::array<std::size_t, 4> sheet_channels{64, 64, 128, 128};
    std::array<std::size_t, 4> audio_channels{64, 64, 96, 96};
    std::size_t branch_dense = 1024;
    std::size_t head_dense = 1024;
    double conv_dropout = 0.15;
    double dense_dropout = 0.3;

    static ModelConfig standard() { return {}; }
    /// Every channel and dense width multiplied by `factor` (at least 1).
    ModelConfig scaled(double factor) const;
    /// 12x30 image, 16x12 excerpt, 4 buckets, 2 channels everywhere.
    static ModelConfig tiny();

    bool operator==(const ModelConfig&) const = default;
};

struct ShapeRecord {
    std::string layer;
    Shape shape; // per example, without the batch axis
};

/// Named tensors in a fixed order. Holds parameters, gradients or optimizer slots.
template <typename T>
class ParamSet {
public:
    void add(const std::string& name, Tensor<T> value, bool trainable = true);

    bool contains(const std::string& name) const { return index_.count(name) != 0; }
    Tensor<T>& operator[](const std::string& name);
    const Tensor<T>& operator[](const std::string& name) const;
    Tensor<T>& at(std::size_t i) { return tensors_[i]; }
    const Tensor<T>& at(std::size_t i) const { return tensors_[i]; }
    const std::string& name(std::size_t i) const { return names_[i]; }
    bool trainable(std::size_t i) const { return trainable_[i]; }
    std::size_t size() const { return names_.size(); }

    /// Number of scalar values in trainable tensors.
    std::size_t trainable_count() const;

    /// Zero-filled tensors for the trainable entries only.
    ParamSet zeros_like_trainable() const;

    template <typename U>
    ParamSet<U> cast() const
    {
        ParamSet<U> out;
        for (std::size_t i = 0; i < size(); ++i) out.add(names_[i], tensors_[i].template cast<U>(), trainable_[i]);
        return out;
    }

    bool operator==(const ParamSet& other) const
    {
        return names_ == other.names_ && tensors_ == other.tensors_ && trainable_ == other.trainable_;
    }

private:
    std::vector<std::string> names_;
    std::vector<Tensor<T>> tensors_;
    std::vector<bool> trainable_;
    std::map<std::string, std::size_t> index_;
};

template <typename T>
using ModelParams = ParamSet<T>;

enum class StageKind { conv, batchnorm, relu, pool, dropout, flatten, dense };

struct Stage {
    StageKind kind;
    std::string name; // parameter prefix, e.g. "sheet.conv1"
    std::size_t out = 0; // channels / units for conv and dense
    std::size_t kernel = 0;
    ConvGeometry geom;
    double rate = 0.0; // dropout
};

template <typename T>
struct StageCache {
    Tensor<T> output; // kept only when a backward pass reads it
    Shape input_shape;
    BatchNormCache<T> bn;
    std::vector<std::uint32_t> argmax;
    Tensor<T> mask;
};

template <typename T>
struct ForwardCache {
    Mode mode = Mode::eval;
    Tensor<T> images; // [N, 1, H, W]
    Tensor<T> excerpts; // [N, 1, bins, frames]
    std::vector<StageCache<T>> sheet, audio, head;
    Tensor<T> joined; // [N, sheet + audio features], input of the head
    Tensor<T> logits; // [N, B]
    Tensor<T> probs; // [N, B]
};

template <typename T>
struct ForwardResult {
    Tensor<T> probs; // [N, B]
    ForwardCache<T> cache;
};

struct BackwardOptions {
    bool guided = false; // suppress negative gradients at every ReLU
    bool input_grads = false; // propagate to the image and excerpt inputs
};

template <typename T>
struct BackwardResult {
    double loss = 0.0;
    ParamSet<T> grads; // trainable parameters only
    Tensor<T> image_grad; // [N, 1, H, W] when requested
    Tensor<T> excerpt_grad; // [N, 1, bins, frames] when requested
};

class Model {
public:
    /// Audits every intermediate shape; throws ShapeError naming the layer that fails.
    explicit Model(ModelConfig config);

    const ModelConfig& config() const { return config_; }
    const std::vector<ShapeRecord>& shapes() const { return shapes_; }
    const ShapeRecord& shape_of(const std::string& layer) const;

    /// Weights ~ U(-a, a) with a = sqrt(2 / fan_in); biases and beta 0, gamma 1,
    /// running mean 0, running variance 1.
    template <typename T>
    ParamSet<T> init_params(Rng& rng) const;

    /// Shapes every parameter tensor must have, in storage order.
    std::vector<std::pair<std::string, Shape>> param_shapes() const;
    std::size_t trainable_count() const;

    /// images: [N, 1, H, W] or [1, H, W]; excerpts: [N, 1, bins, frames] or [1, bins, frames].
    /// Train mode updates batch-norm running statistics in `params`.
    template <typename T>
    ForwardResult<T> forward(ParamSet<T>& params, const Tensor<T>& images, const Tensor<T>& excerpts, Mode mode,
                             Rng& rng, bool keep_cache = true) const;

    /// Eval-mode probabilities; reentrant.
    template <typename T>
    Tensor<T> predict(const ParamSet<T>& params, const Tensor<T>& images, const Tensor<T>& excerpts) const;

    /// Eval-mode forward that keeps what a backward pass needs; reentrant.
    template <typename T>
    ForwardResult<T> forward_eval(const ParamSet<T>& params, const Tensor<T>& images, const Tensor<T>& excerpts) const;

    /// Mean cross-entropy against targets [N, B] and its parameter gradients.
    template <typename T>
    BackwardResult<T> backward(const ParamSet<T>& params, const ForwardCache<T>& cache, const Tensor<T>& targets,
                               const BackwardOptions& options = {}) const;

    /// Backpropagates an arbitrary gradient at the logits (loss left at 0).
    template <typename T>
    BackwardResult<T> backward_from_logits(const ParamSet<T>& params, const ForwardCache<T>& cache,
                                           const Tensor<T>& logit_grad, const BackwardOptions& options = {}) const;

    const std::vector<Stage>& sheet_stages() const { return sheet_; }
    const std::vector<Stage>& audio_stages() const { return audio_; }
    const std::vector<Stage>& head_stages() const { return head_; }

private:
    template <typename T>
    ForwardResult<T> run_forward(const ParamSet<T>& params, ParamSet<T>* mutable_params, const Tensor<T>& images,
                                 const Tensor<T>& excerpts, Mode mode, Rng* rng, bool keep_cache) const;

    ModelConfig config_;
    std::vector<Stage> sheet_, audio_, head_;
    std::vector<ShapeRecord> shapes_;
};

} // namespace a2s

#endif
