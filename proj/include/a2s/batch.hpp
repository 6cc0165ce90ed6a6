#ifndef A2S_BATCH_HPP
#define A2S_BATCH_HPP

#include <span>
#include <string>
#include <vector>

#include "a2s/datagen.hpp"
#include "a2s/tensor.hpp"

namespace a2s {

/// Network-ready mini-batch.
struct Batch {
    Tensor32 images; // [N, 1, H, W]
    Tensor32 excerpts; // [N, 1, bins, frames], standardized
    Tensor32 targets; // [N, B]
    std::vector<double> x_true;
};

/// Indexable collection of examples that can be stacked into batches.
class BatchSource {
public:
    virtual ~BatchSource() = default;
    virtual std::size_t size() const = 0;
    virtual Batch assemble(std::span<const std::size_t> indices) const = 0;
    /// Identity of example i for reports: piece id and note index.
    virtual std::string piece_id(std::size_t i) const = 0;
    virtual std::size_t note_index(std::size_t i) const = 0;
    virtual BucketGrid grid() const = 0;
};

/// Examples of one loaded split, excerpts standardized with the train statistics.
class SplitSource : public BatchSource {
public:
    SplitSource(const SplitData& split, const DatasetSummary& summary, BucketGrid grid);
    std::size_t size() const override { return split_->examples.size(); }
    Batch assemble(std::span<const std::size_t> indices) const override;
    std::string piece_id(std::size_t i) const override { return split_->examples.at(i).piece_id; }
    std::size_t note_index(std::size_t i) const override { return split_->examples.at(i).note_index; }
    BucketGrid grid() const override { return grid_; }

private:
    const SplitData* split_;
    float mean_, inv_std_;
    BucketGrid grid_;
};

/// Examples held as stacked tensors (already preprocessed).
class TensorSource : public BatchSource {
public:
    /// images [N, 1, H, W], excerpts [N, 1, bins, frames]; targets built from x_true on `grid`.
    TensorSource(Tensor32 images, Tensor32 excerpts, std::vector<double> x_true, BucketGrid grid);
    std::size_t size() const override { return x_true_.size(); }
    Batch assemble(std::span<const std::size_t> indices) const override;
    std::string piece_id(std::size_t i) const override { return "example-" + std::to_string(i); }
    std::size_t note_index(std::size_t) const override { return 0; }
    BucketGrid grid() const override { return grid_; }

private:
    Tensor32 images_, excerpts_;
    std::vector<double> x_true_;
    BucketGrid grid_;
};

/// A view of selected examples of another source.
class SubsetSource : public BatchSource {
public:
    SubsetSource(const BatchSource& base, std::vector<std::size_t> indices);
    std::size_t size() const override { return indices_.size(); }
    Batch assemble(std::span<const std::size_t> indices) const override;
    std::string piece_id(std::size_t i) const override { return base_->piece_id(indices_.at(i)); }
    std::size_t note_index(std::size_t i) const override { return base_->note_index(indices_.at(i)); }
    BucketGrid grid() const override { return base_->grid(); }

private:
    const BatchSource* base_;
    std::vector<std::size_t> indices_;
};

/// Standardizes a raw [bins, frames] excerpt into a [1, 1, bins, frames] network input.
Tensor32 prepare_excerpt(const Tensor32& raw, const DatasetSummary& summary);
/// [H, W] image as a [1, 1, H, W] network input.
Tensor32 prepare_image(const Tensor32& image);

} // namespace a2s

#endif
