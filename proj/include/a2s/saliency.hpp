#ifndef A2S_SALIENCY_HPP
#define A2S_SALIENCY_HPP

#include <filesystem>
#include <optional>
#include <vector>

#include "a2s/model.hpp"
#include "a2s/score.hpp"

namespace a2s {

struct SaliencyMap {
    Tensor32 values; // [H, W], in [0, 1]
    std::size_t target = 0; // output bucket the map explains
};

/// Guided backprop from the pre-softmax logit of `target` (default: the argmax
/// bucket) to the image, in inference mode. Absolute value, max-normalized.
/// image: [H, W]; excerpt: standardized [1, 1, bins, frames] or [bins, frames].
SaliencyMap saliency_map(const Model& model, const ParamSet<float>& params, const Tensor32& image,
                         const Tensor32& excerpt, std::optional<std::size_t> target = std::nullopt);

/// 1 inside the union of note-head boxes (the head ellipse's bounding box grown
/// by `margin` pixels), 0 elsewhere; row-major [h, w].
std::vector<char> head_box_mask(std::size_t h, std::size_t w, const std::vector<NoteAnnotation>& heads, int margin = 1);

/// Mean saliency inside the union of note-head boxes divided by the mean outside.
double head_box_ratio(const Tensor32& map, const std::vector<NoteAnnotation>& heads, int margin = 1);

/// Map as a heat image (1 = white = salient).
void write_saliency_pgm(const std::filesystem::path& path, const SaliencyMap& map);
/// Input staff and heat map side by side, separated by a 4-pixel gray bar.
void write_saliency_composite(const std::filesystem::path& path, const Tensor32& image, const SaliencyMap& map);

} // namespace a2s

#endif
