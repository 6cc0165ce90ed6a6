#ifndef A2S_CHECKPOINT_HPP
#define A2S_CHECKPOINT_HPP

#include <filesystem>
#include <string>

#include "a2s/model.hpp"

namespace a2s {

/// Parameters plus optimizer state and provenance of a training run.
/// File layout: magic "A2SCKPT\0", u32 version, u64 JSON length, JSON metadata,
/// u64 tensor count, then per tensor: u32 name length, name, u8 dtype (1 = f32,
/// 2 = f64), u32 rank, u64 dims, little-endian payload.
struct Checkpoint {
    ModelConfig config;
    ParamSet<float> params;
    ParamSet<float> velocity; // optimizer slots, same names as the trainable params; may be empty
    std::size_t epoch = 0; // completed epochs
    double learning_rate = 0.0;
    std::string rng_state; // textual engine state
    std::string dataset_hash;
    std::string note; // free-form, e.g. "best" or "final"
};

/// Writes to a temporary file first, so a crash never leaves a torn checkpoint.
void save_checkpoint(const std::filesystem::path& path, const Checkpoint& ckpt);
Checkpoint load_checkpoint(const std::filesystem::path& path);

/// Throws ShapeError naming the first parameter (e.g. "output.weight") that is
/// missing or shaped differently from what `model` needs.
void check_params(const Model& model, const ParamSet<float>& params);

/// Loads and verifies the parameters against an expected architecture.
Checkpoint load_checkpoint(const std::filesystem::path& path, const ModelConfig& expected);

} // namespace a2s

#endif
