#ifndef A2S_CONFIG_JSON_HPP
#define A2S_CONFIG_JSON_HPP

#include <initializer_list>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "a2s/datagen.hpp"
#include "a2s/model.hpp"
#include "a2s/trainer.hpp"

namespace a2s {

using Json = nlohmann::json;

struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Throws ConfigError if `j` is not an object or holds a key outside `known`.
inline void reject_unknown_keys(const Json& j, std::initializer_list<const char*> known, const std::string& where)
{
    if (!j.is_object()) throw ConfigError(where + ": expected a JSON object");
    for (const auto& item : j.items()) {
        bool ok = false;
        for (const char* k : known) ok = ok || item.key() == k;
        if (!ok) throw ConfigError(where + ": unknown key \"" + item.key() + "\"");
    }
}

template <typename V>
void read_opt(const Json& j, const char* key, V& out)
{
    if (j.contains(key)) {
        try {
            j.at(key).get_to(out);
        } catch (const nlohmann::json::exception& e) {
            throw ConfigError(std::string("bad value for \"") + key + "\": " + e.what());
        }
    }
}

inline void to_json(Json& j, const PieceConfig& c)
{
    j = Json{{"min_notes", c.min_notes},
             {"max_notes", c.max_notes},
             {"duration_weights", c.duration_weights},
             {"dot_probability", c.dot_probability},
             {"tie_probability", c.tie_probability},
             {"accidental_probability", c.accidental_probability},
             {"max_step", c.max_step},
             {"quarter_seconds", c.quarter_seconds},
             {"tempo_jitter", c.tempo_jitter}};
}

inline void from_json(const Json& j, PieceConfig& c)
{
    reject_unknown_keys(j,
                        {"min_notes", "max_notes", "duration_weights", "dot_probability", "tie_probability",
                         "accidental_probability", "max_step", "quarter_seconds", "tempo_jitter"},
                        "piece");
    read_opt(j, "min_notes", c.min_notes);
    read_opt(j, "max_notes", c.max_notes);
    read_opt(j, "duration_weights", c.duration_weights);
    read_opt(j, "dot_probability", c.dot_probability);
    read_opt(j, "tie_probability", c.tie_probability);
    read_opt(j, "accidental_probability", c.accidental_probability);
    read_opt(j, "max_step", c.max_step);
    read_opt(j, "quarter_seconds", c.quarter_seconds);
    read_opt(j, "tempo_jitter", c.tempo_jitter);
}

inline void to_json(Json& j, const SynthOptions& c)
{
    j = Json{{"lead_in_seconds", c.lead_in_seconds},
             {"tail_seconds", c.tail_seconds},
             {"peak", c.peak},
             {"velocity_jitter", c.velocity_jitter}};
}

inline void from_json(const Json& j, SynthOptions& c)
{
    reject_unknown_keys(j, {"lead_in_seconds", "tail_seconds", "peak", "velocity_jitter"}, "synth");
    read_opt(j, "lead_in_seconds", c.lead_in_seconds);
    read_opt(j, "tail_seconds", c.tail_seconds);
    read_opt(j, "peak", c.peak);
    read_opt(j, "velocity_jitter", c.velocity_jitter);
}

inline void to_json(Json& j, const FilterbankConfig& c)
{
    j = Json{{"fft_size", c.fft_size},
             {"sample_rate", c.sample_rate},
             {"bands_per_octave", c.bands_per_octave},
             {"fmin", c.fmin},
             {"fmax", c.fmax}};
}

inline void from_json(const Json& j, FilterbankConfig& c)
{
    reject_unknown_keys(j, {"fft_size", "sample_rate", "bands_per_octave", "fmin", "fmax"}, "filterbank");
    read_opt(j, "fft_size", c.fft_size);
    read_opt(j, "sample_rate", c.sample_rate);
    read_opt(j, "bands_per_octave", c.bands_per_octave);
    read_opt(j, "fmin", c.fmin);
    read_opt(j, "fmax", c.fmax);
}

// `threads` is a runtime knob, not part of the dataset's identity.
inline void to_json(Json& j, const DatasetConfig& c)
{
    j = Json{{"seed", c.seed},
             {"train_pieces", c.train_pieces},
             {"valid_pieces", c.valid_pieces},
             {"test_pieces", c.test_pieces},
             {"piece", c.piece},
             {"synth", c.synth},
             {"filterbank", c.filterbank},
             {"num_buckets", c.num_buckets},
             {"context_frames", c.context_frames},
             {"shift_frames", c.shift_frames},
             {"max_retries", c.max_retries}};
}

inline void from_json(const Json& j, DatasetConfig& c)
{
    reject_unknown_keys(j,
                        {"seed", "train_pieces", "valid_pieces", "test_pieces", "piece", "synth", "filterbank",
                         "num_buckets", "context_frames", "shift_frames", "max_retries"},
                        "dataset");
    read_opt(j, "seed", c.seed);
    read_opt(j, "train_pieces", c.train_pieces);
    read_opt(j, "valid_pieces", c.valid_pieces);
    read_opt(j, "test_pieces", c.test_pieces);
    read_opt(j, "piece", c.piece);
    read_opt(j, "synth", c.synth);
    read_opt(j, "filterbank", c.filterbank);
    read_opt(j, "num_buckets", c.num_buckets);
    read_opt(j, "context_frames", c.context_frames);
    read_opt(j, "shift_frames", c.shift_frames);
    read_opt(j, "max_retries", c.max_retries);
}

inline void to_json(Json& j, const ModelConfig& c)
{
    j = Json{{"image_height", c.image_height},
             {"image_width", c.image_width},
             {"excerpt_bins", c.excerpt_bins},
             {"excerpt_frames", c.excerpt_frames},
             {"num_buckets", c.num_buckets},
             {"sheet_channels", c.sheet_channels},
             {"audio_channels", c.audio_channels},
             {"branch_dense", c.branch_dense},
             {"head_dense", c.head_dense},
             {"conv_dropout", c.conv_dropout},
             {"dense_dropout", c.dense_dropout}};
}

inline void from_json(const Json& j, ModelConfig& c)
{
    reject_unknown_keys(j,
                        {"image_height", "image_width", "excerpt_bins", "excerpt_frames", "num_buckets",
                         "sheet_channels", "audio_channels", "branch_dense", "head_dense", "conv_dropout",
                         "dense_dropout"},
                        "model");
    read_opt(j, "image_height", c.image_height);
    read_opt(j, "image_width", c.image_width);
    read_opt(j, "excerpt_bins", c.excerpt_bins);
    read_opt(j, "excerpt_frames", c.excerpt_frames);
    read_opt(j, "num_buckets", c.num_buckets);
    read_opt(j, "sheet_channels", c.sheet_channels);
    read_opt(j, "audio_channels", c.audio_channels);
    read_opt(j, "branch_dense", c.branch_dense);
    read_opt(j, "head_dense", c.head_dense);
    read_opt(j, "conv_dropout", c.conv_dropout);
    read_opt(j, "dense_dropout", c.dense_dropout);
}

inline void to_json(Json& j, const OptimizerConfig& c)
{
    j = Json{{"initial_lr", c.initial_lr},
             {"momentum", c.momentum},
             {"weight_decay", c.weight_decay},
             {"lr_step_epochs", c.lr_step_epochs},
             {"lr_divisor", c.lr_divisor}};
}

inline void from_json(const Json& j, OptimizerConfig& c)
{
    reject_unknown_keys(j, {"initial_lr", "momentum", "weight_decay", "lr_step_epochs", "lr_divisor"}, "optimizer");
    read_opt(j, "initial_lr", c.initial_lr);
    read_opt(j, "momentum", c.momentum);
    read_opt(j, "weight_decay", c.weight_decay);
    read_opt(j, "lr_step_epochs", c.lr_step_epochs);
    read_opt(j, "lr_divisor", c.lr_divisor);
}

inline void to_json(Json& j, const TrainConfig& c)
{
    j = Json{{"model", c.model},
             {"optimizer", c.optimizer},
             {"epochs", c.epochs},
             {"batch_size", c.batch_size},
             {"seed", c.seed},
             {"progress_every", c.progress_every}};
}

inline void from_json(const Json& j, TrainConfig& c)
{
    reject_unknown_keys(j, {"model", "optimizer", "epochs", "batch_size", "seed", "progress_every"}, "train");
    read_opt(j, "model", c.model);
    read_opt(j, "optimizer", c.optimizer);
    read_opt(j, "epochs", c.epochs);
    read_opt(j, "batch_size", c.batch_size);
    read_opt(j, "seed", c.seed);
    read_opt(j, "progress_every", c.progress_every);
}

} // namespace a2s

#endif
