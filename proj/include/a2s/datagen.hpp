#ifndef A2S_DATAGEN_HPP
#define A2S_DATAGEN_HPP

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "a2s/audio.hpp"
#include "a2s/music.hpp"
#include "a2s/score.hpp"
#include "a2s/tensor.hpp"

namespace a2s {

/// Horizontal quantization of the staff image into equal-width buckets.
struct BucketGrid {
    std::size_t num_buckets = 40;
    double width = static_cast<double>(kStaffWidth);

    double bucket_width() const { return width / static_cast<double>(num_buckets); }
    double center(std::size_t b) const { return (static_cast<double>(b) + 0.5) * bucket_width(); }
    /// Bucket whose span [b*w, (b+1)*w) contains x.
    std::size_t bucket_of(double x) const;
};

/// Probability mass split between the two bucket centers that bracket x,
/// linearly by distance; outside the first/last center the nearest bucket takes all.
Tensor32 soft_target(double x, const BucketGrid& grid);

struct PieceConfig {
    std::size_t min_notes = 10;
    std::size_t max_notes = 16;
    std::array<double, 3> duration_weights{0.3, 0.45, 0.25}; // eighth, quarter, half
    double dot_probability = 0.1; // quarter/half only
    double tie_probability = 0.08;
    double accidental_probability = 0.15;
    int max_step = 5;
    double quarter_seconds = 0.5;
    double tempo_jitter = 0.05; // relative, uniform
};

/// Random walk over the renderable range; features injected with the configured probabilities.
Piece sample_piece(Rng& rng, const PieceConfig& config, std::string id = {});

struct DatasetConfig {
    std::uint64_t seed = 1;
    std::size_t train_pieces = 1600;
    std::size_t valid_pieces = 200;
    std::size_t test_pieces = 200;
    PieceConfig piece;
    SynthOptions synth;
    FilterbankConfig filterbank;
    std::size_t num_buckets = 40;
    std::size_t context_frames = kExcerptFrames;
    std::size_t shift_frames = kExcerptShift;
    int max_retries = 20;
    unsigned threads = 1;
};

inline const std::array<std::string, 3> kSplits{"train", "valid", "test"};

/// Seed of one split, disjoint from the others for any base seed.
std::uint64_t split_seed(std::uint64_t seed, const std::string& split);
/// Seed of one piece within a split.
std::uint64_t piece_seed(std::uint64_t split_seed, std::size_t index);

/// Everything derived from one piece, before persistence.
struct RenderedPiece {
    Piece piece;
    std::uint64_t seed = 0;
    StaffImage staff;
    Synthesis synthesis;
    Spectrogram spectrogram;
};

/// Deterministically regenerates a piece from its seed (resampling on staff overflow).
RenderedPiece generate_piece(std::uint64_t seed, const std::string& id, const DatasetConfig& config,
                             const Filterbank& filterbank);

/// One training triple as stored on disk.
struct ExampleRecord {
    std::string piece_id;
    std::size_t note_index = 0;
    std::string image_file;
    std::size_t excerpt_offset = 0;
    double x_true = 0.0;
    std::size_t onset_frame = 0;
    std::string split;
};

/// Examples of a rendered piece: one per sounding onset with enough left context.
/// Excerpts are appended to `excerpts` (each [bins, context]).
std::vector<ExampleRecord> piece_examples(const RenderedPiece& rp, const DatasetConfig& config,
                                          const std::string& split, std::vector<Tensor32>& excerpts);

struct DatasetSummary {
    std::map<std::string, std::size_t> examples_per_split;
    double excerpt_mean = 0.0;
    double excerpt_std = 1.0;
    std::size_t num_bands = 0;
};

/// Writes dataset.json, manifest.jsonl, pieces.jsonl, excerpts_<split>.bin and images/.
DatasetSummary build_dataset(const DatasetConfig& config, const std::filesystem::path& out_dir);

/// Binary excerpt store: magic "A2SX", u32 version, u64 count, u32 bins, u32 frames, f32 payload.
void write_excerpt_store(const std::filesystem::path& path, const std::vector<Tensor32>& excerpts, std::size_t bins,
                         std::size_t frames);
Tensor32 read_excerpt_store(const std::filesystem::path& path); // [count, bins, frames]

/// One split loaded into memory.
struct Example {
    const Tensor32* image = nullptr; // [40, 390]
    const float* excerpt = nullptr; // bins * frames raw values
    double x_true = 0.0;
    Tensor32 target;
    std::string piece_id;
    std::size_t note_index = 0;
    std::size_t onset_frame = 0;
};

struct SplitData {
    std::string name;
    std::vector<ExampleRecord> records;
    Tensor32 excerpts; // [count, bins, frames]
    std::map<std::string, Tensor32> images;
    std::vector<Example> examples;
};

struct Dataset {
    std::filesystem::path root;
    DatasetConfig config;
    DatasetSummary summary;
    std::string hash; // hex FNV-1a over the manifest and excerpt stores
    std::map<std::string, SplitData> splits;

    BucketGrid grid() const { return {config.num_buckets, static_cast<double>(kStaffWidth)}; }
    const SplitData& split(const std::string& name) const;
};

Dataset load_dataset(const std::filesystem::path& root, const std::vector<std::string>& splits = {"train", "valid", "test"});

/// Piece metadata as stored in pieces.jsonl.
struct PieceRecord {
    std::string id;
    std::string split;
    std::uint64_t seed = 0;
    std::vector<NoteAnnotation> heads; // head centers in note order
};
std::vector<PieceRecord> load_piece_records(const std::filesystem::path& root);
DatasetConfig load_dataset_config(const std::filesystem::path& root);

} // namespace a2s

#endif
