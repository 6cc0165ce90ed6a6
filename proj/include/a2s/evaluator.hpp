#ifndef A2S_EVALUATOR_HPP
#define A2S_EVALUATOR_HPP

#include <array>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "a2s/audio.hpp"
#include "a2s/batch.hpp"
#include "a2s/datagen.hpp"
#include "a2s/model.hpp"

namespace a2s {

struct Prediction {
    std::size_t b_star = 0;
    double x_max = 0.0; // center of the argmax bucket
    double x_int = 0.0; // probability-weighted position over b*-1..b*+1
};

/// Argmax bucket and interpolated position. At the grid edges the missing
/// neighbor is dropped and the remaining weights renormalized.
Prediction locate(std::span<const float> probs, const BucketGrid& grid);

/// Signed pixel error normalized by the image width: (x_hat - x_true) / width.
double npd(double x_hat, double x_true, double width);

struct Peak {
    std::size_t bucket = 0;
    double prob = 0.0;
};

struct EvalRow {
    std::string piece_id;
    std::size_t note_index = 0;
    double x_true = 0.0;
    std::size_t b_true = 0;
    std::size_t b_star = 0;
    double x_max = 0.0;
    double x_int = 0.0;
    double npd_max = 0.0;
    double npd_int = 0.0;
    std::vector<Peak> peaks; // local maxima of the distribution, highest first (at most 3)
};

/// Fraction of rows with |b_star - b_true| <= k - 1. Rejects empty input.
double top_k_hit_rate(const std::vector<EvalRow>& rows, std::size_t k);

struct EvalAggregates {
    std::size_t count = 0;
    double loss = 0.0; // mean cross-entropy against the soft targets
    double top1 = 0.0;
    double top2 = 0.0;
    double mean_abs_npd_max = 0.0;
    double median_abs_npd_max = 0.0;
    double mean_abs_npd_int = 0.0;
    double median_abs_npd_int = 0.0;
    double frac_npd_max_below_bucket = 0.0; // |NPD_max| * width < bucket width
    double frac_npd_int_below_bucket = 0.0;
};

struct EvalReport {
    BucketGrid grid;
    std::vector<EvalRow> rows;
    EvalAggregates aggregates;
};

/// Builds a report row from one probability vector.
EvalRow make_row(std::span<const float> probs, double x_true, const BucketGrid& grid);

/// Aggregates recomputed from rows (loss left untouched).
void summarize(EvalReport& report);

/// Eval-mode forward over every example of `source`; `threads` workers share the parameters.
EvalReport evaluate(const Model& model, const ParamSet<float>& params, const BatchSource& source,
                    std::size_t batch_size = 100, unsigned threads = 1);

void write_report_csv(const std::filesystem::path& path, const EvalReport& report);
void write_report_json(const std::filesystem::path& path, const EvalReport& report);

struct FollowStep {
    std::size_t frame = 0; // last frame of the window
    double time_seconds = 0.0;
    Prediction prediction;
    std::vector<float> probs;
};

/// Slides a window of `model.config().excerpt_frames` frames over the whole
/// spectrogram with stride `hop`, starting at the first complete window.
std::vector<FollowStep> follow(const Model& model, const ParamSet<float>& params, const Spectrogram& spec,
                               const Tensor32& image, const DatasetSummary& summary, std::size_t hop = 1);

void write_trace_csv(const std::filesystem::path& path, const std::vector<FollowStep>& trace);
/// One PGM per step: the staff with a marker column at x_int.
void write_follow_overlays(const std::filesystem::path& dir, const std::vector<FollowStep>& trace,
                           const Tensor32& image);

/// Follow-mode predictions at the steps whose window ends `shift` frames after
/// each onset, compared against the true head positions.
struct FollowScore {
    std::size_t onsets = 0;
    std::size_t within_bucket = 0;
    double fraction() const { return onsets ? static_cast<double>(within_bucket) / static_cast<double>(onsets) : 0.0; }
};
FollowScore score_follow(const std::vector<FollowStep>& trace, const std::vector<std::size_t>& onset_frames,
                         const std::vector<double>& x_true, std::size_t shift, double bucket_width);

} // namespace a2s

#endif
