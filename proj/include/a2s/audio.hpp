#ifndef A2S_AUDIO_HPP
#define A2S_AUDIO_HPP

#include <filesystem>
#include <stdexcept>
#include <vector>

#include "a2s/music.hpp"
#include "a2s/tensor.hpp"

namespace a2s {

inline constexpr int kSampleRate = 22050;
inline constexpr std::size_t kFftSize = 2048;
inline constexpr double kFrameRate = 31.25;
inline constexpr double kHopSamples = kSampleRate / kFrameRate; // 705.6
inline constexpr std::size_t kExcerptFrames = 40;
inline constexpr std::size_t kExcerptShift = 5;

struct AudioBuffer {
    std::vector<float> samples;
    int sample_rate = kSampleRate;

    double seconds() const { return static_cast<double>(samples.size()) / sample_rate; }
};

struct Onset {
    std::size_t note_index;
    double seconds;
};

struct SynthOptions {
    double lead_in_seconds = 0.1;
    double tail_seconds = 0.3;
    double peak = 0.8;
    double velocity_jitter = 0.15; // relative loudness spread per tone
};

struct Synthesis {
    AudioBuffer audio;
    std::vector<Onset> onsets; // one per sounding tone; tie continuations carry none
};

/// Additive synthesis of a monophonic line: eight harmonics with 1/2 amplitude
/// roll-off, 10 ms attack, 0.6 s exponential decay and a 10 ms release.
/// The buffer is peak-normalized to `options.peak`.
Synthesis synthesize(const std::vector<NoteEvent>& notes, double quarter_seconds, Rng& rng,
                     const SynthOptions& options = {});

struct FilterbankConfig {
    std::size_t fft_size = kFftSize;
    int sample_rate = kSampleRate;
    int bands_per_octave = 24;
    double fmin = 30.0;
    double fmax = 8000.0;
};

/// Triangular log-frequency filters over the positive FFT bins (Nyquist excluded).
struct Filterbank {
    Tensor32 weights; // [bands, fft_size / 2]
    std::vector<double> band_centers; // Hz of each filter's peak bin
    std::vector<std::size_t> first_bin; // first nonzero bin per band
    std::vector<std::size_t> last_bin; // last nonzero bin per band (inclusive)
    FilterbankConfig config;

    std::size_t num_bands() const { return band_centers.size(); }
    double bin_hz(std::size_t bin) const
    {
        return static_cast<double>(bin) * config.sample_rate / static_cast<double>(config.fft_size);
    }
};

Filterbank build_filterbank(const FilterbankConfig& config = {});

struct Spectrogram {
    Tensor32 frames; // [num_frames, num_bands]
    double frame_rate = kFrameRate;
    std::vector<double> bin_frequencies;

    std::size_t num_frames() const { return frames.empty() ? 0 : frames.dim(0); }
    std::size_t num_bins() const { return frames.empty() ? 0 : frames.dim(1); }
};

/// Sample offset of frame `index`: round(index * sample_rate / frame_rate).
std::size_t frame_start(std::size_t index, int sample_rate = kSampleRate, double frame_rate = kFrameRate);

/// Number of full windows that fit when frame starts are rounded.
std::size_t frame_count(std::size_t num_samples, std::size_t fft_size = kFftSize, int sample_rate = kSampleRate,
                        double frame_rate = kFrameRate);

/// Hann-windowed magnitude spectrum, filterbank, then ln(1 + x).
Spectrogram spectrogram(const AudioBuffer& audio, const Filterbank& filterbank, double frame_rate = kFrameRate);

/// Frame index closest to a time in seconds.
std::size_t onset_frame(double seconds, double frame_rate = kFrameRate);

/// Raised by `excerpt` when the target onset has less left context than the window needs.
class TooEarlyError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// Frames [onset+shift-context+1, onset+shift] as a [bins, context] tensor.
Tensor32 excerpt(const Spectrogram& spec, std::size_t onset_frame, std::size_t context = kExcerptFrames,
                 std::size_t shift = kExcerptShift);

/// Same slice, addressed by its last frame.
Tensor32 excerpt_ending_at(const Spectrogram& spec, std::size_t last_frame, std::size_t context = kExcerptFrames);

/// 16-bit PCM mono RIFF/WAVE.
void write_wav(const std::filesystem::path& path, const AudioBuffer& audio);
AudioBuffer read_wav(const std::filesystem::path& path);

} // namespace a2s

#endif
