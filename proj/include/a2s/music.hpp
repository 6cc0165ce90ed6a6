#ifndef A2S_MUSIC_HPP
#define A2S_MUSIC_HPP

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

namespace a2s {

enum class Accidental : std::uint8_t { none, sharp, flat };

inline constexpr int kMinPitch = 60; // C4
inline constexpr int kMaxPitch = 81; // A5

/// One note of a monophonic line. Durations are counted in eighth notes:
/// 1 (eighth), 2 (quarter), 3 (dotted quarter), 4 (half), 6 (dotted half).
struct NoteEvent {
    int midi_pitch = 60;
    int eighths = 2;
    Accidental accidental = Accidental::none;
    bool tie_to_next = false;
    bool dotted = false;

    double quarters() const { return eighths / 2.0; }
    bool operator==(const NoteEvent&) const = default;
};

/// Checks the duration/dot pairing and the pitch range; throws std::invalid_argument.
void validate_note(const NoteEvent& note);

struct Piece {
    std::string id;
    std::vector<NoteEvent> notes;
    double quarter_seconds = 0.5;
};

inline double midi_to_hz(int midi_pitch)
{
    return 440.0 * std::pow(2.0, (midi_pitch - 69) / 12.0);
}

} // namespace a2s

#endif
