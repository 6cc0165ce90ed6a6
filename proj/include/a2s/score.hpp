#ifndef A2S_SCORE_HPP
#define A2S_SCORE_HPP

#include <stdexcept>
#include <vector>

#include "a2s/music.hpp"
#include "a2s/tensor.hpp"

namespace a2s {

inline constexpr std::size_t kStaffHeight = 40;
inline constexpr std::size_t kStaffWidth = 390;

/// Layout constants of the procedural engraver.
namespace layout {
inline constexpr int kBottomLineRow = 32; // E4; lines at rows 12, 17, 22, 27, 32
inline constexpr int kLineSpacing = 5;
inline constexpr int kClefFirstCol = 2;
inline constexpr int kClefLastCol = 16;
inline constexpr double kFirstHeadX = 28.0;
inline constexpr double kLastHeadMaxX = 382.0;
inline constexpr double kBaseSpacing = 14.0;
inline constexpr double kSpacingPerEighth = 8.0;
inline constexpr double kMinHeadDistance = static_cast<double>(kStaffWidth) / 40.0; // one bucket at B = 40
inline constexpr int kHeadWidth = 6;
inline constexpr int kHeadHeight = 4;
inline constexpr int kStemLength = 12;
} // namespace layout

struct NoteAnnotation {
    std::size_t note_index;
    double x; // head center, pixels from the left border
    double y; // head center, pixels from the top border
};

struct StaffImage {
    Tensor32 pixels; // [40, 390], 1 = ink
    std::vector<NoteAnnotation> notes;
};

/// Thrown when a line does not fit on one staff; `fits` is the longest prefix that would.
class StaffOverflowError : public std::length_error {
public:
    StaffOverflowError(const std::string& what, std::size_t fits) : std::length_error(what), fits(fits) {}
    std::size_t fits;
};

/// Vertical position in half-spaces above the bottom staff line (treble clef).
/// Sharps take the position of the note below, flats of the note above.
int pitch_to_staff_position(int midi_pitch, Accidental accidental);

/// Horizontal head centers for a note list, before drawing.
std::vector<double> layout_heads(const std::vector<NoteEvent>& notes);

StaffImage render_staff(const std::vector<NoteEvent>& notes);

} // namespace a2s

#endif
