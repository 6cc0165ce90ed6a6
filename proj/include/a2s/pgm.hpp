#ifndef A2S_PGM_HPP
#define A2S_PGM_HPP

#include <filesystem>

#include "a2s/tensor.hpp"

namespace a2s {

/// Binary P5 PGM, maxval 255. Values in [0,1] with 1 = ink, written as 0 = black.
void write_pgm(const std::filesystem::path& path, const Tensor32& image);
Tensor32 read_pgm(const std::filesystem::path& path);

/// Same encoding without ink inversion (1 = white), for heat maps.
void write_pgm_intensity(const std::filesystem::path& path, const Tensor32& image);

} // namespace a2s

#endif
