#pragma once

#include <string>

#include "grid.hpp"

namespace fgcxr {

// Grayscale PNG I/O. Masks are 8-bit; heatmaps are 16-bit
// (value = round(65535 * v)); study images may be either depth.

// Reads an 8-bit grayscale PNG. Color or 16-bit inputs are a data error.
GridU8 read_png_gray8(const std::string& path);

// Reads an 8- or 16-bit grayscale PNG and scales to [0, 1].
GridF read_png_gray_norm(const std::string& path);

// Reads a 16-bit grayscale PNG as raw sample values.
Grid<uint16_t> read_png_gray16(const std::string& path);

void write_png_gray8(const std::string& path, const GridU8& img);
void write_png_gray16(const std::string& path, const Grid<uint16_t>& img);

} // namespace fgcxr
