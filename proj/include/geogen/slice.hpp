#pragma once

#include <filesystem>

#include "geogen/grid.hpp"

namespace geogen {

enum class SliceAxis { X, Y, Z };

// Writes one grid slice as an 8-bit binary PGM (P5). Pixel value is
// round(255 * log10(rho) / log10(2000)), clamped to [0, 255]. A z slice is
// nx wide by ny tall; x and y slices put depth on the vertical axis.
void export_slice(const VoxelGrid& grid, SliceAxis axis, int index,
                  const std::filesystem::path& path);

}  // namespace geogen
