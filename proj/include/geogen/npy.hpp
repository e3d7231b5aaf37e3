#pragma once

#include <filesystem>
#include <string>

#include "geogen/grid.hpp"

namespace geogen {

// Header bytes for an NPY v1.0 file holding the grid: magic, version (1,0),
// little-endian header length, then the ASCII dict
//   {'descr': '<f4', 'fortran_order': False, 'shape': (nx, ny, nz), }
// space-padded so the total header size is a multiple of 64 and newline-
// terminated. Payload is raw little-endian float32 in C order (x slowest,
// z fastest).
std::string npy_header(const GridSpec& spec);

void write_npy(const VoxelGrid& grid, const std::filesystem::path& path);

// Reads a v1.0 float32 NPY of rank 3. Grid geometry other than the cell
// counts is taken from geometry (defaulted when omitted); its nx/ny/nz must
// match the file or be left at the file's values via the default overload.
VoxelGrid read_npy(const std::filesystem::path& path);
VoxelGrid read_npy(const std::filesystem::path& path, const GridSpec& geometry);

}  // namespace geogen
