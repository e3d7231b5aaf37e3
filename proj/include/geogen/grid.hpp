#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "geogen/errors.hpp"

namespace geogen {

inline constexpr double kMinResistivity = 1.0;
inline constexpr double kMaxResistivity = 2000.0;

// Uniform voxel grid. z is positive downward with the surface at z = 0; this
// convention holds everywhere in the library.
struct GridSpec {
    int nx = 64;
    int ny = 64;
    int nz = 32;
    double cell_size = 10.0;
    double origin_x = 0.0;
    double origin_y = 0.0;
    double origin_z = 0.0;

    bool operator==(const GridSpec&) const = default;

    void validate() const {
        if (nx < 2 || ny < 2 || nz < 2)
            throw ValidationError("GridSpec: nx, ny, nz must all be >= 2");
        if (!(cell_size > 0.0) || !std::isfinite(cell_size))
            throw ValidationError("GridSpec: cell_size must be positive and finite");
    }

    std::size_t cell_count() const {
        return static_cast<std::size_t>(nx) * static_cast<std::size_t>(ny) *
               static_cast<std::size_t>(nz);
    }

    double width_x() const { return nx * cell_size; }
    double width_y() const { return ny * cell_size; }
    double total_depth() const { return nz * cell_size; }
};

inline double clamp_resistivity(double v) {
    if (!std::isfinite(v)) throw ValidationError("clamp_resistivity: non-finite value");
    return std::min(kMaxResistivity, std::max(kMinResistivity, v));
}

inline std::array<double, 3> voxel_center(const GridSpec& spec, int i, int j, int k) {
    if (i < 0 || i >= spec.nx || j < 0 || j >= spec.ny || k < 0 || k >= spec.nz)
        throw std::out_of_range("voxel_center: index out of range");
    return {spec.origin_x + (i + 0.5) * spec.cell_size,
            spec.origin_y + (j + 0.5) * spec.cell_size,
            spec.origin_z + (k + 0.5) * spec.cell_size};
}

// Index of the cell containing the coordinate, clamped to the grid.
inline int cell_of(double coord, double origin, double cell_size, int n) {
    const int i = static_cast<int>(std::floor((coord - origin) / cell_size));
    return std::clamp(i, 0, n - 1);
}

// Dense resistivity volume, x slowest / z fastest. Values are stored as
// 32-bit floats; generation math runs in double and casts at storage.
class VoxelGrid {
public:
    VoxelGrid(GridSpec spec, float fill) : spec_(spec), values_(spec.cell_count(), fill) {
        spec_.validate();
    }

    VoxelGrid(GridSpec spec, std::vector<float> values)
        : spec_(spec), values_(std::move(values)) {
        spec_.validate();
        if (values_.size() != spec_.cell_count())
            throw ValidationError("VoxelGrid: value array length does not match grid");
    }

    const GridSpec& spec() const { return spec_; }
    std::size_t size() const { return values_.size(); }

    std::size_t index(int i, int j, int k) const {
        return (static_cast<std::size_t>(i) * spec_.ny + j) * spec_.nz + k;
    }

    float at(int i, int j, int k) const { return values_[index(i, j, k)]; }
    float& at(int i, int j, int k) { return values_[index(i, j, k)]; }

    std::span<const float> values() const { return values_; }
    std::vector<float>& raw() { return values_; }

    // Nearest-neighbor sample at a point; out-of-domain coordinates clamp to
    // the boundary cell.
    float sample_nearest(double x, double y, double z) const {
        const int i = cell_of(x, spec_.origin_x, spec_.cell_size, spec_.nx);
        const int j = cell_of(y, spec_.origin_y, spec_.cell_size, spec_.ny);
        const int k = cell_of(z, spec_.origin_z, spec_.cell_size, spec_.nz);
        return at(i, j, k);
    }

    // Checks the global resistivity invariant.
    void validate_values() const {
        for (float v : values_) {
            if (!(v >= kMinResistivity && v <= kMaxResistivity))
                throw ValidationError("VoxelGrid: resistivity outside [1, 2000]");
        }
    }

private:
    GridSpec spec_;
    std::vector<float> values_;
};

}  // namespace geogen
