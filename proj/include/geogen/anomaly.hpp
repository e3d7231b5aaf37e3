#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "geogen/grid.hpp"
#include "geogen/rng.hpp"

namespace geogen {

enum class AnomalyKind { QuadrangularPrism, TriangularPrism, Sphere, Ellipsoid, Irregular };

const char* anomaly_kind_name(AnomalyKind kind);
AnomalyKind anomaly_kind_from_name(std::string_view name);

inline constexpr int kMaxAnomalies = 5;
inline constexpr double kDefaultAnomalyExtentMin = 20.0;   // meters
inline constexpr double kDefaultAnomalyExtentMax = 100.0;  // meters
inline constexpr double kDefaultAnomalyContrastFloor = 0.3;  // log10 units

// One anomalous body. extent holds half-sizes per axis (the radius for a
// sphere, replicated); orientation rotates prisms/ellipsoids about z. For
// Irregular bodies the extent/orientation define the ellipsoidal support and
// irregular_seed drives the noise field.
struct AnomalyDescriptor {
    AnomalyKind kind = AnomalyKind::Sphere;
    double cx = 0.0, cy = 0.0, cz = 0.0;  // center, meters
    double ex = 0.0, ey = 0.0, ez = 0.0;  // half-sizes, meters
    double orientation = 0.0;             // rotation about z, radians
    double resistivity = 0.0;             // ohm-m
    std::uint64_t irregular_seed = 0;

    void validate(const GridSpec& spec) const;
};

// Voxel mask in the grid's storage order (x slowest, z fastest).
using VoxelMask = std::vector<std::uint8_t>;

// True exactly where the voxel center lies inside the body (center-in rule).
VoxelMask rasterize_shape(const AnomalyDescriptor& desc, const GridSpec& spec);

// Irregular blob: smoothed value noise thresholded at its 60th percentile
// inside the support ellipsoid, largest 6-connected component kept.
// Deterministic in irregular_seed; never empty.
VoxelMask gen_irregular_mask(const AnomalyDescriptor& desc, const GridSpec& spec);

// Sets masked voxels to each body's resistivity, later descriptors winning on
// overlap; all other voxels are bitwise unchanged. Reports overlap if asked.
VoxelGrid stamp_anomalies(const VoxelGrid& grid, const std::vector<AnomalyDescriptor>& anomalies,
                          bool* overlapped = nullptr);

// Samples n bodies with kinds uniform over the five, resistivity log-uniform
// on [1, 2000], extents in [extent_min, extent_max], placed fully inside the
// domain with a one-cell margin. When host is given, bodies whose resistivity
// is within contrast_floor (log10) of the host value at their center are
// resampled.
std::vector<AnomalyDescriptor> sample_anomaly_set(
    int n, const GridSpec& spec, RandomStream& rng, const VoxelGrid* host = nullptr,
    double contrast_floor = kDefaultAnomalyContrastFloor,
    double extent_min = kDefaultAnomalyExtentMin, double extent_max = kDefaultAnomalyExtentMax);

}  // namespace geogen
