#pragma once

#include <utility>

#include "geogen/grid.hpp"
#include "geogen/rng.hpp"

namespace geogen {

// Fault surface f(x,y) = c x + d y + A1 sin(w1 x + phi1) + A2 cos(w2 y + phi2) + e.
// A flat fault has A1 = A2 = 0.
struct FaultSurfaceParams {
    double c = 0.0;
    double d = 0.0;
    double A1 = 0.0;
    double A2 = 0.0;
    double omega1 = 0.0;
    double omega2 = 0.0;
    double phi1 = 0.0;
    double phi2 = 0.0;
    double e = 0.0;
};

// Coordinate warp applied below the fault surface: the hanging-wall source is
// sampled at (a sin(2 pi k x) + s, a sin(2 pi k y) + s, z + s_prime).
struct FaultWarpParams {
    double a = 0.0;        // lateral warp amplitude, meters
    double k = 0.0;        // lateral warp frequency, 1/m
    double s = 0.0;        // lateral shift, meters
    double s_prime = 0.0;  // vertical throw, meters (nonzero for any sampled fault)
};

enum class FoldMode { Geological, LiteralEq4 };

struct FoldParams {
    double a = 0.0;   // amplitude, meters; a = 0 is the identity in both modes
    double kx = 0.0;  // 1/m
    double ky = 0.0;  // 1/m
    double phix = 0.0;
    double phiy = 0.0;
    FoldMode mode = FoldMode::Geological;
};

enum class FaultKind { Flat, Curved };

// Default sampling ranges for fault/fold parameters; cycle counts are per
// domain width, depth fractions per total depth.
struct FaultRanges {
    double throw_min = 20.0, throw_max = 80.0;
    double shift_max = 100.0;
    double warp_amp_max = 60.0;
    double cycles_min = 1.0, cycles_max = 3.0;
    double dip_max = 0.5;
    double depth_frac_min = 0.25, depth_frac_max = 0.75;
    double undulation_min = 10.0, undulation_max = 40.0;
    double omega_cycles_min = 1.0, omega_cycles_max = 3.0;  // omega ~ 2*pi*[1,3]/width
};

struct FoldRanges {
    double amp_min = 10.0, amp_max = 50.0;
    double cycles_min = 1.0, cycles_max = 3.0;
};

double eval_fault_surface(const FaultSurfaceParams& p, double x, double y);

// Faulted update: voxels with center depth z < f(x,y) keep r_prev bitwise;
// voxels with z >= f(x,y) take r0 nearest-neighbor sampled at the warped
// coordinates, clamped to the domain.
VoxelGrid apply_fault(const VoxelGrid& r0, const VoxelGrid& r_prev,
                      const FaultSurfaceParams& surf, const FaultWarpParams& warp);

// Geological mode: vertical sinusoidal shear
//   out(x,y,z) = in(x, y, z + a sin(2 pi kx x + phix) + a sin(2 pi ky y + phiy)).
// LiteralEq4 mode: out(x,y,z) = in(x, a sin(2 pi kx x), a sin(2 pi kx x)).
VoxelGrid apply_fold(const VoxelGrid& r_prev, const FoldParams& p);

// Rejection-samples a fault whose surface intersects the domain interior
// (min f over cell centers < total depth and max f > 0).
std::pair<FaultSurfaceParams, FaultWarpParams> sample_fault_params(
    FaultKind kind, const GridSpec& spec, RandomStream& rng, const FaultRanges& ranges = {});

FoldParams sample_fold_params(FoldMode mode, const GridSpec& spec, RandomStream& rng,
                              const FoldRanges& ranges = {});

}  // namespace geogen
