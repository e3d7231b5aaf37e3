#include "geogen/structure.hpp"

#include <cmath>
#include <limits>

namespace geogen {
namespace {

constexpr double kTwoPi = 2.0 * 3.14159265358979323846;
constexpr int kFaultAttempts = 1000;

}  // namespace

double eval_fault_surface(const FaultSurfaceParams& p, double x, double y) {
    return p.c * x + p.d * y + p.A1 * std::sin(p.omega1 * x + p.phi1) +
           p.A2 * std::cos(p.omega2 * y + p.phi2) + p.e;
}

VoxelGrid apply_fault(const VoxelGrid& r0, const VoxelGrid& r_prev,
                      const FaultSurfaceParams& surf, const FaultWarpParams& warp) {
    if (!(r0.spec() == r_prev.spec()))
        throw ValidationError("apply_fault: grid specs differ");
    const GridSpec& spec = r0.spec();

    VoxelGrid out = r_prev;
    for (int i = 0; i < spec.nx; ++i) {
        const double x = spec.origin_x + (i + 0.5) * spec.cell_size;
        const double wx = warp.a * std::sin(kTwoPi * warp.k * x) + warp.s;
        for (int j = 0; j < spec.ny; ++j) {
            const double y = spec.origin_y + (j + 0.5) * spec.cell_size;
            const double wy = warp.a * std::sin(kTwoPi * warp.k * y) + warp.s;
            const double f = eval_fault_surface(surf, x, y);
            for (int k = 0; k < spec.nz; ++k) {
                const double z = spec.origin_z + (k + 0.5) * spec.cell_size;
                if (z >= f) out.at(i, j, k) = r0.sample_nearest(wx, wy, z + warp.s_prime);
            }
        }
    }
    return out;
}

VoxelGrid apply_fold(const VoxelGrid& r_prev, const FoldParams& p) {
    if (p.a < 0.0) throw ValidationError("apply_fold: amplitude must be >= 0");
    if (p.a == 0.0) return r_prev;  // identity in both modes

    const GridSpec& spec = r_prev.spec();
    VoxelGrid out(spec, 0.0f);
    if (p.mode == FoldMode::LiteralEq4) {
        for (int i = 0; i < spec.nx; ++i) {
            const double x = spec.origin_x + (i + 0.5) * spec.cell_size;
            const double w = p.a * std::sin(kTwoPi * p.kx * x);
            const float v = r_prev.sample_nearest(x, w, w);
            for (int j = 0; j < spec.ny; ++j)
                for (int k = 0; k < spec.nz; ++k) out.at(i, j, k) = v;
        }
        return out;
    }

    for (int i = 0; i < spec.nx; ++i) {
        const double x = spec.origin_x + (i + 0.5) * spec.cell_size;
        const double dx = p.a * std::sin(kTwoPi * p.kx * x + p.phix);
        for (int j = 0; j < spec.ny; ++j) {
            const double y = spec.origin_y + (j + 0.5) * spec.cell_size;
            const double shear = dx + p.a * std::sin(kTwoPi * p.ky * y + p.phiy);
            for (int k = 0; k < spec.nz; ++k) {
                const double z = spec.origin_z + (k + 0.5) * spec.cell_size;
                const int ks = cell_of(z + shear, spec.origin_z, spec.cell_size, spec.nz);
                out.at(i, j, k) = r_prev.at(i, j, ks);
            }
        }
    }
    return out;
}

std::pair<FaultSurfaceParams, FaultWarpParams> sample_fault_params(
    FaultKind kind, const GridSpec& spec, RandomStream& rng, const FaultRanges& ranges) {
    spec.validate();
    const double width = spec.width_x();
    const double depth = spec.total_depth();

    for (int attempt = 0; attempt < kFaultAttempts; ++attempt) {
        FaultSurfaceParams surf;
        surf.c = rng.uniform(-ranges.dip_max, ranges.dip_max);
        surf.d = rng.uniform(-ranges.dip_max, ranges.dip_max);
        surf.e = spec.origin_z + depth * rng.uniform(ranges.depth_frac_min, ranges.depth_frac_max);
        if (kind == FaultKind::Curved) {
            surf.A1 = rng.uniform(ranges.undulation_min, ranges.undulation_max);
            surf.A2 = rng.uniform(ranges.undulation_min, ranges.undulation_max);
        }
        surf.omega1 = kTwoPi * rng.uniform(ranges.omega_cycles_min, ranges.omega_cycles_max) / width;
        surf.omega2 = kTwoPi * rng.uniform(ranges.omega_cycles_min, ranges.omega_cycles_max) / width;
        surf.phi1 = rng.uniform(0.0, kTwoPi);
        surf.phi2 = rng.uniform(0.0, kTwoPi);

        FaultWarpParams warp;
        warp.a = rng.uniform(0.0, ranges.warp_amp_max);
        warp.k = rng.uniform(ranges.cycles_min, ranges.cycles_max) / width;
        warp.s = rng.uniform(0.0, ranges.shift_max);
        const double mag = rng.uniform(ranges.throw_min, ranges.throw_max);
        warp.s_prime = rng.coin() ? mag : -mag;

        // the surface must cut through the domain interior
        double fmin = std::numeric_limits<double>::infinity();
        double fmax = -fmin;
        for (int i = 0; i < spec.nx; ++i) {
            const double x = spec.origin_x + (i + 0.5) * spec.cell_size;
            for (int j = 0; j < spec.ny; ++j) {
                const double y = spec.origin_y + (j + 0.5) * spec.cell_size;
                const double f = eval_fault_surface(surf, x, y);
                fmin = std::min(fmin, f);
                fmax = std::max(fmax, f);
            }
        }
        if (fmin < spec.origin_z + depth && fmax > spec.origin_z)
            return {surf, warp};
    }
    throw SamplingError("sample_fault_params: rejection budget exhausted");
}

FoldParams sample_fold_params(FoldMode mode, const GridSpec& spec, RandomStream& rng,
                              const FoldRanges& ranges) {
    spec.validate();
    FoldParams p;
    p.mode = mode;
    p.a = rng.uniform(ranges.amp_min, ranges.amp_max);
    p.kx = rng.uniform(ranges.cycles_min, ranges.cycles_max) / spec.width_x();
    p.ky = rng.uniform(ranges.cycles_min, ranges.cycles_max) / spec.width_y();
    p.phix = rng.uniform(0.0, kTwoPi);
    p.phiy = rng.uniform(0.0, kTwoPi);
    return p;
}

}  // namespace geogen
