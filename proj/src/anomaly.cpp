#include "geogen/anomaly.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <string>

namespace geogen {
namespace {

constexpr int kPlacementAttempts = 1000;
constexpr int kIrregularAttempts = 10;
constexpr double kIrregularThresholdQuantile = 0.60;

struct Rot {
    double c, s;
    explicit Rot(double theta) : c(std::cos(theta)), s(std::sin(theta)) {}
    // inverse rotation about z (world -> body frame)
    void inverse(double dx, double dy, double& bx, double& by) const {
        bx = c * dx + s * dy;
        by = -s * dx + c * dy;
    }
};

bool point_in_triangle_xy(double bx, double by, double ex, double ey) {
    // cross-section triangle: (-ex, -ey), (ex, -ey), (0, ey)
    if (by < -ey) return false;
    // edges from (+-ex, -ey) to the apex (0, ey)
    const double t = (by + ey) / (2.0 * ey);  // 0 at base, 1 at apex
    const double half_width = ex * (1.0 - t);
    return std::abs(bx) <= half_width;
}

bool inside_regular(const AnomalyDescriptor& d, double x, double y, double z) {
    const double dx = x - d.cx, dy = y - d.cy, dz = z - d.cz;
    switch (d.kind) {
        case AnomalyKind::Sphere:
            return dx * dx + dy * dy + dz * dz <= d.ex * d.ex;
        case AnomalyKind::Ellipsoid: {
            Rot r(d.orientation);
            double bx, by;
            r.inverse(dx, dy, bx, by);
            const double q = bx * bx / (d.ex * d.ex) + by * by / (d.ey * d.ey) +
                             dz * dz / (d.ez * d.ez);
            return q <= 1.0;
        }
        case AnomalyKind::QuadrangularPrism: {
            Rot r(d.orientation);
            double bx, by;
            r.inverse(dx, dy, bx, by);
            return std::abs(bx) <= d.ex && std::abs(by) <= d.ey && std::abs(dz) <= d.ez;
        }
        case AnomalyKind::TriangularPrism: {
            Rot r(d.orientation);
            double bx, by;
            r.inverse(dx, dy, bx, by);
            return std::abs(dz) <= d.ez && point_in_triangle_xy(bx, by, d.ex, d.ey);
        }
        case AnomalyKind::Irregular:
            break;
    }
    throw ValidationError("inside_regular: irregular kind has no analytic shape");
}

VoxelMask support_ellipsoid_mask(const AnomalyDescriptor& desc, const GridSpec& spec) {
    AnomalyDescriptor support = desc;
    support.kind = AnomalyKind::Ellipsoid;
    return rasterize_shape(support, spec);
}

// Largest 6-connected component of the mask; empty input stays empty.
VoxelMask largest_component(const VoxelMask& mask, const GridSpec& spec) {
    std::vector<int> label(mask.size(), -1);
    int best_label = -1;
    std::size_t best_count = 0;
    int next_label = 0;
    std::deque<std::size_t> queue;

    const auto idx = [&](int i, int j, int k) {
        return (static_cast<std::size_t>(i) * spec.ny + j) * spec.nz + k;
    };

    for (int i = 0; i < spec.nx; ++i)
        for (int j = 0; j < spec.ny; ++j)
            for (int k = 0; k < spec.nz; ++k) {
                const std::size_t start = idx(i, j, k);
                if (!mask[start] || label[start] >= 0) continue;
                const int cur = next_label++;
                std::size_t count = 0;
                label[start] = cur;
                queue.push_back(start);
                while (!queue.empty()) {
                    const std::size_t c = queue.front();
                    queue.pop_front();
                    ++count;
                    const int ci = static_cast<int>(c / (static_cast<std::size_t>(spec.ny) * spec.nz));
                    const int cj = static_cast<int>((c / spec.nz) % spec.ny);
                    const int ck = static_cast<int>(c % spec.nz);
                    const int di[6] = {1, -1, 0, 0, 0, 0};
                    const int dj[6] = {0, 0, 1, -1, 0, 0};
                    const int dk[6] = {0, 0, 0, 0, 1, -1};
                    for (int n = 0; n < 6; ++n) {
                        const int ni = ci + di[n], nj = cj + dj[n], nk = ck + dk[n];
                        if (ni < 0 || ni >= spec.nx || nj < 0 || nj >= spec.ny || nk < 0 ||
                            nk >= spec.nz)
                            continue;
                        const std::size_t nidx = idx(ni, nj, nk);
                        if (mask[nidx] && label[nidx] < 0) {
                            label[nidx] = cur;
                            queue.push_back(nidx);
                        }
                    }
                }
                if (count > best_count) {
                    best_count = count;
                    best_label = cur;
                }
            }

    VoxelMask out(mask.size(), 0);
    if (best_label >= 0)
        for (std::size_t n = 0; n < mask.size(); ++n) out[n] = (label[n] == best_label) ? 1 : 0;
    return out;
}

}  // namespace

const char* anomaly_kind_name(AnomalyKind kind) {
    switch (kind) {
        case AnomalyKind::QuadrangularPrism: return "quadrangular_prism";
        case AnomalyKind::TriangularPrism: return "triangular_prism";
        case AnomalyKind::Sphere: return "sphere";
        case AnomalyKind::Ellipsoid: return "ellipsoid";
        case AnomalyKind::Irregular: return "irregular";
    }
    throw ValidationError("anomaly_kind_name: unknown kind");
}

AnomalyKind anomaly_kind_from_name(std::string_view name) {
    for (AnomalyKind k : {AnomalyKind::QuadrangularPrism, AnomalyKind::TriangularPrism,
                          AnomalyKind::Sphere, AnomalyKind::Ellipsoid, AnomalyKind::Irregular})
        if (name == anomaly_kind_name(k)) return k;
    throw FormatError("unknown anomaly kind: " + std::string(name));
}

void AnomalyDescriptor::validate(const GridSpec& spec) const {
    spec.validate();
    if (!(ex > 0.0 && ey > 0.0 && ez > 0.0))
        throw ValidationError("AnomalyDescriptor: half-sizes must be positive");
    if (!(resistivity >= kMinResistivity && resistivity <= kMaxResistivity))
        throw ValidationError("AnomalyDescriptor: resistivity outside [1, 2000]");
    // conservative rotated bounds: circumscribed radius laterally, ez in z
    const double r_xy = std::hypot(ex, ey);
    const double margin = spec.cell_size;
    if (cx - r_xy < spec.origin_x + margin || cx + r_xy > spec.origin_x + spec.width_x() - margin ||
        cy - r_xy < spec.origin_y + margin || cy + r_xy > spec.origin_y + spec.width_y() - margin)
        throw ValidationError("AnomalyDescriptor: body violates lateral margin");
    if (cz - ez < spec.origin_z + margin || cz + ez > spec.origin_z + spec.total_depth() - margin)
        throw ValidationError("AnomalyDescriptor: body violates depth margin");
}

VoxelMask rasterize_shape(const AnomalyDescriptor& desc, const GridSpec& spec) {
    spec.validate();
    if (desc.kind == AnomalyKind::Irregular) return gen_irregular_mask(desc, spec);

    VoxelMask mask(spec.cell_count(), 0);
    std::size_t n = 0;
    for (int i = 0; i < spec.nx; ++i) {
        const double x = spec.origin_x + (i + 0.5) * spec.cell_size;
        for (int j = 0; j < spec.ny; ++j) {
            const double y = spec.origin_y + (j + 0.5) * spec.cell_size;
            for (int k = 0; k < spec.nz; ++k, ++n) {
                const double z = spec.origin_z + (k + 0.5) * spec.cell_size;
                mask[n] = inside_regular(desc, x, y, z) ? 1 : 0;
            }
        }
    }
    return mask;
}

VoxelMask gen_irregular_mask(const AnomalyDescriptor& desc, const GridSpec& spec) {
    if (desc.kind != AnomalyKind::Irregular)
        throw ValidationError("gen_irregular_mask: descriptor is not irregular");
    const VoxelMask support = support_ellipsoid_mask(desc, spec);

    for (int attempt = 0; attempt < kIrregularAttempts; ++attempt) {
        const std::uint64_t seed =
            attempt == 0 ? desc.irregular_seed : derive_seed(desc.irregular_seed, attempt);

        // per-cell lattice noise keyed by (seed, linear index)
        std::vector<float> noise(spec.cell_count());
        for (std::size_t n = 0; n < noise.size(); ++n) {
            std::uint64_t h = seed ^ (static_cast<std::uint64_t>(n) * 0x9E3779B97F4A7C15ULL);
            noise[n] = static_cast<float>(static_cast<double>(splitmix64(h) >> 11) * 0x1.0p-53);
        }

        // 3-cell box smoothing, edge-clamped
        std::vector<float> smooth(noise.size(), 0.0f);
        for (int i = 0; i < spec.nx; ++i)
            for (int j = 0; j < spec.ny; ++j)
                for (int k = 0; k < spec.nz; ++k) {
                    double acc = 0.0;
                    int cnt = 0;
                    for (int di = -1; di <= 1; ++di)
                        for (int dj = -1; dj <= 1; ++dj)
                            for (int dk = -1; dk <= 1; ++dk) {
                                const int ni = std::clamp(i + di, 0, spec.nx - 1);
                                const int nj = std::clamp(j + dj, 0, spec.ny - 1);
                                const int nk = std::clamp(k + dk, 0, spec.nz - 1);
                                acc += noise[(static_cast<std::size_t>(ni) * spec.ny + nj) *
                                                 spec.nz +
                                             nk];
                                ++cnt;
                            }
                    smooth[(static_cast<std::size_t>(i) * spec.ny + j) * spec.nz + k] =
                        static_cast<float>(acc / cnt);
                }

        std::vector<float> inside;
        for (std::size_t n = 0; n < support.size(); ++n)
            if (support[n]) inside.push_back(smooth[n]);
        if (inside.empty())
            throw SamplingError("gen_irregular_mask: support ellipsoid covers no voxel");

        const std::size_t qi =
            static_cast<std::size_t>(kIrregularThresholdQuantile * (inside.size() - 1));
        std::nth_element(inside.begin(), inside.begin() + qi, inside.end());
        const float threshold = inside[qi];

        VoxelMask mask(spec.cell_count(), 0);
        bool any = false;
        for (std::size_t n = 0; n < mask.size(); ++n) {
            mask[n] = (support[n] && smooth[n] > threshold) ? 1 : 0;
            any = any || mask[n];
        }
        if (!any) continue;
        mask = largest_component(mask, spec);
        for (std::uint8_t v : mask)
            if (v) return mask;
    }
    throw SamplingError("gen_irregular_mask: empty mask after retries");
}

VoxelGrid stamp_anomalies(const VoxelGrid& grid, const std::vector<AnomalyDescriptor>& anomalies,
                          bool* overlapped) {
    VoxelGrid out = grid;
    VoxelMask covered(grid.size(), 0);
    bool overlap = false;
    for (const AnomalyDescriptor& desc : anomalies) {
        desc.validate(grid.spec());
        const VoxelMask mask = rasterize_shape(desc, grid.spec());
        const float value = static_cast<float>(clamp_resistivity(desc.resistivity));
        for (std::size_t n = 0; n < mask.size(); ++n) {
            if (!mask[n]) continue;
            if (covered[n]) overlap = true;
            covered[n] = 1;
            out.raw()[n] = value;
        }
    }
    if (overlapped) *overlapped = overlap;
    return out;
}

std::vector<AnomalyDescriptor> sample_anomaly_set(int n, const GridSpec& spec, RandomStream& rng,
                                                  const VoxelGrid* host, double contrast_floor,
                                                  double extent_min, double extent_max) {
    spec.validate();
    if (n < 1 || n > kMaxAnomalies)
        throw ValidationError("sample_anomaly_set: count must lie in [1, 5]");

    constexpr AnomalyKind kKinds[5] = {AnomalyKind::QuadrangularPrism,
                                       AnomalyKind::TriangularPrism, AnomalyKind::Sphere,
                                       AnomalyKind::Ellipsoid, AnomalyKind::Irregular};
    const double log_hi = std::log10(kMaxResistivity);
    const double margin = spec.cell_size;

    std::vector<AnomalyDescriptor> out;
    out.reserve(n);
    for (int body = 0; body < n; ++body) {
        bool placed = false;
        for (int attempt = 0; attempt < kPlacementAttempts && !placed; ++attempt) {
            AnomalyDescriptor d;
            d.kind = kKinds[rng.uniform_below(5)];
            if (d.kind == AnomalyKind::Sphere) {
                d.ex = d.ey = d.ez = rng.uniform(extent_min, extent_max);
            } else {
                d.ex = rng.uniform(extent_min, extent_max);
                d.ey = rng.uniform(extent_min, extent_max);
                d.ez = rng.uniform(extent_min, extent_max);
                d.orientation = rng.uniform(0.0, 2.0 * 3.14159265358979323846);
            }
            if (d.kind == AnomalyKind::Irregular) d.irregular_seed = rng.next_u64();
            d.resistivity = std::pow(10.0, rng.uniform(0.0, log_hi));

            const double r_xy = std::hypot(d.ex, d.ey);
            const double xlo = spec.origin_x + margin + r_xy;
            const double xhi = spec.origin_x + spec.width_x() - margin - r_xy;
            const double ylo = spec.origin_y + margin + r_xy;
            const double yhi = spec.origin_y + spec.width_y() - margin - r_xy;
            const double zlo = spec.origin_z + margin + d.ez;
            const double zhi = spec.origin_z + spec.total_depth() - margin - d.ez;
            if (xlo >= xhi || ylo >= yhi || zlo >= zhi) continue;
            d.cx = rng.uniform(xlo, xhi);
            d.cy = rng.uniform(ylo, yhi);
            d.cz = rng.uniform(zlo, zhi);

            if (host) {
                const double h = host->sample_nearest(d.cx, d.cy, d.cz);
                if (std::abs(std::log10(d.resistivity / h)) < contrast_floor) continue;
            }
            d.validate(spec);
            out.push_back(d);
            placed = true;
        }
        if (!placed) throw SamplingError("sample_anomaly_set: placement budget exhausted");
    }
    return out;
}

}  // namespace geogen
