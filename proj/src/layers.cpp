#include "geogen/layers.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace geogen {
namespace {

constexpr int kInterfaceAttempts = 1000;
constexpr int kContrastAttempts = 1000;

// In-place lower Cholesky of a dense symmetric n x n matrix, tolerant of
// positive semi-definite inputs (zero pivots with zero residual columns).
// Returns false when the matrix is indefinite beyond tolerance.
bool cholesky(std::vector<double>& m, int n) {
    double scale = 0.0;
    for (int i = 0; i < n; ++i) scale = std::max(scale, std::abs(m[i * n + i]));
    if (scale == 0.0) scale = 1.0;
    const double tol = 1e-10 * scale;

    for (int j = 0; j < n; ++j) {
        double d = m[j * n + j];
        for (int k = 0; k < j; ++k) d -= m[j * n + k] * m[j * n + k];
        if (d < -tol) return false;
        const double ljj = std::sqrt(std::max(d, 0.0));
        m[j * n + j] = ljj;
        for (int i = j + 1; i < n; ++i) {
            double r = m[i * n + j];
            for (int k = 0; k < j; ++k) r -= m[i * n + k] * m[j * n + k];
            if (ljj > 0.0) {
                m[i * n + j] = r / ljj;
            } else {
                if (std::abs(r) > tol) return false;
                m[i * n + j] = 0.0;
            }
        }
        for (int k = j + 1; k < n; ++k) m[j * n + k] = 0.0;
    }
    return true;
}

}  // namespace

void LayerStack::validate(double total_depth, double min_thickness) const {
    if (n_layers < kMinLayers || n_layers > kMaxLayers)
        throw ValidationError("LayerStack: n_layers must lie in [3, 7]");
    if (static_cast<int>(interface_depths.size()) != n_layers - 1)
        throw ValidationError("LayerStack: expected n_layers - 1 interface depths");
    if (static_cast<int>(resistivities.size()) != n_layers)
        throw ValidationError("LayerStack: expected n_layers resistivities");
    double prev = 0.0;
    for (double d : interface_depths) {
        if (!(d > 0.0 && d < total_depth))
            throw ValidationError("LayerStack: interface outside (0, total_depth)");
        if (d - prev < min_thickness)
            throw ValidationError("LayerStack: layer thinner than minimum thickness");
        prev = d;
    }
    if (total_depth - prev < min_thickness)
        throw ValidationError("LayerStack: bottom layer thinner than minimum thickness");
    for (double r : resistivities) {
        if (!(r >= kMinResistivity && r <= kMaxResistivity))
            throw ValidationError("LayerStack: resistivity outside [1, 2000]");
    }
}

std::vector<double> sample_layer_interfaces(int n_layers, double total_depth,
                                            double min_thickness, RandomStream& rng) {
    if (n_layers < kMinLayers || n_layers > kMaxLayers)
        throw ValidationError("sample_layer_interfaces: n_layers must lie in [3, 7]");
    if (!(min_thickness > 0.0) || n_layers * min_thickness > total_depth)
        throw ValidationError("sample_layer_interfaces: infeasible thickness constraint");

    const int n_ifaces = n_layers - 1;
    std::vector<double> depths(n_ifaces);
    for (int attempt = 0; attempt < kInterfaceAttempts; ++attempt) {
        for (int i = 0; i < n_ifaces; ++i) depths[i] = rng.uniform(0.0, total_depth);
        std::sort(depths.begin(), depths.end());
        double prev = 0.0;
        bool ok = true;
        for (double d : depths) {
            if (d - prev < min_thickness) {
                ok = false;
                break;
            }
            prev = d;
        }
        if (ok && total_depth - prev >= min_thickness) return depths;
    }
    throw SamplingError("sample_layer_interfaces: rejection budget exhausted");
}

std::vector<double> sample_correlated_gaussian(const std::vector<double>& depths,
                                               const VonKarmanParams& p, RandomStream& rng) {
    if (depths.empty())
        throw ValidationError("sample_correlated_gaussian: empty depth list");
    p.validate();

    const int n = static_cast<int>(depths.size());
    std::vector<double> sigma(static_cast<std::size_t>(n) * n);
    double trace = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j <= i; ++j) {
            const double c = von_karman_cov(std::abs(depths[i] - depths[j]), p);
            sigma[i * n + j] = c;
            sigma[j * n + i] = c;
        }
        trace += sigma[i * n + i];
    }

    std::vector<double> chol = sigma;
    if (!cholesky(chol, n)) {
        const double nugget = 1e-8 * trace / n;
        chol = sigma;
        for (int i = 0; i < n; ++i) chol[i * n + i] += nugget;
        if (!cholesky(chol, n))
            throw NumericError("sample_correlated_gaussian: covariance not factorizable");
    }

    std::vector<double> g(n), out(n, 0.0);
    for (int i = 0; i < n; ++i) g[i] = rng.normal();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= i; ++j) out[i] += chol[i * n + j] * g[j];
    return out;
}

std::vector<double> sample_correlated_log_res(const std::vector<double>& depths,
                                              const VonKarmanParams& p, RandomStream& rng,
                                              double contrast_floor) {
    const double log_hi = std::log10(kMaxResistivity);
    const double mean = 0.5 * log_hi;
    // +-2.5 standard deviations span the full [0, log10(2000)] range
    const double sd = mean / 2.5;
    const double std0 = std::sqrt(von_karman_cov(0.0, p));

    std::vector<double> logres(depths.size());
    for (int attempt = 0; attempt < kContrastAttempts; ++attempt) {
        const std::vector<double> g = sample_correlated_gaussian(depths, p, rng);
        for (std::size_t i = 0; i < g.size(); ++i)
            logres[i] = std::clamp(mean + sd * g[i] / std0, 0.0, log_hi);
        bool ok = true;
        for (std::size_t i = 0; i + 1 < logres.size(); ++i) {
            if (std::abs(logres[i + 1] - logres[i]) < contrast_floor) {
                ok = false;
                break;
            }
        }
        if (ok || depths.size() < 2) return logres;
    }
    throw SamplingError("sample_correlated_log_res: contrast-floor budget exhausted");
}

VoxelGrid build_layered_grid(const LayerStack& stack, const GridSpec& spec) {
    spec.validate();
    stack.validate(spec.total_depth());

    // Per-depth layer lookup is identical for every column.
    std::vector<float> column(spec.nz);
    for (int k = 0; k < spec.nz; ++k) {
        const double z = spec.origin_z + (k + 0.5) * spec.cell_size;
        const auto it =
            std::upper_bound(stack.interface_depths.begin(), stack.interface_depths.end(), z);
        // upper_bound counts interfaces <= z, so a center exactly on an
        // interface lands in the deeper layer
        const std::size_t layer = static_cast<std::size_t>(
            std::distance(stack.interface_depths.begin(), it));
        column[k] = static_cast<float>(clamp_resistivity(stack.resistivities[layer]));
    }

    VoxelGrid grid(spec, 0.0f);
    for (int i = 0; i < spec.nx; ++i)
        for (int j = 0; j < spec.ny; ++j)
            for (int k = 0; k < spec.nz; ++k) grid.at(i, j, k) = column[k];
    return grid;
}

VoxelGrid build_halfspace_grid(double background, const GridSpec& spec) {
    spec.validate();
    const double steps = background / 100.0;
    if (!(background >= 100.0 && background <= 1000.0) ||
        steps != std::floor(steps))
        throw ValidationError("build_halfspace_grid: background must be in {100, 200, ..., 1000}");
    return VoxelGrid(spec, static_cast<float>(background));
}

}  // namespace geogen
