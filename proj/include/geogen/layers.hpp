#pragma once

#include <vector>

#include "geogen/grid.hpp"
#include "geogen/rng.hpp"
#include "geogen/von_karman.hpp"

namespace geogen {

inline constexpr int kMinLayers = 3;
inline constexpr int kMaxLayers = 7;
inline constexpr double kDefaultMinLayerThickness = 20.0;  // meters, 2 cells
inline constexpr double kDefaultLayerContrastFloor = 0.05;  // log10 units

// Flat layered earth: n_layers resistivities separated by horizontal
// interfaces at strictly increasing depths.
struct LayerStack {
    int n_layers = 0;
    std::vector<double> interface_depths;  // length n_layers - 1
    std::vector<double> resistivities;     // length n_layers, ohm-m

    void validate(double total_depth, double min_thickness = kDefaultMinLayerThickness) const;
};

// Uniform stick-breaking with rejection until every gap (including to the
// surface and the bottom) is at least min_thickness.
std::vector<double> sample_layer_interfaces(int n_layers, double total_depth,
                                            double min_thickness, RandomStream& rng);

// Zero-mean Gaussian vector with Sigma_ij = von_karman_cov(|d_i - d_j|, p).
// Cholesky-based; a nugget of 1e-8 * trace/n is added once on factorization
// failure.
std::vector<double> sample_correlated_gaussian(const std::vector<double>& depths,
                                               const VonKarmanParams& p, RandomStream& rng);

// Correlated draw mapped affinely to log10-resistivity targets covering
// [1, 2000] and clamped; redraws while any adjacent pair differs by less than
// contrast_floor in log10 units.
std::vector<double> sample_correlated_log_res(const std::vector<double>& depths,
                                              const VonKarmanParams& p, RandomStream& rng,
                                              double contrast_floor = kDefaultLayerContrastFloor);

// Assigns each voxel the resistivity of the layer containing its center
// depth. An interface at depth d assigns centers with z >= d to the layer
// below.
VoxelGrid build_layered_grid(const LayerStack& stack, const GridSpec& spec);

// Constant grid; background must sit on the {100, 200, ..., 1000} lattice.
VoxelGrid build_halfspace_grid(double background, const GridSpec& spec);

}  // namespace geogen
