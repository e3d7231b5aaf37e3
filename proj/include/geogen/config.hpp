#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>

#include "geogen/grid.hpp"
#include "geogen/layers.hpp"
#include "geogen/record.hpp"
#include "geogen/structure.hpp"

namespace geogen {

enum class HangingWallSource { Initial, Previous };

// Everything that determines a batch. Serializable to a flat key = value
// text file; unknown keys are rejected.
struct GenerationConfig {
    GridSpec grid;
    std::array<std::int64_t, kCategoryCount> counts{};  // per category
    std::uint64_t global_seed = 0;

    FoldMode fold_mode = FoldMode::Geological;
    HangingWallSource hanging_wall = HangingWallSource::Initial;
    int fault_iters_min = 1, fault_iters_max = 3;
    int fold_iters_min = 1, fold_iters_max = 2;

    // layer synthesis
    double vk_A = 1.0, vk_C = 1.0;
    double vk_nu_min = 0.3, vk_nu_max = 1.0;
    double vk_L_min = 50.0, vk_L_max = 300.0;
    double min_layer_thickness = kDefaultMinLayerThickness;
    double layer_contrast_floor = kDefaultLayerContrastFloor;

    // anomalies
    double anomaly_extent_min = kDefaultAnomalyExtentMin;
    double anomaly_extent_max = kDefaultAnomalyExtentMax;
    double anomaly_contrast_floor = kDefaultAnomalyContrastFloor;

    // structural transforms
    FaultRanges fault_ranges;
    FoldRanges fold_ranges;

    void validate() const;
    std::int64_t total_count() const;

    // Canonical serialization (sorted keys, %.17g floats) and its digest.
    std::string canonical_text() const;
    std::string digest() const;

    static GenerationConfig from_file(const std::filesystem::path& path);
    static GenerationConfig from_text(const std::string& text);
};

}  // namespace geogen
