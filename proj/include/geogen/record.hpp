#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "geogen/anomaly.hpp"

namespace geogen {

inline constexpr const char* kGeneratorVersion = "1.0.0";
inline constexpr double kTransmitterHeightMin = 25.0;
inline constexpr double kTransmitterHeightMax = 100.0;

// The nine model categories.
enum class ModelCategory {
    HalfspaceAnomaly,
    Layered,
    LayeredAnomaly,
    LayeredFault,
    LayeredFaultAnomaly,
    Folded,
    FoldedAnomaly,
    FoldedFault,
    FoldedFaultAnomaly,
};

inline constexpr int kCategoryCount = 9;

inline constexpr std::array<ModelCategory, kCategoryCount> kAllCategories = {
    ModelCategory::HalfspaceAnomaly,    ModelCategory::Layered,
    ModelCategory::LayeredAnomaly,      ModelCategory::LayeredFault,
    ModelCategory::LayeredFaultAnomaly, ModelCategory::Folded,
    ModelCategory::FoldedAnomaly,       ModelCategory::FoldedFault,
    ModelCategory::FoldedFaultAnomaly,
};

const char* category_name(ModelCategory c);
std::optional<ModelCategory> category_from_name(std::string_view name);
std::string category_name_list();  // comma-separated, for error messages

bool category_has_anomalies(ModelCategory c);
bool category_has_layers(ModelCategory c);
bool category_has_faults(ModelCategory c);
bool category_has_folds(ModelCategory c);

// One manifest row: everything needed to locate and interpret a generated
// model.
struct ModelRecord {
    std::string id;
    ModelCategory category = ModelCategory::Layered;
    std::uint64_t seed = 0;
    std::optional<int> n_layers;  // absent for HalfspaceAnomaly
    int n_anomalies = 0;
    std::vector<AnomalyDescriptor> anomalies;
    double transmitter_height_m = 0.0;
    std::string generator_version;
    std::string grid_path;

    int fault_iterations = 0;
    int fold_iterations = 0;
    std::string fold_mode;  // "geological" or "literal"
    bool anomalies_overlap = false;

    void validate() const;
};

}  // namespace geogen
