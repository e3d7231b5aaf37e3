#include "geogen/record.hpp"

#include "geogen/errors.hpp"
#include "geogen/layers.hpp"

namespace geogen {

const char* category_name(ModelCategory c) {
    switch (c) {
        case ModelCategory::HalfspaceAnomaly: return "halfspace_anomaly";
        case ModelCategory::Layered: return "layered";
        case ModelCategory::LayeredAnomaly: return "layered_anomaly";
        case ModelCategory::LayeredFault: return "layered_fault";
        case ModelCategory::LayeredFaultAnomaly: return "layered_fault_anomaly";
        case ModelCategory::Folded: return "folded";
        case ModelCategory::FoldedAnomaly: return "folded_anomaly";
        case ModelCategory::FoldedFault: return "folded_fault";
        case ModelCategory::FoldedFaultAnomaly: return "folded_fault_anomaly";
    }
    throw ValidationError("category_name: unknown category");
}

std::optional<ModelCategory> category_from_name(std::string_view name) {
    for (ModelCategory c : kAllCategories)
        if (name == category_name(c)) return c;
    return std::nullopt;
}

std::string category_name_list() {
    std::string out;
    for (ModelCategory c : kAllCategories) {
        if (!out.empty()) out += ", ";
        out += category_name(c);
    }
    return out;
}

bool category_has_anomalies(ModelCategory c) {
    switch (c) {
        case ModelCategory::HalfspaceAnomaly:
        case ModelCategory::LayeredAnomaly:
        case ModelCategory::LayeredFaultAnomaly:
        case ModelCategory::FoldedAnomaly:
        case ModelCategory::FoldedFaultAnomaly: return true;
        default: return false;
    }
}

bool category_has_layers(ModelCategory c) { return c != ModelCategory::HalfspaceAnomaly; }

bool category_has_faults(ModelCategory c) {
    switch (c) {
        case ModelCategory::LayeredFault:
        case ModelCategory::LayeredFaultAnomaly:
        case ModelCategory::FoldedFault:
        case ModelCategory::FoldedFaultAnomaly: return true;
        default: return false;
    }
}

bool category_has_folds(ModelCategory c) {
    switch (c) {
        case ModelCategory::Folded:
        case ModelCategory::FoldedAnomaly:
        case ModelCategory::FoldedFault:
        case ModelCategory::FoldedFaultAnomaly: return true;
        default: return false;
    }
}

void ModelRecord::validate() const {
    if (id.empty()) throw ValidationError("ModelRecord: empty id");
    if (grid_path.empty()) throw ValidationError("ModelRecord: empty grid_path");
    if (generator_version.empty()) throw ValidationError("ModelRecord: empty generator_version");
    if (!(transmitter_height_m >= kTransmitterHeightMin &&
          transmitter_height_m <= kTransmitterHeightMax))
        throw ValidationError("ModelRecord: transmitter height outside [25, 100]");
    if (category_has_layers(category)) {
        if (!n_layers || *n_layers < kMinLayers || *n_layers > kMaxLayers)
            throw ValidationError("ModelRecord: n_layers must lie in [3, 7]");
    } else if (n_layers) {
        throw ValidationError("ModelRecord: halfspace models carry no n_layers");
    }
    if (category_has_anomalies(category)) {
        if (n_anomalies < 1 || n_anomalies > kMaxAnomalies)
            throw ValidationError("ModelRecord: n_anomalies must lie in [1, 5]");
    } else if (n_anomalies != 0) {
        throw ValidationError("ModelRecord: non-anomaly category with anomalies");
    }
    if (static_cast<int>(anomalies.size()) != n_anomalies)
        throw ValidationError("ModelRecord: anomaly list length mismatch");
}

}  // namespace geogen
