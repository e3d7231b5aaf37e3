#include "geogen/config.hpp"

#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "geogen/metadata.hpp"

namespace geogen {
namespace {

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

double parse_double(const std::string& key, const std::string& v) {
    try {
        std::size_t pos = 0;
        const double d = std::stod(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return d;
    } catch (const std::exception&) {
        throw ValidationError("config: bad numeric value for " + key + ": " + v);
    }
}

std::int64_t parse_int(const std::string& key, const std::string& v) {
    try {
        std::size_t pos = 0;
        const std::int64_t i = std::stoll(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return i;
    } catch (const std::exception&) {
        throw ValidationError("config: bad integer value for " + key + ": " + v);
    }
}

std::uint64_t parse_u64(const std::string& key, const std::string& v) {
    try {
        std::size_t pos = 0;
        const std::uint64_t i = std::stoull(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return i;
    } catch (const std::exception&) {
        throw ValidationError("config: bad unsigned value for " + key + ": " + v);
    }
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

// key -> (serialize, parse) pairs; a single table keeps the canonical text
// and the parser in sync
struct Field {
    std::function<std::string(const GenerationConfig&)> get;
    std::function<void(GenerationConfig&, const std::string&, const std::string&)> set;
};

std::map<std::string, Field> make_fields() {
    std::map<std::string, Field> f;
    const auto dbl = [&](const std::string& key, double GenerationConfig::* member) {
        f[key] = {[member](const GenerationConfig& c) { return fmt_double(c.*member); },
                  [member](GenerationConfig& c, const std::string& k, const std::string& v) {
                      c.*member = parse_double(k, v);
                  }};
    };
    const auto intf = [&](const std::string& key, int GenerationConfig::* member) {
        f[key] = {[member](const GenerationConfig& c) { return std::to_string(c.*member); },
                  [member](GenerationConfig& c, const std::string& k, const std::string& v) {
                      c.*member = static_cast<int>(parse_int(k, v));
                  }};
    };
    const auto frange = [&](const std::string& key, double FaultRanges::* member) {
        f[key] = {[member](const GenerationConfig& c) { return fmt_double(c.fault_ranges.*member); },
                  [member](GenerationConfig& c, const std::string& k, const std::string& v) {
                      c.fault_ranges.*member = parse_double(k, v);
                  }};
    };

    f["seed"] = {[](const GenerationConfig& c) { return std::to_string(c.global_seed); },
                 [](GenerationConfig& c, const std::string& k, const std::string& v) {
                     c.global_seed = parse_u64(k, v);
                 }};
    f["grid.nx"] = {[](const GenerationConfig& c) { return std::to_string(c.grid.nx); },
                    [](GenerationConfig& c, const std::string& k, const std::string& v) {
                        c.grid.nx = static_cast<int>(parse_int(k, v));
                    }};
    f["grid.ny"] = {[](const GenerationConfig& c) { return std::to_string(c.grid.ny); },
                    [](GenerationConfig& c, const std::string& k, const std::string& v) {
                        c.grid.ny = static_cast<int>(parse_int(k, v));
                    }};
    f["grid.nz"] = {[](const GenerationConfig& c) { return std::to_string(c.grid.nz); },
                    [](GenerationConfig& c, const std::string& k, const std::string& v) {
                        c.grid.nz = static_cast<int>(parse_int(k, v));
                    }};
    f["grid.cell_size"] = {
        [](const GenerationConfig& c) { return fmt_double(c.grid.cell_size); },
        [](GenerationConfig& c, const std::string& k, const std::string& v) {
            c.grid.cell_size = parse_double(k, v);
        }};

    for (int ci = 0; ci < kCategoryCount; ++ci) {
        const std::string key = std::string("count.") + category_name(kAllCategories[ci]);
        f[key] = {[ci](const GenerationConfig& c) { return std::to_string(c.counts[ci]); },
                  [ci](GenerationConfig& c, const std::string& k, const std::string& v) {
                      c.counts[ci] = parse_int(k, v);
                  }};
    }

    f["fold.mode"] = {
        [](const GenerationConfig& c) {
            return std::string(c.fold_mode == FoldMode::Geological ? "geological" : "literal");
        },
        [](GenerationConfig& c, const std::string& k, const std::string& v) {
            if (v == "geological")
                c.fold_mode = FoldMode::Geological;
            else if (v == "literal")
                c.fold_mode = FoldMode::LiteralEq4;
            else
                throw ValidationError("config: " + k + " must be geological or literal");
        }};
    f["fault.hanging_wall_source"] = {
        [](const GenerationConfig& c) {
            return std::string(c.hanging_wall == HangingWallSource::Initial ? "initial"
                                                                            : "previous");
        },
        [](GenerationConfig& c, const std::string& k, const std::string& v) {
            if (v == "initial")
                c.hanging_wall = HangingWallSource::Initial;
            else if (v == "previous")
                c.hanging_wall = HangingWallSource::Previous;
            else
                throw ValidationError("config: " + k + " must be initial or previous");
        }};

    intf("fault.iterations.min", &GenerationConfig::fault_iters_min);
    intf("fault.iterations.max", &GenerationConfig::fault_iters_max);
    intf("fold.iterations.min", &GenerationConfig::fold_iters_min);
    intf("fold.iterations.max", &GenerationConfig::fold_iters_max);

    dbl("layers.von_karman.A", &GenerationConfig::vk_A);
    dbl("layers.von_karman.C", &GenerationConfig::vk_C);
    dbl("layers.von_karman.nu.min", &GenerationConfig::vk_nu_min);
    dbl("layers.von_karman.nu.max", &GenerationConfig::vk_nu_max);
    dbl("layers.von_karman.L.min", &GenerationConfig::vk_L_min);
    dbl("layers.von_karman.L.max", &GenerationConfig::vk_L_max);
    dbl("layers.min_thickness", &GenerationConfig::min_layer_thickness);
    dbl("layers.contrast_floor", &GenerationConfig::layer_contrast_floor);

    dbl("anomaly.extent.min", &GenerationConfig::anomaly_extent_min);
    dbl("anomaly.extent.max", &GenerationConfig::anomaly_extent_max);
    dbl("anomaly.contrast_floor", &GenerationConfig::anomaly_contrast_floor);

    frange("fault.throw.min", &FaultRanges::throw_min);
    frange("fault.throw.max", &FaultRanges::throw_max);
    frange("fault.shift.max", &FaultRanges::shift_max);
    frange("fault.warp_amplitude.max", &FaultRanges::warp_amp_max);
    frange("fault.warp_cycles.min", &FaultRanges::cycles_min);
    frange("fault.warp_cycles.max", &FaultRanges::cycles_max);
    frange("fault.dip.max", &FaultRanges::dip_max);
    frange("fault.depth_fraction.min", &FaultRanges::depth_frac_min);
    frange("fault.depth_fraction.max", &FaultRanges::depth_frac_max);
    frange("fault.undulation.min", &FaultRanges::undulation_min);
    frange("fault.undulation.max", &FaultRanges::undulation_max);
    frange("fault.surface_cycles.min", &FaultRanges::omega_cycles_min);
    frange("fault.surface_cycles.max", &FaultRanges::omega_cycles_max);

    f["fold.amplitude.min"] = {
        [](const GenerationConfig& c) { return fmt_double(c.fold_ranges.amp_min); },
        [](GenerationConfig& c, const std::string& k, const std::string& v) {
            c.fold_ranges.amp_min = parse_double(k, v);
        }};
    f["fold.amplitude.max"] = {
        [](const GenerationConfig& c) { return fmt_double(c.fold_ranges.amp_max); },
        [](GenerationConfig& c, const std::string& k, const std::string& v) {
            c.fold_ranges.amp_max = parse_double(k, v);
        }};
    f["fold.cycles.min"] = {
        [](const GenerationConfig& c) { return fmt_double(c.fold_ranges.cycles_min); },
        [](GenerationConfig& c, const std::string& k, const std::string& v) {
            c.fold_ranges.cycles_min = parse_double(k, v);
        }};
    f["fold.cycles.max"] = {
        [](const GenerationConfig& c) { return fmt_double(c.fold_ranges.cycles_max); },
        [](GenerationConfig& c, const std::string& k, const std::string& v) {
            c.fold_ranges.cycles_max = parse_double(k, v);
        }};
    return f;
}

const std::map<std::string, Field>& fields() {
    static const std::map<std::string, Field> f = make_fields();
    return f;
}

}  // namespace

void GenerationConfig::validate() const {
    grid.validate();
    bool any = false;
    for (std::int64_t c : counts) {
        if (c < 0) throw ValidationError("GenerationConfig: negative count");
        any = any || c > 0;
    }
    if (!any) throw ValidationError("GenerationConfig: all counts are zero");
    if (fault_iters_min < 1 || fault_iters_max > 3 || fault_iters_min > fault_iters_max)
        throw ValidationError("GenerationConfig: fault iterations must lie in [1, 3]");
    if (fold_iters_min < 1 || fold_iters_max > 2 || fold_iters_min > fold_iters_max)
        throw ValidationError("GenerationConfig: fold iterations must lie in [1, 2]");
    if (!(vk_nu_min > 0.0 && vk_nu_max <= 2.0 && vk_nu_min <= vk_nu_max))
        throw ValidationError("GenerationConfig: nu range must lie in (0, 2]");
    if (!(vk_L_min > 0.0 && vk_L_min <= vk_L_max))
        throw ValidationError("GenerationConfig: bad correlation length range");
    if (!(vk_A > 0.0 && vk_C > 0.0))
        throw ValidationError("GenerationConfig: A and C must be positive");
    if (!(min_layer_thickness > 0.0))
        throw ValidationError("GenerationConfig: min thickness must be positive");
    if (!(anomaly_extent_min > 0.0 && anomaly_extent_min <= anomaly_extent_max))
        throw ValidationError("GenerationConfig: bad anomaly extent range");
}

std::int64_t GenerationConfig::total_count() const {
    std::int64_t t = 0;
    for (std::int64_t c : counts) t += c;
    return t;
}

std::string GenerationConfig::canonical_text() const {
    std::ostringstream os;
    for (const auto& [key, field] : fields()) os << key << " = " << field.get(*this) << "\n";
    return os.str();
}

std::string GenerationConfig::digest() const { return digest_text(canonical_text()); }

GenerationConfig GenerationConfig::from_text(const std::string& text) {
    GenerationConfig cfg;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ValidationError("config line " + std::to_string(lineno) +
                                  ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        const auto it = fields().find(key);
        if (it == fields().end())
            throw ValidationError("config line " + std::to_string(lineno) + ": unknown key " +
                                  key);
        it->second.set(cfg, key, value);
    }
    return cfg;
}

GenerationConfig GenerationConfig::from_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("config: cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return from_text(buf.str());
}

}  // namespace geogen
