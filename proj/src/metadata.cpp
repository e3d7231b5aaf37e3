#include "geogen/metadata.hpp"

#include <fstream>

#include <json.hpp>

namespace geogen {
namespace {

using nlohmann::json;

json anomaly_to_json(const AnomalyDescriptor& a) {
    json j;
    j["kind"] = anomaly_kind_name(a.kind);
    j["center"] = {a.cx, a.cy, a.cz};
    j["extent"] = {a.ex, a.ey, a.ez};
    j["orientation"] = a.orientation;
    j["resistivity"] = a.resistivity;
    j["irregular_seed"] = a.irregular_seed;
    return j;
}

AnomalyDescriptor anomaly_from_json(const json& j) {
    AnomalyDescriptor a;
    a.kind = anomaly_kind_from_name(j.at("kind").get<std::string>());
    const auto& c = j.at("center");
    a.cx = c.at(0);
    a.cy = c.at(1);
    a.cz = c.at(2);
    const auto& e = j.at("extent");
    a.ex = e.at(0);
    a.ey = e.at(1);
    a.ez = e.at(2);
    a.orientation = j.at("orientation");
    a.resistivity = j.at("resistivity");
    a.irregular_seed = j.at("irregular_seed");
    return a;
}

}  // namespace

std::string record_to_json(const ModelRecord& record) {
    json j;
    j["id"] = record.id;
    j["category"] = category_name(record.category);
    j["seed"] = record.seed;
    if (record.n_layers) j["n_layers"] = *record.n_layers;
    j["n_anomalies"] = record.n_anomalies;
    j["anomalies"] = json::array();
    for (const auto& a : record.anomalies) j["anomalies"].push_back(anomaly_to_json(a));
    j["anomalies_overlap"] = record.anomalies_overlap;
    j["transmitter_height_m"] = record.transmitter_height_m;
    j["generator_version"] = record.generator_version;
    j["grid_path"] = record.grid_path;
    j["fault_iterations"] = record.fault_iterations;
    j["fold_iterations"] = record.fold_iterations;
    j["fold_mode"] = record.fold_mode;
    return j.dump();  // nlohmann objects are key-sorted; dump is deterministic
}

ModelRecord record_from_json(const std::string& line) {
    json j;
    try {
        j = json::parse(line);
    } catch (const json::parse_error& e) {
        throw FormatError(std::string("record_from_json: ") + e.what());
    }
    try {
        ModelRecord r;
        r.id = j.at("id").get<std::string>();
        const std::string cat = j.at("category").get<std::string>();
        const auto category = category_from_name(cat);
        if (!category) throw FormatError("record_from_json: unknown category " + cat);
        r.category = *category;
        r.seed = j.at("seed").get<std::uint64_t>();
        if (j.contains("n_layers")) r.n_layers = j.at("n_layers").get<int>();
        r.n_anomalies = j.at("n_anomalies").get<int>();
        for (const auto& a : j.at("anomalies")) r.anomalies.push_back(anomaly_from_json(a));
        r.anomalies_overlap = j.value("anomalies_overlap", false);
        r.transmitter_height_m = j.at("transmitter_height_m").get<double>();
        r.generator_version = j.at("generator_version").get<std::string>();
        r.grid_path = j.at("grid_path").get<std::string>();
        r.fault_iterations = j.value("fault_iterations", 0);
        r.fold_iterations = j.value("fold_iterations", 0);
        r.fold_mode = j.value("fold_mode", std::string{});
        return r;
    } catch (const json::exception& e) {
        throw FormatError(std::string("record_from_json: ") + e.what());
    }
}

void write_metadata(const ModelRecord& record, const std::filesystem::path& path) {
    record.validate();
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("write_metadata: cannot open " + path.string());
    out << record_to_json(record) << '\n';
    if (!out) throw IoError("write_metadata: short write to " + path.string());
}

ModelRecord read_metadata(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("read_metadata: cannot open " + path.string());
    std::string line;
    std::getline(in, line);
    return record_from_json(line);
}

void write_manifest(const Manifest& manifest, const std::filesystem::path& jsonl_path) {
    std::ofstream out(jsonl_path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("write_manifest: cannot open " + jsonl_path.string());
    for (const auto& r : manifest.records) out << record_to_json(r) << '\n';
    if (!out) throw IoError("write_manifest: short write");
    out.close();

    json info;
    info["config_digest"] = manifest.config_digest;
    info["generator_version"] = manifest.generator_version;
    info["record_count"] = manifest.records.size();
    std::filesystem::path info_path = jsonl_path;
    info_path.replace_filename(jsonl_path.stem().string() + "_info.json");
    std::ofstream iout(info_path, std::ios::binary | std::ios::trunc);
    if (!iout) throw IoError("write_manifest: cannot open " + info_path.string());
    iout << info.dump() << '\n';
}

Manifest read_manifest(const std::filesystem::path& jsonl_path) {
    std::ifstream in(jsonl_path, std::ios::binary);
    if (!in) throw IoError("read_manifest: cannot open " + jsonl_path.string());
    Manifest m;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        m.records.push_back(record_from_json(line));
    }

    std::filesystem::path info_path = jsonl_path;
    info_path.replace_filename(jsonl_path.stem().string() + "_info.json");
    std::ifstream iin(info_path, std::ios::binary);
    if (iin) {
        try {
            const json info = json::parse(iin);
            m.config_digest = info.value("config_digest", std::string{});
            m.generator_version = info.value("generator_version", std::string{});
        } catch (const json::parse_error& e) {
            throw FormatError(std::string("read_manifest: bad info file: ") + e.what());
        }
    }
    return m;
}

std::string digest_text(const std::string& text) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

}  // namespace geogen
