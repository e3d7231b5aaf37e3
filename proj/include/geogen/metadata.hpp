#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "geogen/record.hpp"

namespace geogen {

// Dataset index: one record per generated model plus provenance.
struct Manifest {
    std::vector<ModelRecord> records;
    std::string config_digest;
    std::string generator_version;
};

// Canonical JSON for a record: sorted keys, shortest-round-trip floats, no
// whitespace. Byte-reproducible for identical records.
std::string record_to_json(const ModelRecord& record);
ModelRecord record_from_json(const std::string& line);

// Validates the record and writes its canonical JSON (newline-terminated).
void write_metadata(const ModelRecord& record, const std::filesystem::path& path);
ModelRecord read_metadata(const std::filesystem::path& path);

// Manifest is JSON-lines, one record per line, in generation order. The
// digest/version travel in a sibling <stem>_info.json.
void write_manifest(const Manifest& manifest, const std::filesystem::path& jsonl_path);
Manifest read_manifest(const std::filesystem::path& jsonl_path);

// FNV-1a hash of a canonical text, as fixed-width hex.
std::string digest_text(const std::string& text);

}  // namespace geogen
