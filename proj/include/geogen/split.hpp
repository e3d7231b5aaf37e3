#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "geogen/metadata.hpp"

namespace geogen {

// Disjoint, covering partition of manifest ids.
struct SplitAssignment {
    std::vector<std::string> train;
    std::vector<std::string> validation;
    std::vector<std::string> test;
};

// Deterministic stratified split: each category is shuffled by a seed-derived
// stream and cut in the given proportions with largest-remainder rounding
// (ties resolved train > validation > test).
SplitAssignment split_manifest(const Manifest& manifest, std::array<int, 3> ratio,
                               std::uint64_t seed);

void write_split(const SplitAssignment& split, const std::filesystem::path& path);

}  // namespace geogen
