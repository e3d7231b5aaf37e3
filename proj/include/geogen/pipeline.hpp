#pragma once

#include <filesystem>

#include "geogen/config.hpp"
#include "geogen/metadata.hpp"

namespace geogen {

// Name of the marker file present while a batch directory is incomplete.
inline constexpr const char* kPartialMarker = ".partial";

// SplitMix64 of global_seed XOR (index * odd constant); see rng.hpp.
std::uint64_t derive_model_seed(std::uint64_t global_seed, std::uint64_t index);

struct GeneratedModel {
    VoxelGrid grid;
    ModelRecord record;
};

// Builds one model deterministically from (category, index, cfg). Sampling
// failures retry with sub-seeds derived from (model seed, attempt), at most
// 10 attempts.
GeneratedModel generate_model(ModelCategory category, std::uint64_t index,
                              const GenerationConfig& cfg);

// Generates cfg's full category mix into output_dir: one NPY and one JSON
// per model, manifest written last. Output bytes are independent of the
// worker count. A partial-output marker file is present until the batch
// completes.
Manifest generate_batch(const GenerationConfig& cfg, const std::filesystem::path& output_dir,
                        int workers);

}  // namespace geogen
