#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "geogen/config.hpp"
#include "geogen/errors.hpp"
#include "geogen/npy.hpp"
#include "geogen/pipeline.hpp"
#include "geogen/slice.hpp"
#include "geogen/split.hpp"
#include "geogen/stats.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitSampling = 2;
constexpr int kExitIo = 3;

int default_workers() {
    if (const char* env = std::getenv("GEOGEN_WORKERS")) {
        const int w = std::atoi(env);
        if (w >= 1) return w;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

int run_gen(const std::string& config_path, const std::string& category,
            std::int64_t count, std::uint64_t seed, const std::string& out_dir, int workers) {
    geogen::GenerationConfig cfg;
    if (!config_path.empty()) {
        cfg = geogen::GenerationConfig::from_file(config_path);
    } else {
        const auto cat = geogen::category_from_name(category);
        if (!cat) {
            std::cerr << "error: unknown category '" << category << "'; valid names: "
                      << geogen::category_name_list() << "\n";
            return kExitValidation;
        }
        cfg.counts[static_cast<int>(*cat)] = count;
        cfg.global_seed = seed;
    }

    std::cerr << "generating " << cfg.total_count() << " models into " << out_dir << " with "
              << workers << " workers\n";
    const geogen::Manifest manifest = geogen::generate_batch(cfg, out_dir, workers);

    std::cout << (std::filesystem::path(out_dir) / "manifest.jsonl").string() << "\n";
    std::int64_t per_cat[geogen::kCategoryCount] = {};
    for (const auto& r : manifest.records) ++per_cat[static_cast<int>(r.category)];
    for (int ci = 0; ci < geogen::kCategoryCount; ++ci)
        if (per_cat[ci] > 0)
            std::cout << geogen::category_name(geogen::kAllCategories[ci]) << " " << per_cat[ci]
                      << "\n";
    return kExitOk;
}

int run_stats(const std::string& manifest_path, bool with_grids) {
    const geogen::Manifest manifest = geogen::read_manifest(manifest_path);
    if (manifest.records.empty()) {
        std::cerr << "error: manifest is empty\n";
        return kExitValidation;
    }

    bool any_layers = false, any_anoms = false;
    for (const auto& r : manifest.records) {
        any_layers = any_layers || r.n_layers.has_value();
        any_anoms = any_anoms || geogen::category_has_anomalies(r.category);
    }
    if (any_layers) {
        const auto rep = geogen::layer_count_histogram(manifest.records);
        std::cout << rep.to_text() << rep.to_json() << "\n";
    }
    if (any_anoms) {
        const auto rep = geogen::anomaly_count_histogram(manifest.records);
        std::cout << rep.to_text() << rep.to_json() << "\n";
    }

    if (with_grids) {
        const std::filesystem::path base = std::filesystem::path(manifest_path).parent_path();
        geogen::ResistivityHistogram hist;
        for (const auto& r : manifest.records)
            hist.add(geogen::read_npy(base / r.grid_path));
        const auto rep = hist.report();
        std::cout << rep.to_text() << rep.to_json() << "\n";
    }
    return kExitOk;
}

int run_split(const std::string& manifest_path, const std::string& ratio_str,
              std::uint64_t seed, const std::string& out_path) {
    std::array<int, 3> ratio{};
    {
        int a = 0, b = 0, c = 0;
        char tail = 0;
        if (std::sscanf(ratio_str.c_str(), "%d:%d:%d%c", &a, &b, &c, &tail) != 3 || a <= 0 ||
            b <= 0 || c <= 0) {
            std::cerr << "error: ratio must be three positive integers like 8:1:1\n";
            return kExitValidation;
        }
        ratio = {a, b, c};
    }
    const geogen::Manifest manifest = geogen::read_manifest(manifest_path);
    const geogen::SplitAssignment split = geogen::split_manifest(manifest, ratio, seed);
    geogen::write_split(split, out_path);
    std::cout << out_path << "\n"
              << "train " << split.train.size() << "\nvalidation " << split.validation.size()
              << "\ntest " << split.test.size() << "\n";
    return kExitOk;
}

int run_slice(const std::string& grid_path, const std::string& axis_str, int index,
              const std::string& out_path) {
    geogen::SliceAxis axis;
    if (axis_str == "x")
        axis = geogen::SliceAxis::X;
    else if (axis_str == "y")
        axis = geogen::SliceAxis::Y;
    else if (axis_str == "z")
        axis = geogen::SliceAxis::Z;
    else {
        std::cerr << "error: axis must be x, y, or z\n";
        return kExitValidation;
    }
    const geogen::VoxelGrid grid = geogen::read_npy(grid_path);
    try {
        geogen::export_slice(grid, axis, index, out_path);
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
    std::cout << out_path << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Deterministic 3D resistivity voxel model generator"};
    app.require_subcommand(1);

    std::string config_path, category, out_dir;
    std::int64_t count = 1;
    std::uint64_t seed = 0;
    int workers = default_workers();
    auto* gen = app.add_subcommand(
        "gen", "Generate a batch of models (categories: " + geogen::category_name_list() + ")");
    auto* cfg_opt = gen->add_option("--config", config_path, "Config file (key = value lines)");
    auto* cat_opt = gen->add_option("--category", category,
                                    "Model category: " + geogen::category_name_list());
    auto* count_opt = gen->add_option("--count", count, "Number of models");
    auto* seed_opt = gen->add_option("--seed", seed, "Global seed");
    gen->add_option("--out", out_dir, "Output directory")->required();
    gen->add_option("--workers", workers, "Worker threads (default: GEOGEN_WORKERS or cores)");
    cfg_opt->excludes(cat_opt)->excludes(count_opt)->excludes(seed_opt);

    std::string manifest_path;
    bool with_grids = false;
    auto* stats = app.add_subcommand("stats", "Histograms and uniformity checks for a dataset");
    stats->add_option("--manifest", manifest_path, "Path to manifest.jsonl")->required();
    stats->add_flag("--grids", with_grids, "Also scan NPY grids for the resistivity histogram");

    std::string split_manifest_path, ratio_str = "8:1:1", split_out = "split.json";
    std::uint64_t split_seed = 0;
    auto* split = app.add_subcommand("split", "Stratified train/validation/test split");
    split->add_option("--manifest", split_manifest_path, "Path to manifest.jsonl")->required();
    split->add_option("--ratio", ratio_str, "Split ratio, e.g. 8:1:1");
    split->add_option("--seed", split_seed, "Shuffle seed");
    split->add_option("--out", split_out, "Output JSON path");

    std::string grid_path, axis_str = "z", slice_out;
    int slice_index = 0;
    auto* slice = app.add_subcommand("slice", "Export a grid slice as a PGM image");
    slice->add_option("--grid", grid_path, "Path to an NPY grid")->required();
    slice->add_option("--axis", axis_str, "Slice axis: x, y, or z");
    slice->add_option("--index", slice_index, "Slice index");
    slice->add_option("--out", slice_out, "Output PGM path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitValidation;
    }

    try {
        if (gen->parsed()) {
            if (config_path.empty() && category.empty()) {
                std::cerr << "error: provide --config or --category\n";
                return kExitValidation;
            }
            return run_gen(config_path, category, count, seed, out_dir, workers);
        }
        if (stats->parsed()) return run_stats(manifest_path, with_grids);
        if (split->parsed()) return run_split(split_manifest_path, ratio_str, split_seed, split_out);
        if (slice->parsed()) return run_slice(grid_path, axis_str, slice_index, slice_out);
    } catch (const geogen::SamplingError& e) {
        std::cerr << "sampling error: " << e.what() << "\n";
        return kExitSampling;
    } catch (const geogen::IoError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return kExitIo;
    } catch (const geogen::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::filesystem::filesystem_error& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
    return kExitValidation;
}
