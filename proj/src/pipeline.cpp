#include "geogen/pipeline.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <mutex>
#include <thread>

#include "geogen/layers.hpp"
#include "geogen/npy.hpp"
#include "geogen/rng.hpp"
#include "geogen/structure.hpp"

namespace geogen {
namespace {

constexpr int kModelAttempts = 10;

GeneratedModel build_model(ModelCategory category, std::uint64_t index, std::uint64_t seed,
                           RandomStream& rng, const GenerationConfig& cfg) {
    const GridSpec& spec = cfg.grid;
    ModelRecord record;
    char idbuf[24];
    std::snprintf(idbuf, sizeof(idbuf), "m%08llu", static_cast<unsigned long long>(index));
    record.id = idbuf;
    record.category = category;
    record.seed = seed;
    record.generator_version = kGeneratorVersion;
    record.grid_path = record.id + ".npy";
    record.fold_mode = cfg.fold_mode == FoldMode::Geological ? "geological" : "literal";

    VoxelGrid grid(spec, static_cast<float>(kMinResistivity));
    if (category == ModelCategory::HalfspaceAnomaly) {
        const double background = 100.0 * rng.uniform_int(1, 10);
        grid = build_halfspace_grid(background, spec);
    } else {
        const int n_layers = rng.uniform_int(kMinLayers, kMaxLayers);
        record.n_layers = n_layers;
        const std::vector<double> interfaces = sample_layer_interfaces(
            n_layers, spec.total_depth(), cfg.min_layer_thickness, rng);

        VonKarmanParams vk;
        vk.A = cfg.vk_A;
        vk.C = cfg.vk_C;
        vk.nu = rng.uniform(cfg.vk_nu_min, cfg.vk_nu_max);
        vk.L = rng.uniform(cfg.vk_L_min, cfg.vk_L_max);

        // correlated field evaluated at layer mid-depths
        std::vector<double> mids(n_layers);
        double top = 0.0;
        for (int l = 0; l < n_layers; ++l) {
            const double bottom =
                (l < n_layers - 1) ? interfaces[l] : spec.total_depth();
            mids[l] = 0.5 * (top + bottom);
            top = bottom;
        }
        const std::vector<double> logres =
            sample_correlated_log_res(mids, vk, rng, cfg.layer_contrast_floor);

        LayerStack stack;
        stack.n_layers = n_layers;
        stack.interface_depths = interfaces;
        for (double lr : logres)
            stack.resistivities.push_back(clamp_resistivity(std::pow(10.0, lr)));
        grid = build_layered_grid(stack, spec);

        if (category_has_faults(category)) {
            const int n_faults = rng.uniform_int(cfg.fault_iters_min, cfg.fault_iters_max);
            record.fault_iterations = n_faults;
            const VoxelGrid initial = grid;
            for (int f = 0; f < n_faults; ++f) {
                const FaultKind kind = rng.coin() ? FaultKind::Curved : FaultKind::Flat;
                const auto [surf, warp] =
                    sample_fault_params(kind, spec, rng, cfg.fault_ranges);
                const VoxelGrid& source =
                    cfg.hanging_wall == HangingWallSource::Initial ? initial : grid;
                grid = apply_fault(source, grid, surf, warp);
            }
        }
        if (category_has_folds(category)) {
            const int n_folds = rng.uniform_int(cfg.fold_iters_min, cfg.fold_iters_max);
            record.fold_iterations = n_folds;
            for (int f = 0; f < n_folds; ++f)
                grid = apply_fold(grid, sample_fold_params(cfg.fold_mode, spec, rng,
                                                           cfg.fold_ranges));
        }
    }

    if (category_has_anomalies(category)) {
        const int n = rng.uniform_int(1, kMaxAnomalies);
        record.anomalies = sample_anomaly_set(n, spec, rng, &grid, cfg.anomaly_contrast_floor,
                                              cfg.anomaly_extent_min, cfg.anomaly_extent_max);
        record.n_anomalies = n;
        grid = stamp_anomalies(grid, record.anomalies, &record.anomalies_overlap);
    }

    record.transmitter_height_m = rng.uniform(kTransmitterHeightMin, kTransmitterHeightMax);
    record.validate();
    grid.validate_values();
    return {std::move(grid), std::move(record)};
}

}  // namespace

std::uint64_t derive_model_seed(std::uint64_t global_seed, std::uint64_t index) {
    return derive_seed(global_seed, index);
}

GeneratedModel generate_model(ModelCategory category, std::uint64_t index,
                              const GenerationConfig& cfg) {
    cfg.validate();
    const std::uint64_t seed = derive_model_seed(cfg.global_seed, index);
    std::string last_error;
    for (int attempt = 0; attempt < kModelAttempts; ++attempt) {
        RandomStream rng(attempt == 0 ? seed : derive_seed(seed, attempt));
        try {
            return build_model(category, index, seed, rng, cfg);
        } catch (const SamplingError& e) {
            last_error = e.what();
        }
    }
    throw SamplingError("generate_model: model " + std::to_string(index) + " (" +
                        category_name(category) + ") failed after " +
                        std::to_string(kModelAttempts) + " attempts; last: " + last_error);
}

Manifest generate_batch(const GenerationConfig& cfg, const std::filesystem::path& output_dir,
                        int workers) {
    cfg.validate();
    if (workers < 1) throw ValidationError("generate_batch: workers must be >= 1");

    std::error_code ec;
    std::filesystem::create_directories(output_dir, ec);
    if (ec) throw IoError("generate_batch: cannot create " + output_dir.string());
    const std::filesystem::path marker = output_dir / kPartialMarker;
    {
        std::ofstream m(marker);
        if (!m) throw IoError("generate_batch: cannot write marker in " + output_dir.string());
    }

    // deterministic task list: categories in enum order, global index running
    struct Task {
        ModelCategory category;
        std::uint64_t index;
    };
    std::vector<Task> tasks;
    std::uint64_t next_index = 0;
    for (int ci = 0; ci < kCategoryCount; ++ci)
        for (std::int64_t n = 0; n < cfg.counts[ci]; ++n)
            tasks.push_back({kAllCategories[ci], next_index++});

    std::vector<ModelRecord> records(tasks.size());
    std::atomic<std::size_t> cursor{0};
    std::atomic<bool> failed{false};
    std::exception_ptr first_error;
    std::mutex error_mutex;

    const auto worker = [&] {
        for (;;) {
            const std::size_t t = cursor.fetch_add(1);
            if (t >= tasks.size() || failed.load()) return;
            try {
                GeneratedModel model = generate_model(tasks[t].category, tasks[t].index, cfg);
                write_npy(model.grid, output_dir / model.record.grid_path);
                write_metadata(model.record, output_dir / (model.record.id + ".json"));
                records[t] = std::move(model.record);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                failed.store(true);
                return;
            }
        }
    };

    if (workers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (failed.load()) std::rethrow_exception(first_error);

    Manifest manifest;
    manifest.records = std::move(records);
    manifest.config_digest = cfg.digest();
    manifest.generator_version = kGeneratorVersion;
    write_manifest(manifest, output_dir / "manifest.jsonl");

    std::filesystem::remove(marker, ec);
    if (ec) throw IoError("generate_batch: cannot remove marker");
    return manifest;
}

}  // namespace geogen
