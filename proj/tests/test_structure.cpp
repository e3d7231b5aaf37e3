#include <doctest.h>

#include <cmath>
#include <set>

#include "geogen/layers.hpp"
#include "geogen/structure.hpp"

using namespace geogen;

namespace {

constexpr double kTwoPi = 2.0 * 3.14159265358979323846;

VoxelGrid random_grid(const GridSpec& spec, RandomStream& rng) {
    VoxelGrid g(spec, 1.0f);
    for (float& v : g.raw()) v = static_cast<float>(rng.uniform(1.0, 2000.0));
    return g;
}

// hand-rolled layered fill so structure tests do not depend on the layer
// module (and can use fewer than three layers)
VoxelGrid layered_test_grid(const GridSpec& spec, std::vector<double> interfaces,
                            std::vector<double> res) {
    VoxelGrid g(spec, 1.0f);
    for (int k = 0; k < spec.nz; ++k) {
        const double z = (k + 0.5) * spec.cell_size;
        std::size_t layer = 0;
        while (layer < interfaces.size() && z >= interfaces[layer]) ++layer;
        for (int i = 0; i < spec.nx; ++i)
            for (int j = 0; j < spec.ny; ++j) g.at(i, j, k) = static_cast<float>(res[layer]);
    }
    return g;
}

}  // namespace

TEST_CASE("eval_fault_surface") {
    FaultSurfaceParams p;
    p.e = 150.0;
    CHECK(eval_fault_surface(p, 0.0, 0.0) == 150.0);
    CHECK(eval_fault_surface(p, 300.0, -40.0) == 150.0);

    p = FaultSurfaceParams{};
    p.c = 0.1;
    p.e = 100.0;
    CHECK(eval_fault_surface(p, 200.0, 77.0) == doctest::Approx(120.0));

    p = FaultSurfaceParams{};
    p.A1 = 40.0;
    p.omega1 = kTwoPi / 640.0;
    p.e = 160.0;
    // cos term contributes A2 * cos(...) = 0 only when A2 = 0
    CHECK(eval_fault_surface(p, 160.0, 123.0) == doctest::Approx(200.0));
}

TEST_CASE("apply_fault branch selection") {
    GridSpec spec;
    RandomStream rng(31);
    const VoxelGrid r0 = layered_test_grid(spec, {100.0, 200.0}, {100.0, 10.0, 1000.0});
    const VoxelGrid r_prev = random_grid(spec, rng);

    FaultSurfaceParams surf;
    surf.e = 150.0;
    // test-only bypass of the nonzero-throw rule: identity warp
    FaultWarpParams warp;
    warp.s_prime = 0.0;
    warp.a = 0.0;
    warp.s = 0.0;

    const VoxelGrid out = apply_fault(r0, r_prev, surf, warp);
    for (int i = 0; i < spec.nx; i += 7)
        for (int j = 0; j < spec.ny; j += 7)
            for (int k = 0; k < spec.nz; ++k) {
                const double z = (k + 0.5) * spec.cell_size;
                if (z < 150.0) {
                    CHECK(out.at(i, j, k) == r_prev.at(i, j, k));
                } else {
                    // warped lateral coords are (0, 0); laterally constant r0
                    CHECK(out.at(i, j, k) == r0.at(0, 0, k));
                }
            }
}

TEST_CASE("fault surface above the whole domain is the identity") {
    GridSpec spec;
    RandomStream rng(37);
    const VoxelGrid r0 = random_grid(spec, rng);
    const VoxelGrid r_prev = random_grid(spec, rng);
    FaultSurfaceParams surf;
    surf.e = 500.0;  // below the 320 m domain: z >= f never holds
    FaultWarpParams warp;
    warp.s_prime = 50.0;
    const VoxelGrid out = apply_fault(r0, r_prev, surf, warp);
    for (std::size_t n = 0; n < out.size(); ++n) CHECK(out.values()[n] == r_prev.values()[n]);
}

TEST_CASE("vertical throw shifts the interface pattern") {
    GridSpec spec;
    const VoxelGrid r0 = layered_test_grid(spec, {100.0}, {100.0, 1000.0});
    FaultSurfaceParams surf;
    surf.e = 150.0;
    FaultWarpParams warp;
    warp.s_prime = 50.0;  // sample 50 m deeper in r0
    const VoxelGrid out = apply_fault(r0, r0, surf, warp);
    for (int i = 0; i < spec.nx; i += 9)
        for (int j = 0; j < spec.ny; j += 9)
            for (int k = 0; k < spec.nz; ++k) {
                const double z = (k + 0.5) * spec.cell_size;
                if (z < 150.0) continue;
                // r0 at depth z + 50: interface at 100 m appears at 50 m
                const float expected = (z + 50.0 < 100.0) ? 100.0f : 1000.0f;
                CHECK(out.at(i, j, k) == expected);
            }
}

TEST_CASE("apply_fault validates matching specs") {
    GridSpec a, b;
    b.nx = 32;
    const VoxelGrid ga(a, 100.0f);
    const VoxelGrid gb(b, 100.0f);
    CHECK_THROWS_AS(apply_fault(ga, gb, FaultSurfaceParams{}, FaultWarpParams{}), ValidationError);
}

TEST_CASE("fold with zero amplitude is the identity in both modes") {
    GridSpec spec;
    RandomStream rng(41);
    const VoxelGrid g = random_grid(spec, rng);
    for (FoldMode mode : {FoldMode::Geological, FoldMode::LiteralEq4}) {
        FoldParams p;
        p.a = 0.0;
        p.kx = 1.0 / 640.0;
        p.mode = mode;
        const VoxelGrid out = apply_fold(g, p);
        for (std::size_t n = 0; n < g.size(); ++n) CHECK(out.values()[n] == g.values()[n]);
    }
}

TEST_CASE("geological fold displaces the interface sinusoidally") {
    GridSpec spec;
    const VoxelGrid g = layered_test_grid(spec, {100.0}, {100.0, 1000.0});
    FoldParams p;
    p.a = 30.0;
    p.kx = 1.0 / 640.0;
    p.ky = 0.0;  // y term vanishes with phiy = 0
    const VoxelGrid out = apply_fold(g, p);
    for (int i = 0; i < spec.nx; ++i) {
        const double x = (i + 0.5) * spec.cell_size;
        const double expected_depth = 100.0 - 30.0 * std::sin(kTwoPi * x / 640.0);
        // find the shallowest deep-layer voxel in this column
        int first_deep = spec.nz;
        for (int k = 0; k < spec.nz; ++k)
            if (out.at(i, 0, k) == 1000.0f) {
                first_deep = k;
                break;
            }
        const double found_depth = first_deep * spec.cell_size;
        CHECK(std::abs(found_depth - expected_depth) <= spec.cell_size);
    }
}

TEST_CASE("literal fold mode collapses each x column to one value") {
    GridSpec spec;
    RandomStream rng(43);
    const VoxelGrid g = random_grid(spec, rng);
    FoldParams p;
    p.a = 25.0;
    p.kx = 2.0 / 640.0;
    p.mode = FoldMode::LiteralEq4;
    const VoxelGrid out = apply_fold(g, p);
    for (int i = 0; i < spec.nx; ++i) {
        const float v = out.at(i, 0, 0);
        for (int j = 0; j < spec.ny; j += 5)
            for (int k = 0; k < spec.nz; ++k) CHECK(out.at(i, j, k) == v);
    }
}

TEST_CASE("transforms never create new values") {
    GridSpec spec;
    RandomStream rng(47);
    const VoxelGrid g = layered_test_grid(spec, {80.0, 180.0, 250.0}, {30.0, 300.0, 5.0, 900.0});
    std::set<float> input_values(g.values().begin(), g.values().end());

    const auto [surf, warp] = sample_fault_params(FaultKind::Curved, spec, rng);
    const VoxelGrid faulted = apply_fault(g, g, surf, warp);
    for (float v : faulted.values()) CHECK(input_values.count(v) == 1);

    const FoldParams fold = sample_fold_params(FoldMode::Geological, spec, rng);
    const VoxelGrid folded = apply_fold(faulted, fold);
    for (float v : folded.values()) CHECK(input_values.count(v) == 1);
}

TEST_CASE("sample_fault_params contracts") {
    GridSpec spec;
    RandomStream rng(53);
    for (int t = 0; t < 25; ++t) {
        const auto [flat_surf, flat_warp] = sample_fault_params(FaultKind::Flat, spec, rng);
        CHECK(flat_surf.A1 == 0.0);
        CHECK(flat_surf.A2 == 0.0);
        CHECK(std::abs(flat_warp.s_prime) >= 20.0);
        CHECK(std::abs(flat_warp.s_prime) <= 80.0);

        const auto [curv_surf, curv_warp] = sample_fault_params(FaultKind::Curved, spec, rng);
        CHECK(curv_surf.A1 >= 10.0);
        CHECK(curv_surf.A1 <= 40.0);
        CHECK(curv_surf.A2 >= 10.0);
        CHECK(curv_surf.A2 <= 40.0);

        // surface cuts the domain interior: brute-force scan over centers
        for (const auto& surf : {flat_surf, curv_surf}) {
            double fmin = 1e300, fmax = -1e300;
            for (int i = 0; i < spec.nx; ++i)
                for (int j = 0; j < spec.ny; ++j) {
                    const double f = eval_fault_surface(surf, (i + 0.5) * spec.cell_size,
                                                        (j + 0.5) * spec.cell_size);
                    fmin = std::min(fmin, f);
                    fmax = std::max(fmax, f);
                }
            CHECK(fmin < spec.total_depth());
            CHECK(fmax > 0.0);
        }
    }
}
