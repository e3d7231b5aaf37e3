#include "geogen/split.hpp"

#include <algorithm>
#include <fstream>
#include <map>

#include <json.hpp>

#include "geogen/rng.hpp"

namespace geogen {
namespace {

// largest-remainder apportionment of n into three parts
std::array<std::size_t, 3> apportion(std::size_t n, std::array<int, 3> ratio) {
    const double total = ratio[0] + ratio[1] + ratio[2];
    std::array<std::size_t, 3> counts{};
    std::array<double, 3> frac{};
    std::size_t assigned = 0;
    for (int p = 0; p < 3; ++p) {
        const double quota = n * ratio[p] / total;
        counts[p] = static_cast<std::size_t>(quota);
        frac[p] = quota - counts[p];
        assigned += counts[p];
    }
    std::array<int, 3> order = {0, 1, 2};
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return frac[a] > frac[b]; });
    for (std::size_t r = 0; r < n - assigned; ++r) ++counts[order[r % 3]];
    return counts;
}

}  // namespace

SplitAssignment split_manifest(const Manifest& manifest, std::array<int, 3> ratio,
                               std::uint64_t seed) {
    if (manifest.records.empty()) throw ValidationError("split_manifest: empty manifest");
    if (ratio[0] <= 0 || ratio[1] <= 0 || ratio[2] <= 0)
        throw ValidationError("split_manifest: ratio terms must be positive");

    // group ids per category in manifest order
    std::map<int, std::vector<std::string>> by_category;
    for (const auto& r : manifest.records)
        by_category[static_cast<int>(r.category)].push_back(r.id);

    SplitAssignment out;
    for (auto& [cat, ids] : by_category) {
        RandomStream rng(derive_seed(seed, static_cast<std::uint64_t>(cat)));
        for (std::size_t i = ids.size(); i > 1; --i)
            std::swap(ids[i - 1], ids[rng.uniform_below(i)]);

        const auto counts = apportion(ids.size(), ratio);
        std::size_t pos = 0;
        for (std::size_t i = 0; i < counts[0]; ++i) out.train.push_back(ids[pos++]);
        for (std::size_t i = 0; i < counts[1]; ++i) out.validation.push_back(ids[pos++]);
        for (std::size_t i = 0; i < counts[2]; ++i) out.test.push_back(ids[pos++]);
    }
    return out;
}

void write_split(const SplitAssignment& split, const std::filesystem::path& path) {
    nlohmann::json j;
    j["train"] = split.train;
    j["validation"] = split.validation;
    j["test"] = split.test;
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("write_split: cannot open " + path.string());
    out << j.dump() << '\n';
    if (!out) throw IoError("write_split: short write");
}

}  // namespace geogen
