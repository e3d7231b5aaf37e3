#include "geogen/stats.hpp"

#include "geogen/layers.hpp"

#include <cmath>
#include <sstream>

#include <json.hpp>

namespace geogen {
namespace {

// integer-binned histogram with uniform chi-square
HistogramReport integer_histogram(const std::string& variable, int lo, int hi,
                                  const std::vector<int>& values) {
    if (values.empty()) throw ValidationError(variable + ": empty input");
    const int n_bins = hi - lo + 1;
    HistogramReport r;
    r.variable = variable;
    for (int b = 0; b <= n_bins; ++b) r.edges.push_back(lo + b - 0.5);
    r.counts.assign(n_bins, 0);
    for (int v : values) {
        if (v < lo || v > hi) throw ValidationError(variable + ": value outside declared bins");
        ++r.counts[v - lo];
    }
    r.total = static_cast<std::int64_t>(values.size());
    const double expected = static_cast<double>(r.total) / n_bins;
    double chi2 = 0.0;
    for (std::int64_t c : r.counts) {
        const double d = c - expected;
        chi2 += d * d / expected;
    }
    r.chi_square = chi2;
    r.dof = n_bins - 1;
    return r;
}

}  // namespace

std::string HistogramReport::to_json() const {
    nlohmann::json j;
    j["variable"] = variable;
    j["edges"] = edges;
    j["counts"] = counts;
    j["total"] = total;
    if (chi_square) {
        j["chi_square"] = *chi_square;
        j["dof"] = dof;
    }
    if (skewness) j["skewness"] = *skewness;
    return j.dump();
}

std::string HistogramReport::to_text() const {
    std::ostringstream os;
    os << variable << " histogram (total " << total << ")\n";
    for (std::size_t b = 0; b < counts.size(); ++b)
        os << "  [" << edges[b] << ", " << edges[b + 1] << ")  " << counts[b] << "\n";
    if (chi_square) os << "  chi_square = " << *chi_square << "  (dof " << dof << ")\n";
    if (skewness) os << "  skewness = " << *skewness << "\n";
    return os.str();
}

HistogramReport layer_count_histogram(const std::vector<ModelRecord>& records) {
    std::vector<int> values;
    for (const auto& r : records)
        if (r.n_layers) values.push_back(*r.n_layers);
    return integer_histogram("layer_count", kMinLayers, kMaxLayers, values);
}

HistogramReport anomaly_count_histogram(const std::vector<ModelRecord>& records) {
    std::vector<int> values;
    for (const auto& r : records)
        if (category_has_anomalies(r.category)) values.push_back(r.n_anomalies);
    return integer_histogram("anomaly_count", 1, kMaxAnomalies, values);
}

ResistivityHistogram::ResistivityHistogram(int n_bins) : counts_(n_bins, 0) {
    if (n_bins < 1) throw ValidationError("ResistivityHistogram: need at least one bin");
}

void ResistivityHistogram::add(const VoxelGrid& grid) {
    const double log_hi = std::log10(kMaxResistivity);
    const int n_bins = static_cast<int>(counts_.size());
    for (float v : grid.values()) {
        const double lg = std::log10(std::clamp(static_cast<double>(v), kMinResistivity,
                                                kMaxResistivity));
        int b = static_cast<int>(lg / log_hi * n_bins);
        b = std::clamp(b, 0, n_bins - 1);
        ++counts_[b];
        sum_ += lg;
        sum2_ += lg * lg;
        sum3_ += lg * lg * lg;
        ++n_;
    }
}

HistogramReport ResistivityHistogram::report() const {
    if (n_ == 0) throw ValidationError("ResistivityHistogram: no voxels accumulated");
    const double log_hi = std::log10(kMaxResistivity);
    HistogramReport r;
    r.variable = "log10_resistivity";
    const int n_bins = static_cast<int>(counts_.size());
    for (int b = 0; b <= n_bins; ++b) r.edges.push_back(log_hi * b / n_bins);
    r.counts = counts_;
    r.total = n_;
    const double mean = sum_ / n_;
    const double var = sum2_ / n_ - mean * mean;
    const double m3 = sum3_ / n_ - 3.0 * mean * sum2_ / n_ + 2.0 * mean * mean * mean;
    if (var > 0.0) r.skewness = m3 / std::pow(var, 1.5);
    return r;
}

VerticalCovarianceAccumulator::VerticalCovarianceAccumulator(int max_lag)
    : max_lag_(max_lag), lag_sums_(max_lag + 1, 0.0), lag_counts_(max_lag + 1, 0) {
    if (max_lag < 0) throw ValidationError("VerticalCovarianceAccumulator: negative lag");
}

void VerticalCovarianceAccumulator::add(const VoxelGrid& grid) {
    const GridSpec& spec = grid.spec();
    std::vector<double> column(spec.nz);
    for (int i = 0; i < spec.nx; ++i)
        for (int j = 0; j < spec.ny; ++j) {
            for (int k = 0; k < spec.nz; ++k) {
                column[k] = std::log10(static_cast<double>(grid.at(i, j, k)));
                sum_ += column[k];
                ++count_;
            }
            for (int h = 0; h <= max_lag_ && h < spec.nz; ++h)
                for (int k = 0; k + h < spec.nz; ++k) {
                    lag_sums_[h] += column[k] * column[k + h];
                    ++lag_counts_[h];
                }
        }
    ++models_;
}

std::vector<double> VerticalCovarianceAccumulator::covariance(int min_models) const {
    if (models_ < min_models)
        throw ValidationError("VerticalCovarianceAccumulator: insufficient sample");
    const double mean = sum_ / count_;
    std::vector<double> cov(max_lag_ + 1, 0.0);
    for (int h = 0; h <= max_lag_; ++h) {
        if (lag_counts_[h] == 0) continue;
        cov[h] = lag_sums_[h] / lag_counts_[h] - mean * mean;
    }
    return cov;
}

namespace {

template <typename T>
double relative_error_impl(std::span<const T> pred, std::span<const T> ref) {
    if (pred.size() != ref.size()) throw ValidationError("relative_error: shape mismatch");
    if (pred.empty()) throw ValidationError("relative_error: empty tensors");
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < pred.size(); ++i) {
        num += std::abs(static_cast<double>(pred[i]) - static_cast<double>(ref[i]));
        den += std::abs(static_cast<double>(ref[i]));
    }
    if (den == 0.0) throw ValidationError("relative_error: all-zero reference");
    return 100.0 * num / den;
}

}  // namespace

double relative_error(std::span<const float> pred, std::span<const float> ref) {
    return relative_error_impl(pred, ref);
}

double relative_error(std::span<const double> pred, std::span<const double> ref) {
    return relative_error_impl(pred, ref);
}

}  // namespace geogen
