#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "geogen/grid.hpp"
#include "geogen/record.hpp"

namespace geogen {

// Chi-square critical value at significance 0.01 for 4 degrees of freedom.
inline constexpr double kChiSquareCrit01Df4 = 13.28;

struct HistogramReport {
    std::string variable;
    std::vector<double> edges;       // length counts.size() + 1
    std::vector<std::int64_t> counts;
    std::int64_t total = 0;
    // chi-square against a uniform reference, when one is declared
    std::optional<double> chi_square;
    int dof = 0;
    std::optional<double> skewness;  // descriptive only

    std::string to_json() const;
    std::string to_text() const;
};

// Layer counts over records that carry n_layers; bins {3..7}, uniform ref.
HistogramReport layer_count_histogram(const std::vector<ModelRecord>& records);

// Anomaly counts over records of anomaly-bearing categories; bins {1..5},
// uniform ref.
HistogramReport anomaly_count_histogram(const std::vector<ModelRecord>& records);

// Streaming voxel-weighted log10-resistivity histogram over [0, log10 2000].
class ResistivityHistogram {
public:
    explicit ResistivityHistogram(int n_bins = 40);
    void add(const VoxelGrid& grid);
    HistogramReport report() const;

private:
    std::vector<std::int64_t> counts_;
    double sum_ = 0.0, sum2_ = 0.0, sum3_ = 0.0;
    std::int64_t n_ = 0;
};

// Streaming lag covariance of log10 resistivity along z, averaged over all
// columns of the added grids.
class VerticalCovarianceAccumulator {
public:
    explicit VerticalCovarianceAccumulator(int max_lag);
    void add(const VoxelGrid& grid);
    int models_seen() const { return models_; }
    // Covariance curve, lags 0..max_lag. Requires at least min_models grids.
    std::vector<double> covariance(int min_models = 1000) const;

private:
    int max_lag_;
    int models_ = 0;
    double sum_ = 0.0;
    std::int64_t count_ = 0;
    std::vector<double> lag_sums_;
    std::vector<std::int64_t> lag_counts_;
};

// Aggregate L1 relative error in percent: 100 * sum|pred - ref| / sum|ref|.
double relative_error(std::span<const float> pred, std::span<const float> ref);
double relative_error(std::span<const double> pred, std::span<const double> ref);

}  // namespace geogen
