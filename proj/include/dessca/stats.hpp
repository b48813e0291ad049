#pragma once

#include <functional>
#include <span>
#include <vector>

#include "dessca/reference_density.hpp"
#include "dessca/state_space.hpp"

namespace dessca {

// Summary row over normalized returns (one value per repetition).
struct RunSummary {
  double median = 0.0;
  double iqr = 0.0;
  double mean = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;
  size_t n = 0;
};

// Linear-interpolation quantile (the R-7 convention); p in [0,1].
double quantile(std::span<const double> values, double p);

// Median, IQR, mean and the 1.96*s/sqrt(n) normal-approximation confidence
// interval. Needs at least two values.
RunSummary summarize(std::span<const double> returns);

// CI-disjointness rule: candidate is better when its whole confidence
// interval lies above the baseline's.
bool significantly_better(const RunSummary& baseline, const RunSummary& candidate);

// (candidate - baseline) / |baseline| * 100, the percentage change of the
// median.
double relative_median_improvement(const RunSummary& baseline, const RunSummary& candidate);

// Two-sided Kolmogorov-Smirnov distance between the sample and a reference
// CDF.
double ks_statistic(std::span<const double> samples, const std::function<double(double)>& cdf);

// Uniformity diagnostics of a set of normalized states against a reference
// density: per-dimension KS statistics against the reference marginals, and
// for d <= 2 the RMS gap between the sample KDE and the reference density on
// a 101^d grid.
struct CoverageMetrics {
  std::vector<double> ks_per_dim;
  double ks_max = 0.0;
  double density_rmse = -1.0;  // set only for d <= 2
};

CoverageMetrics coverage_metrics(std::span<const Vec> states, const ReferenceDensity& reference,
                                 double bandwidth = 0.1);

}  // namespace dessca
