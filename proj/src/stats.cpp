#include "dessca/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "dessca/kde.hpp"

namespace dessca {

double quantile(std::span<const double> values, double p) {
  if (values.empty()) throw std::invalid_argument("quantile: empty sample");
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("quantile: p outside [0,1]");
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  const double h = p * (sorted.size() - 1);
  const size_t lo = static_cast<size_t>(h);
  const double frac = h - lo;
  if (lo + 1 >= sorted.size()) return sorted.back();
  return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

RunSummary summarize(std::span<const double> returns) {
  if (returns.size() < 2) throw std::invalid_argument("summarize: need at least 2 values");
  RunSummary s;
  s.n = returns.size();
  s.median = quantile(returns, 0.5);
  s.iqr = quantile(returns, 0.75) - quantile(returns, 0.25);

  double sum = 0.0;
  for (double v : returns) sum += v;
  s.mean = sum / s.n;

  double ss = 0.0;
  for (double v : returns) ss += (v - s.mean) * (v - s.mean);
  const double stddev = std::sqrt(ss / (s.n - 1));
  const double half_width = 1.96 * stddev / std::sqrt(static_cast<double>(s.n));
  s.ci_low = s.mean - half_width;
  s.ci_high = s.mean + half_width;
  return s;
}

bool significantly_better(const RunSummary& baseline, const RunSummary& candidate) {
  return candidate.ci_low > baseline.ci_high;
}

double relative_median_improvement(const RunSummary& baseline, const RunSummary& candidate) {
  if (baseline.median == 0.0) {
    throw std::invalid_argument("relative_median_improvement: baseline median is zero");
  }
  return (candidate.median - baseline.median) / std::abs(baseline.median) * 100.0;
}

double ks_statistic(std::span<const double> samples, const std::function<double(double)>& cdf) {
  if (samples.empty()) throw std::invalid_argument("ks_statistic: empty sample");
  std::vector<double> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());
  const double n = static_cast<double>(sorted.size());
  double d = 0.0;
  for (size_t i = 0; i < sorted.size(); ++i) {
    const double f = cdf(sorted[i]);
    d = std::max(d, f - i / n);
    d = std::max(d, (i + 1) / n - f);
  }
  return d;
}

CoverageMetrics coverage_metrics(std::span<const Vec> states, const ReferenceDensity& reference,
                                 double bandwidth) {
  if (states.size() < 10) throw std::invalid_argument("coverage_metrics: need at least 10 states");
  const int d = reference.dim();
  CoverageMetrics m;
  m.ks_per_dim.resize(d);

  std::vector<double> component(states.size());
  for (int i = 0; i < d; ++i) {
    for (size_t s = 0; s < states.size(); ++s) component[s] = states[s][i];
    m.ks_per_dim[i] =
        ks_statistic(component, [&](double x) { return reference.marginal_cdf(i, x); });
    m.ks_max = std::max(m.ks_max, m.ks_per_dim[i]);
  }

  if (d <= 2) {
    CoverageEstimator kde(d, bandwidth);
    kde.observe(states);
    const int res = 101;
    double ss = 0.0;
    size_t count = 0;
    Vec x(d);
    if (d == 1) {
      for (int i = 0; i < res; ++i) {
        x[0] = -1.0 + 2.0 * i / (res - 1);
        const double diff = kde.density(x) - reference.evaluate(x);
        ss += diff * diff;
        ++count;
      }
    } else {
      for (int i = 0; i < res; ++i) {
        x[0] = -1.0 + 2.0 * i / (res - 1);
        for (int j = 0; j < res; ++j) {
          x[1] = -1.0 + 2.0 * j / (res - 1);
          const double diff = kde.density(x) - reference.evaluate(x);
          ss += diff * diff;
          ++count;
        }
      }
    }
    m.density_rmse = std::sqrt(ss / count);
  }
  return m;
}

}  // namespace dessca
