#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "dessca/reference_density.hpp"
#include "dessca/stats.hpp"
#include "oracles.hpp"

using dessca::CoverageMetrics;
using dessca::RunSummary;
using dessca::Vec;

TEST_CASE("linear-interpolation quantiles") {
  const std::vector<double> v{5.0, 1.0, 3.0, 2.0, 4.0};  // order must not matter
  CHECK(dessca::quantile(v, 0.5) == 3.0);
  CHECK(dessca::quantile(v, 0.25) == 2.0);
  CHECK(dessca::quantile(v, 0.75) == 4.0);
  CHECK(dessca::quantile(v, 0.0) == 1.0);
  CHECK(dessca::quantile(v, 1.0) == 5.0);

  const std::vector<double> even{1.0, 2.0, 3.0, 4.0};
  CHECK(dessca::quantile(even, 0.5) == doctest::Approx(2.5).epsilon(1e-12));
  CHECK(dessca::quantile(even, 0.25) == doctest::Approx(1.75).epsilon(1e-12));
  CHECK(dessca::quantile(even, 0.75) == doctest::Approx(3.25).epsilon(1e-12));

  const std::vector<double> one{5.0};
  CHECK(dessca::quantile(one, 0.3) == 5.0);
  CHECK_THROWS_AS(dessca::quantile(std::vector<double>{}, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(dessca::quantile(v, 1.5), std::invalid_argument);
}

TEST_CASE("summary of a small sample") {
  const std::vector<double> v{1.0, 2.0, 3.0, 4.0, 5.0};
  const RunSummary s = dessca::summarize(v);
  CHECK(s.n == 5);
  CHECK(s.median == 3.0);
  CHECK(s.iqr == 2.0);
  CHECK(s.mean == 3.0);
  // 1.96 * sqrt(2.5)/sqrt(5) = 1.96 * sqrt(0.5)
  const double half = 1.96 * std::sqrt(0.5);
  CHECK(s.ci_low == doctest::Approx(3.0 - half).epsilon(1e-12));
  CHECK(s.ci_high == doctest::Approx(3.0 + half).epsilon(1e-12));
}

TEST_CASE("summary of a constant sample collapses") {
  const std::vector<double> v{0.0, 0.0, 0.0, 0.0};
  const RunSummary s = dessca::summarize(v);
  CHECK(s.median == 0.0);
  CHECK(s.iqr == 0.0);
  CHECK(s.mean == 0.0);
  CHECK(s.ci_low == 0.0);
  CHECK(s.ci_high == 0.0);
  CHECK_FALSE(dessca::significantly_better(s, s));
  CHECK_THROWS_AS(dessca::summarize(std::vector<double>{1.0}), std::invalid_argument);
}

TEST_CASE("confidence-interval significance rule and median improvement") {
  RunSummary base;
  base.median = 79.565;
  base.ci_low = 78.234;
  base.ci_high = 81.299;
  RunSummary cand;
  cand.median = 88.273;
  cand.ci_low = 86.587;
  cand.ci_high = 88.325;

  CHECK(dessca::significantly_better(base, cand));
  CHECK_FALSE(dessca::significantly_better(cand, base));
  CHECK(std::abs(dessca::relative_median_improvement(base, cand) - 10.9445) < 1e-3);

  // Overlapping intervals are not significant no matter the medians.
  RunSummary overlap = cand;
  overlap.ci_low = 80.0;
  CHECK_FALSE(dessca::significantly_better(base, overlap));

  RunSummary zero;
  zero.median = 0.0;
  CHECK_THROWS_AS(dessca::relative_median_improvement(zero, cand), std::invalid_argument);

  // Negative baselines: improvement is signed relative to |baseline|.
  RunSummary nb, nc;
  nb.median = -2.0;
  nc.median = -1.0;
  CHECK(dessca::relative_median_improvement(nb, nc) == doctest::Approx(50.0).epsilon(1e-12));
}

TEST_CASE("kolmogorov-smirnov hand cases") {
  const auto uniform_cdf = [](double x) { return std::min(std::max(x, 0.0), 1.0); };
  CHECK(dessca::ks_statistic(std::vector<double>{0.5}, uniform_cdf) ==
        doctest::Approx(0.5).epsilon(1e-12));
  CHECK(dessca::ks_statistic(std::vector<double>{0.25, 0.75}, uniform_cdf) ==
        doctest::Approx(0.25).epsilon(1e-12));
  CHECK(dessca::ks_statistic(std::vector<double>{0.125, 0.375, 0.625, 0.875}, uniform_cdf) ==
        doctest::Approx(0.125).epsilon(1e-12));
  CHECK_THROWS_AS(dessca::ks_statistic(std::vector<double>{}, uniform_cdf),
                  std::invalid_argument);
}

TEST_CASE("kolmogorov-smirnov against a dense-grid oracle") {
  std::mt19937_64 rng(21);
  {
    std::uniform_real_distribution<double> dist(0.0, 1.0);
    std::vector<double> samples(200);
    for (double& s : samples) s = dist(rng);
    const auto cdf = [](double x) { return std::min(std::max(x, 0.0), 1.0); };
    const double exact = dessca::ks_statistic(samples, cdf);
    const double grid = oracle::ks_statistic_grid(samples, cdf, -0.1, 1.1);
    CHECK(exact == doctest::Approx(grid).epsilon(1e-4));
  }
  {
    std::normal_distribution<double> dist(0.0, 1.0);
    std::vector<double> samples(200);
    for (double& s : samples) s = dist(rng);
    const auto cdf = [](double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); };
    const double exact = dessca::ks_statistic(samples, cdf);
    const double grid = oracle::ks_statistic_grid(samples, cdf, -6.0, 6.0);
    CHECK(exact == doctest::Approx(grid).epsilon(1e-4));
  }
}

TEST_CASE("coverage metrics on a uniform sample") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<Vec> states(10000, Vec(2));
  for (auto& s : states) {
    s[0] = dist(rng);
    s[1] = dist(rng);
  }
  const auto ref = dessca::ReferenceDensity::uniform_box(2);
  const CoverageMetrics m = dessca::coverage_metrics(states, ref);
  REQUIRE(m.ks_per_dim.size() == 2);
  CHECK(m.ks_max < 0.03);
  CHECK(m.ks_max == std::max(m.ks_per_dim[0], m.ks_per_dim[1]));
  // Boundary spill keeps the KDE below the flat reference near the edges, so
  // the density gap is visible but bounded.
  CHECK(m.density_rmse >= 0.0);
  CHECK(m.density_rmse < 0.15);
}

TEST_CASE("coverage metrics flag a degenerate cluster") {
  std::mt19937_64 rng(32);
  std::normal_distribution<double> noise(0.0, 0.01);
  std::vector<Vec> states(1000, Vec(2));
  for (auto& s : states) {
    s[0] = std::clamp(noise(rng), -1.0, 1.0);
    s[1] = std::clamp(noise(rng), -1.0, 1.0);
  }
  const auto ref = dessca::ReferenceDensity::uniform_box(2);
  const CoverageMetrics m = dessca::coverage_metrics(states, ref);
  CHECK(m.ks_max > 0.4);
  CHECK(m.density_rmse > 1.0);
}

TEST_CASE("coverage metrics skip the density grid above two dimensions") {
  std::mt19937_64 rng(33);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<Vec> states(200, Vec(3));
  for (auto& s : states) {
    for (double& c : s) c = dist(rng);
  }
  const auto ref = dessca::ReferenceDensity::uniform_box(3);
  const CoverageMetrics m = dessca::coverage_metrics(states, ref);
  CHECK(m.ks_per_dim.size() == 3);
  CHECK(m.density_rmse == -1.0);
  CHECK_THROWS_AS(dessca::coverage_metrics(std::vector<Vec>(5, Vec(3, 0.0)), ref),
                  std::invalid_argument);
}
