#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

#include "dessca/kde.hpp"
#include "oracles.hpp"

using dessca::CoverageEstimator;
using dessca::Vec;

TEST_CASE("single-point kernel peaks") {
  CoverageEstimator one_d(1, 0.1);
  one_d.observe(Vec{0.0});
  CHECK(one_d.density({0.0}) ==
        doctest::Approx(10.0 / std::sqrt(2.0 * std::numbers::pi)).epsilon(1e-12));
  CHECK(one_d.density({0.1}) ==
        doctest::Approx(10.0 * std::exp(-0.5) / std::sqrt(2.0 * std::numbers::pi)).epsilon(1e-12));

  CoverageEstimator two_d(2, 0.1);
  two_d.observe(Vec{0.0, 0.0});
  CHECK(two_d.density({0.0, 0.0}) ==
        doctest::Approx(1.0 / (2.0 * std::numbers::pi * 0.01)).epsilon(1e-12));
}

TEST_CASE("empty buffer carries no coverage information") {
  CoverageEstimator kde(2, 0.1);
  CHECK(kde.empty());
  CHECK_THROWS_AS(kde.density({0.0, 0.0}), std::runtime_error);
}

TEST_CASE("brute-force oracle equivalence") {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> coord(-1.0, 1.0);
  for (int rep = 0; rep < 100; ++rep) {
    std::uniform_int_distribution<int> dims(1, 6), counts(1, 100);
    const int d = dims(rng);
    const int n = counts(rng);
    std::uniform_real_distribution<double> bw(0.05, 0.8);
    const double b = bw(rng);

    CoverageEstimator kde(d, b);
    std::vector<Vec> buffer;
    for (int i = 0; i < n; ++i) {
      Vec x(d);
      for (double& v : x) v = coord(rng);
      buffer.push_back(x);
      kde.observe(x);
    }
    Vec q(d);
    for (double& v : q) v = coord(rng);
    const double expected = oracle::kde_density(buffer, q, b);
    CHECK(kde.density(q) == doctest::Approx(expected).epsilon(1e-10));
  }
}

TEST_CASE("density is invariant under buffer permutation") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> coord(-1.0, 1.0);
  std::vector<Vec> pts;
  for (int i = 0; i < 40; ++i) pts.push_back({coord(rng), coord(rng)});

  CoverageEstimator fwd(2, 0.15), rev(2, 0.15);
  fwd.observe(pts);
  for (auto it = pts.rbegin(); it != pts.rend(); ++it) rev.observe(*it);

  const Vec q{0.3, -0.4};
  CHECK(fwd.density(q) == doctest::Approx(rev.density(q)).epsilon(1e-13));
}

TEST_CASE("quadrature of the density is one") {
  // 1-D: trapezoid over the support padded by 8 bandwidths.
  CoverageEstimator kde(1, 0.1);
  kde.observe(std::vector<Vec>{{-0.4}, {0.1}, {0.5}});
  const double lo = -0.4 - 0.8, hi = 0.5 + 0.8;
  const int n = 20001;
  double integral = 0.0;
  for (int i = 0; i < n; ++i) {
    const double x = lo + (hi - lo) * i / (n - 1);
    const double w = (i == 0 || i == n - 1) ? 0.5 : 1.0;
    integral += w * kde.density({x});
  }
  integral *= (hi - lo) / (n - 1);
  CHECK(integral == doctest::Approx(1.0).epsilon(1e-3));
}

TEST_CASE("smoothing monotonicity over bandwidth") {
  // Two-point buffer: the valley between the samples fills in as b grows.
  double previous_ratio = -1.0;
  for (double b : {0.1, 0.25, 0.5}) {
    CoverageEstimator kde(1, b);
    kde.observe(std::vector<Vec>{{-0.5}, {0.5}});
    const double ratio = kde.density({0.0}) / kde.density({0.5});
    CHECK(ratio > previous_ratio);
    previous_ratio = ratio;
  }
}

TEST_CASE("ring buffer evicts oldest entries") {
  CoverageEstimator kde(1, 0.1, 3);
  CHECK(kde.capacity() == 3);
  kde.observe(Vec{1.0});
  kde.observe(Vec{2.0});
  kde.observe(Vec{3.0});
  CHECK(kde.size() == 3);
  kde.observe(Vec{4.0});
  CHECK(kde.size() == 3);
  CHECK(kde.entry(0)[0] == 2.0);
  CHECK(kde.entry(1)[0] == 3.0);
  CHECK(kde.entry(2)[0] == 4.0);
}

TEST_CASE("batch evaluation matches serial evaluation bitwise") {
  std::mt19937_64 rng(33);
  std::uniform_real_distribution<double> coord(-1.0, 1.0);
  CoverageEstimator kde(3, 0.2);
  for (int i = 0; i < 500; ++i) kde.observe(Vec{coord(rng), coord(rng), coord(rng)});

  std::vector<Vec> queries;
  for (int i = 0; i < 64; ++i) queries.push_back({coord(rng), coord(rng), coord(rng)});

  const std::vector<double> batch = kde.density_batch(queries);
  REQUIRE(batch.size() == queries.size());
  for (size_t i = 0; i < queries.size(); ++i) {
    CHECK(batch[i] == kde.density(queries[i]));  // bitwise
  }
}

TEST_CASE("constructor rejects bad parameters") {
  CHECK_THROWS_AS(CoverageEstimator(0, 0.1), std::invalid_argument);
  CHECK_THROWS_AS(CoverageEstimator(2, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(CoverageEstimator(2, -0.1), std::invalid_argument);
}

TEST_CASE("dimension mismatch on observe and density") {
  CoverageEstimator kde(2, 0.1);
  CHECK_THROWS_AS(kde.observe(Vec{0.0}), std::invalid_argument);
  kde.observe(Vec{0.0, 0.0});
  CHECK_THROWS_AS(kde.density({0.0}), std::invalid_argument);
}
