#include <doctest.h>

#include <cmath>
#include <limits>
#include <stdexcept>

#include "dessca/pso.hpp"

using dessca::maximize;
using dessca::MaximizeResult;
using dessca::SwarmConfig;
using dessca::Vec;

namespace {

int count_recoveries(const std::function<double(const Vec&)>& obj, const Vec& target,
                     double tol) {
  int hits = 0;
  for (int seed = 0; seed < 100; ++seed) {
    const MaximizeResult r = maximize(obj, 2, SwarmConfig::defaults_for(2, seed));
    bool ok = true;
    for (size_t i = 0; i < target.size(); ++i) {
      if (std::abs(r.argmax[i] - target[i]) > tol) ok = false;
    }
    if (ok) ++hits;
  }
  return hits;
}

}  // namespace

TEST_CASE("default swarm budgets scale with dimension") {
  const SwarmConfig c = SwarmConfig::defaults_for(3, 9);
  CHECK(c.particles == 30);
  CHECK(c.iterations == 35);
  CHECK(c.cognitive == 2.0);
  CHECK(c.social == 2.0);
  CHECK(c.inertia == 0.6);
  CHECK(c.seed == 9);
}

TEST_CASE("recovers the origin of a concave quadratic") {
  const auto obj = [](const Vec& x) { return -(x[0] * x[0] + x[1] * x[1]); };
  CHECK(count_recoveries(obj, {0.0, 0.0}, 0.05) >= 95);
}

TEST_CASE("recovers a shifted quadratic maximizer") {
  const auto obj = [](const Vec& x) {
    return -((x[0] - 0.3) * (x[0] - 0.3) + (x[1] + 0.2) * (x[1] + 0.2));
  };
  CHECK(count_recoveries(obj, {0.3, -0.2}, 0.05) >= 95);
}

TEST_CASE("finds the taller peak of a bimodal surface") {
  const auto obj = [](const Vec& x) {
    const double d1 = (x[0] + 0.5) * (x[0] + 0.5) + (x[1] + 0.5) * (x[1] + 0.5);
    const double d2 = (x[0] - 0.5) * (x[0] - 0.5) + (x[1] - 0.5) * (x[1] - 0.5);
    return std::exp(-d1 / (2 * 0.35 * 0.35)) + 0.5 * std::exp(-d2 / (2 * 0.35 * 0.35));
  };
  CHECK(count_recoveries(obj, {-0.5, -0.5}, 0.25) >= 90);
}

TEST_CASE("argmax stays inside the box") {
  // Maximizer outside the box: the swarm must settle on a clamped corner.
  const auto obj = [](const Vec& x) { return x[0] + x[1]; };
  for (int seed = 0; seed < 20; ++seed) {
    const MaximizeResult r = maximize(obj, 2, SwarmConfig::defaults_for(2, seed));
    CHECK(r.argmax[0] <= 1.0);
    CHECK(r.argmax[0] >= -1.0);
    CHECK(r.argmax[1] <= 1.0);
    CHECK(r.argmax[1] >= -1.0);
    CHECK(r.argmax[0] == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(r.argmax[1] == doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("value is the objective re-evaluated at the argmax") {
  const auto obj = [](const Vec& x) { return -(x[0] - 0.1) * (x[0] - 0.1); };
  const MaximizeResult r = maximize(obj, 1, SwarmConfig::defaults_for(1, 4));
  CHECK(r.value == obj(r.argmax));  // exact
}

TEST_CASE("incumbent value never decreases") {
  const auto obj = [](const Vec& x) { return std::sin(5.0 * x[0]) * std::cos(3.0 * x[1]); };
  const MaximizeResult r = maximize(obj, 2, SwarmConfig::defaults_for(2, 77));
  REQUIRE(!r.best_history.empty());
  CHECK(static_cast<int>(r.best_history.size()) == SwarmConfig::defaults_for(2, 77).iterations);
  for (size_t i = 1; i < r.best_history.size(); ++i) {
    CHECK(r.best_history[i] >= r.best_history[i - 1]);
  }
}

TEST_CASE("same seed reproduces the result bitwise") {
  const auto obj = [](const Vec& x) { return -(x[0] * x[0]) + 0.3 * std::sin(9.0 * x[1]); };
  const MaximizeResult a = maximize(obj, 2, SwarmConfig::defaults_for(2, 123));
  const MaximizeResult b = maximize(obj, 2, SwarmConfig::defaults_for(2, 123));
  CHECK(a.argmax == b.argmax);
  CHECK(a.value == b.value);
  CHECK(a.best_history == b.best_history);
}

TEST_CASE("NaN objectives are refused") {
  const auto obj = [](const Vec&) { return std::numeric_limits<double>::quiet_NaN(); };
  CHECK_THROWS_AS(maximize(obj, 1, SwarmConfig::defaults_for(1, 0)), std::runtime_error);
}

TEST_CASE("invalid configurations are rejected") {
  const auto obj = [](const Vec& x) { return -x[0] * x[0]; };
  SwarmConfig bad = SwarmConfig::defaults_for(1, 0);
  bad.particles = 0;
  CHECK_THROWS_AS(maximize(obj, 1, bad), std::invalid_argument);
  bad = SwarmConfig::defaults_for(1, 0);
  bad.iterations = 0;
  CHECK_THROWS_AS(maximize(obj, 1, bad), std::invalid_argument);
  CHECK_THROWS_AS(maximize(obj, 0, SwarmConfig::defaults_for(1, 0)), std::invalid_argument);
}
