#include "dessca/pso.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace dessca {

SwarmConfig SwarmConfig::defaults_for(int dim, std::uint64_t seed) {
  SwarmConfig cfg;
  cfg.particles = 10 * dim;
  cfg.iterations = 10 * dim + 5;
  cfg.seed = seed;
  return cfg;
}

namespace {

void evaluate_all(const std::function<double(const Vec&)>& objective,
                  const std::vector<Vec>& positions, std::vector<double>& values) {
  const std::int64_t n = static_cast<std::int64_t>(positions.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    values[static_cast<std::size_t>(i)] = objective(positions[static_cast<std::size_t>(i)]);
  }
  for (double v : values) {
    if (std::isnan(v)) throw std::runtime_error("pso::maximize: objective not finite");
  }
}

}  // namespace

MaximizeResult maximize(const std::function<double(const Vec&)>& objective, int dim,
                        const SwarmConfig& cfg) {
  if (dim < 1) throw std::invalid_argument("pso::maximize: dim must be >= 1");
  if (cfg.particles < 1 || cfg.iterations < 1) {
    throw std::invalid_argument("pso::maximize: particles and iterations must be >= 1");
  }

  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> unit_box(-1.0, 1.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  const std::size_t n = static_cast<std::size_t>(cfg.particles);
  std::vector<Vec> position(n, Vec(dim));
  std::vector<Vec> velocity(n, Vec(dim, 0.0));
  std::vector<double> value(n);

  for (auto& p : position) {
    for (double& c : p) c = unit_box(rng);
  }
  evaluate_all(objective, position, value);

  std::vector<Vec> pbest = position;
  std::vector<double> pbest_value = value;

  Vec gbest = pbest[0];
  double gbest_value = pbest_value[0];
  for (std::size_t i = 1; i < n; ++i) {
    if (pbest_value[i] > gbest_value) {
      gbest_value = pbest_value[i];
      gbest = pbest[i];
    }
  }

  MaximizeResult result;
  result.best_history.reserve(cfg.iterations);

  for (int iter = 0; iter < cfg.iterations; ++iter) {
    for (std::size_t i = 0; i < n; ++i) {
      for (int j = 0; j < dim; ++j) {
        const double r1 = unit(rng);
        const double r2 = unit(rng);
        velocity[i][j] = cfg.inertia * velocity[i][j] +
                         cfg.cognitive * r1 * (pbest[i][j] - position[i][j]) +
                         cfg.social * r2 * (gbest[j] - position[i][j]);
        position[i][j] = std::clamp(position[i][j] + velocity[i][j], -1.0, 1.0);
      }
    }
    evaluate_all(objective, position, value);
    for (std::size_t i = 0; i < n; ++i) {
      if (value[i] > pbest_value[i]) {
        pbest_value[i] = value[i];
        pbest[i] = position[i];
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (pbest_value[i] > gbest_value) {
        gbest_value = pbest_value[i];
        gbest = pbest[i];
      }
    }
    result.best_history.push_back(gbest_value);
  }

  result.argmax = std::move(gbest);
  result.value = objective(result.argmax);
  return result;
}

}  // namespace dessca
