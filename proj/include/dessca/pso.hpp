#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "dessca/state_space.hpp"

namespace dessca {

// Global-best particle swarm settings. defaults_for() applies the standard
// sizing used throughout: 10*d particles, 10*d + 5 iterations, cognitive and
// social coefficients 2, inertia 0.6.
struct SwarmConfig {
  int particles = 0;
  int iterations = 0;
  double cognitive = 2.0;
  double social = 2.0;
  double inertia = 0.6;
  std::uint64_t seed = 0;

  static SwarmConfig defaults_for(int dim, std::uint64_t seed);
};

struct MaximizeResult {
  Vec argmax;
  double value = 0.0;                // objective re-evaluated at argmax
  std::vector<double> best_history;  // incumbent value after each iteration
};

// Maximizes the objective over the box [-1,1]^dim with global-best PSO.
// Particle positions are clamped to the box every step (velocities are
// unrestricted); personal and global bests update on strict improvement
// only, so ties keep the incumbent. The full iteration budget always runs.
//
// The objective must be side-effect-free: evaluations within one iteration
// run concurrently. All random draws happen on the calling thread, so the
// result is bit-for-bit reproducible for a given seed regardless of thread
// count. NaN objective values raise an error; callers encode infeasibility
// as a large finite penalty.
MaximizeResult maximize(const std::function<double(const Vec&)>& objective, int dim,
                        const SwarmConfig& cfg);

}  // namespace dessca
