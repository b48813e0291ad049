#include "dessca/engine.hpp"

#include <stdexcept>
#include <utility>

#include "dessca/seeds.hpp"

namespace dessca {

DesscaEngine::DesscaEngine(CoverageEstimator estimator, ReferenceDensity reference,
                           SwarmConfig swarm, double infeasibility_penalty)
    : estimator_(std::move(estimator)),
      reference_(std::move(reference)),
      swarm_(swarm),
      infeasibility_penalty_(infeasibility_penalty) {
  if (estimator_.dim() != reference_.dim()) {
    throw std::invalid_argument("DesscaEngine: estimator/reference dimension mismatch");
  }
  if (swarm_.particles < 1 || swarm_.iterations < 1) {
    throw std::invalid_argument("DesscaEngine: swarm config incomplete");
  }
  if (!(infeasibility_penalty_ < 0.0)) {
    throw std::invalid_argument("DesscaEngine: infeasibility penalty must be negative");
  }
}

Vec DesscaEngine::propose() {
  const bool have_coverage = !estimator_.empty();
  const double penalty = infeasibility_penalty_;

  std::function<double(const Vec&)> objective;
  if (have_coverage) {
    objective = [this, penalty](const Vec& x) {
      if (!reference_.feasible(x)) return penalty;
      return reference_.evaluate(x) - estimator_.density(x);
    };
  } else {
    objective = [this, penalty](const Vec& x) {
      if (!reference_.feasible(x)) return penalty;
      return reference_.evaluate(x);
    };
  }

  SwarmConfig cfg = swarm_;
  cfg.seed = derive_seed(swarm_.seed, Stream::pso, proposal_count_);
  ++proposal_count_;

  MaximizeResult best = maximize(objective, estimator_.dim(), cfg);
  if (!reference_.feasible(best.argmax)) {
    throw std::runtime_error("DesscaEngine::propose: no feasible proposal");
  }
  return std::move(best.argmax);
}

void DesscaEngine::record_episode(std::span<const Vec> visited) {
  estimator_.observe(visited);
}

double DesscaEngine::exploration_metric(const Vec& x) const {
  return reference_.evaluate(x) - estimator_.density(x);
}

}  // namespace dessca
