#pragma once

#include <cstdint>
#include <span>

#include "dessca/kde.hpp"
#include "dessca/pso.hpp"
#include "dessca/reference_density.hpp"
#include "dessca/state_space.hpp"

namespace dessca {

// Proposes each episode's initial state by maximizing the exploration metric
//
//   e_c(x) = c*(x) - c_hat(x)
//
// over the normalized box, then ingests the states visited during the
// episode. With an empty buffer, c*(x) alone is maximized. Infeasible points
// are scored with a large finite penalty inside the swarm objective, so the
// returned proposal is always feasible and in-box.
//
// One logical owner per engine: propose() and record_episode() never overlap;
// the swarm's parallel objective evaluations only read the estimator.
class DesscaEngine {
 public:
  DesscaEngine(CoverageEstimator estimator, ReferenceDensity reference,
               SwarmConfig swarm, double infeasibility_penalty = -1e6);

  // Next initial state in normalized coordinates. Each call consumes one
  // derived swarm seed, so consecutive proposals use fresh particle clouds
  // while the whole sequence stays reproducible from the configured seed.
  Vec propose();

  void record_episode(std::span<const Vec> visited);

  // c*(x) - c_hat(x); may be negative. Requires a non-empty buffer.
  double exploration_metric(const Vec& x) const;

  const CoverageEstimator& estimator() const { return estimator_; }
  const ReferenceDensity& reference() const { return reference_; }
  std::uint64_t proposals_made() const { return proposal_count_; }

 private:
  CoverageEstimator estimator_;
  ReferenceDensity reference_;
  SwarmConfig swarm_;
  double infeasibility_penalty_;
  std::uint64_t proposal_count_ = 0;
};

}  // namespace dessca
