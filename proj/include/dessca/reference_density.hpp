#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "dessca/state_space.hpp"

namespace dessca {

// User-chosen reference coverage density c*(x) over the normalized box
// [-1,1]^d together with the feasibility predicate that defines its support.
// evaluate() is zero off the feasible set and the density is normalized so
// that it integrates to one over the box (exactly for the uniform factory,
// by seeded Monte Carlo for constrained supports).
//
// Immutable after construction; evaluators must be pure so instances can be
// shared across threads.
class ReferenceDensity {
 public:
  using Evaluator = std::function<double(const Vec&)>;
  using Predicate = std::function<bool(const Vec&)>;

  static ReferenceDensity uniform_box(int dim);

  // Uniform density on {x : feasible(x)}. The feasible volume fraction is
  // estimated from `draws` seeded uniform samples; fractions below 1e-3 are
  // rejected as degenerate.
  static ReferenceDensity uniform_feasible(int dim, Predicate feasible,
                                           std::uint64_t seed,
                                           std::size_t draws = 100000);

  // Wraps a user-supplied normalized density. The density is gated on the
  // feasibility predicate; the caller is responsible for normalization.
  static ReferenceDensity custom(int dim, Evaluator density, Predicate feasible);

  int dim() const { return dim_; }
  double evaluate(const Vec& x) const;
  bool feasible(const Vec& x) const;

  // Normalizing constant Z such that evaluate = indicator/Z for the uniform
  // factories (2^d for the whole box, 2^d * volume fraction for constrained
  // supports); 1 for custom densities.
  double normalization() const { return z_; }

  // Marginal CDF of the reference along one dimension, used by coverage
  // metrics. Analytic for uniform_box, empirical (from the normalization
  // draws) for uniform_feasible; unavailable for custom densities.
  bool has_marginals() const;
  double marginal_cdf(int dim_index, double x) const;

 private:
  ReferenceDensity() = default;

  void check_dim(const Vec& x) const;

  enum class MarginalKind { uniform, empirical, none };

  int dim_ = 0;
  Evaluator eval_;
  Predicate feas_;
  double z_ = 1.0;
  MarginalKind marginal_kind_ = MarginalKind::none;
  std::vector<std::vector<double>> marginal_samples_;  // sorted, per dimension
};

}  // namespace dessca
