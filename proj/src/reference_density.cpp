#include "dessca/reference_density.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace dessca {

namespace {
constexpr std::size_t kMaxMarginalSamples = 20000;
}

void ReferenceDensity::check_dim(const Vec& x) const {
  if (static_cast<int>(x.size()) != dim_) {
    throw std::invalid_argument("ReferenceDensity: dimension mismatch");
  }
}

ReferenceDensity ReferenceDensity::uniform_box(int dim) {
  if (dim < 1) throw std::invalid_argument("ReferenceDensity::uniform_box: dim must be >= 1");
  ReferenceDensity r;
  r.dim_ = dim;
  r.z_ = std::pow(2.0, dim);
  const double value = 1.0 / r.z_;
  r.eval_ = [value](const Vec&) { return value; };
  r.feas_ = [](const Vec&) { return true; };
  r.marginal_kind_ = MarginalKind::uniform;
  return r;
}

ReferenceDensity ReferenceDensity::uniform_feasible(int dim, Predicate feasible,
                                                    std::uint64_t seed,
                                                    std::size_t draws) {
  if (dim < 1) throw std::invalid_argument("ReferenceDensity::uniform_feasible: dim must be >= 1");
  if (!feasible) throw std::invalid_argument("ReferenceDensity::uniform_feasible: null predicate");

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);

  std::size_t accepted = 0;
  std::vector<std::vector<double>> marginals(dim);
  const std::size_t keep_stride = std::max<std::size_t>(1, draws / kMaxMarginalSamples);

  Vec x(dim);
  for (std::size_t k = 0; k < draws; ++k) {
    for (int j = 0; j < dim; ++j) x[j] = unit(rng);
    if (feasible(x)) {
      if (accepted % keep_stride == 0) {
        for (int j = 0; j < dim; ++j) marginals[j].push_back(x[j]);
      }
      ++accepted;
    }
  }

  const double fraction = static_cast<double>(accepted) / static_cast<double>(draws);
  if (fraction < 1e-3) {
    throw std::runtime_error("ReferenceDensity::uniform_feasible: degenerate feasible set");
  }
  for (auto& m : marginals) std::sort(m.begin(), m.end());

  ReferenceDensity r;
  r.dim_ = dim;
  r.z_ = std::pow(2.0, dim) * fraction;
  const double value = 1.0 / r.z_;
  auto pred = std::move(feasible);
  r.eval_ = [value, pred](const Vec& q) { return pred(q) ? value : 0.0; };
  r.feas_ = pred;
  r.marginal_kind_ = MarginalKind::empirical;
  r.marginal_samples_ = std::move(marginals);
  return r;
}

ReferenceDensity ReferenceDensity::custom(int dim, Evaluator density, Predicate feasible) {
  if (dim < 1) throw std::invalid_argument("ReferenceDensity::custom: dim must be >= 1");
  if (!density || !feasible) throw std::invalid_argument("ReferenceDensity::custom: null callable");
  ReferenceDensity r;
  r.dim_ = dim;
  r.z_ = 1.0;
  auto pred = std::move(feasible);
  auto dens = std::move(density);
  r.eval_ = [dens, pred](const Vec& q) { return pred(q) ? dens(q) : 0.0; };
  r.feas_ = pred;
  r.marginal_kind_ = MarginalKind::none;
  return r;
}

double ReferenceDensity::evaluate(const Vec& x) const {
  check_dim(x);
  return eval_(x);
}

bool ReferenceDensity::feasible(const Vec& x) const {
  check_dim(x);
  return feas_(x);
}

bool ReferenceDensity::has_marginals() const {
  return marginal_kind_ != MarginalKind::none;
}

double ReferenceDensity::marginal_cdf(int dim_index, double x) const {
  if (dim_index < 0 || dim_index >= dim_) {
    throw std::invalid_argument("ReferenceDensity::marginal_cdf: bad dimension index");
  }
  switch (marginal_kind_) {
    case MarginalKind::uniform:
      return std::clamp(0.5 * (x + 1.0), 0.0, 1.0);
    case MarginalKind::empirical: {
      const auto& m = marginal_samples_[dim_index];
      const auto it = std::upper_bound(m.begin(), m.end(), x);
      return static_cast<double>(it - m.begin()) / static_cast<double>(m.size());
    }
    case MarginalKind::none:
      break;
  }
  throw std::runtime_error("ReferenceDensity::marginal_cdf: marginals unavailable for custom densities");
}

}  // namespace dessca
