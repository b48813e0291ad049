#include "dessca/kde.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace dessca {

CoverageEstimator::CoverageEstimator(int dim, double bandwidth, std::size_t capacity,
                                     Kernel kernel)
    : dim_(dim), bandwidth_(bandwidth), capacity_(capacity) {
  if (dim_ < 1) throw std::invalid_argument("CoverageEstimator: dim must be >= 1");
  if (!(bandwidth_ > 0.0)) throw std::invalid_argument("CoverageEstimator: bandwidth must be > 0");
  if (kernel != Kernel::gaussian) throw std::invalid_argument("CoverageEstimator: unsupported kernel");
  if (capacity_ > 0) flat_.reserve(capacity_ * dim_);
}

std::size_t CoverageEstimator::size() const {
  if (capacity_ > 0 && full_) return capacity_;
  return flat_.size() / dim_;
}

Vec CoverageEstimator::entry(std::size_t i) const {
  const std::size_t n = size();
  if (i >= n) throw std::out_of_range("CoverageEstimator::entry: index out of range");
  std::size_t physical = i;
  if (capacity_ > 0 && full_) physical = (write_pos_ + i) % capacity_;
  const double* p = slot(physical);
  return Vec(p, p + dim_);
}

void CoverageEstimator::observe(const Vec& state) {
  observe(std::span<const Vec>(&state, 1));
}

void CoverageEstimator::observe(std::span<const Vec> states) {
  for (const Vec& s : states) {
    if (static_cast<int>(s.size()) != dim_) {
      throw std::invalid_argument("CoverageEstimator::observe: dimension mismatch");
    }
    if (capacity_ == 0) {
      flat_.insert(flat_.end(), s.begin(), s.end());
    } else if (!full_) {
      flat_.insert(flat_.end(), s.begin(), s.end());
      if (flat_.size() == capacity_ * dim_) {
        full_ = true;
        write_pos_ = 0;
      }
    } else {
      double* dst = flat_.data() + write_pos_ * dim_;
      for (int j = 0; j < dim_; ++j) dst[j] = s[j];
      write_pos_ = (write_pos_ + 1) % capacity_;
    }
  }
}

double CoverageEstimator::density_at(const double* x) const {
  const std::size_t n = size();
  const double inv_b2 = 1.0 / (bandwidth_ * bandwidth_);
  double sum = 0.0;
  // Physical slot order; the estimate is permutation-invariant and the layout
  // is a deterministic function of the observation history.
  for (std::size_t i = 0; i < n; ++i) {
    const double* xi = slot(i);
    double sq = 0.0;
    for (int j = 0; j < dim_; ++j) {
      const double dz = x[j] - xi[j];
      sq += dz * dz;
    }
    sum += std::exp(-0.5 * sq * inv_b2);
  }
  const double norm =
      std::pow(2.0 * std::numbers::pi, -0.5 * dim_) / (static_cast<double>(n) * std::pow(bandwidth_, dim_));
  return norm * sum;
}

double CoverageEstimator::density(const Vec& x) const {
  if (empty()) throw std::runtime_error("CoverageEstimator::density: empty buffer, no coverage information");
  if (static_cast<int>(x.size()) != dim_) {
    throw std::invalid_argument("CoverageEstimator::density: dimension mismatch");
  }
  return density_at(x.data());
}

std::vector<double> CoverageEstimator::density_batch(std::span<const Vec> xs) const {
  if (empty()) throw std::runtime_error("CoverageEstimator::density_batch: empty buffer, no coverage information");
  for (const Vec& x : xs) {
    if (static_cast<int>(x.size()) != dim_) {
      throw std::invalid_argument("CoverageEstimator::density_batch: dimension mismatch");
    }
  }
  std::vector<double> out(xs.size());
  const std::int64_t m = static_cast<std::int64_t>(xs.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t k = 0; k < m; ++k) {
    out[static_cast<std::size_t>(k)] = density_at(xs[static_cast<std::size_t>(k)].data());
  }
  return out;
}

}  // namespace dessca
