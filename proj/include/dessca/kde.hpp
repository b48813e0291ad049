#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "dessca/state_space.hpp"

namespace dessca {

enum class Kernel { gaussian };

// Kernel density estimate of the coverage density over normalized state
// space. Visited states are kept in a FIFO ring buffer (capacity 0 means
// unbounded) and the estimate at x is
//
//   c_hat(x) = 1/(N b^d) * sum_i (2*pi)^(-d/2) exp(-||(x - x_i)/b||^2 / 2),
//
// a proper d-variate density that integrates to one.
//
// observe() is single-writer; density()/density_batch() are read-only and
// safe to call concurrently between writes.
class CoverageEstimator {
 public:
  CoverageEstimator(int dim, double bandwidth, std::size_t capacity = 0,
                    Kernel kernel = Kernel::gaussian);

  int dim() const { return dim_; }
  double bandwidth() const { return bandwidth_; }
  std::size_t capacity() const { return capacity_; }  // 0 = unbounded
  std::size_t size() const;
  bool empty() const { return size() == 0; }

  // i-th buffered state in logical order, oldest first.
  Vec entry(std::size_t i) const;

  void observe(const Vec& state);
  void observe(std::span<const Vec> states);

  // Serial reference evaluation. Throws if the buffer is empty (the caller
  // owns the no-coverage-information branch).
  double density(const Vec& x) const;

  // OpenMP-parallel evaluation over many query points. Each point is summed
  // in the same order as density(), so results are bitwise identical to the
  // serial path for any thread count.
  std::vector<double> density_batch(std::span<const Vec> xs) const;

 private:
  const double* slot(std::size_t physical) const { return flat_.data() + physical * dim_; }
  double density_at(const double* x) const;

  int dim_;
  double bandwidth_;
  std::size_t capacity_;
  std::vector<double> flat_;   // row-major, dim_ doubles per state
  std::size_t write_pos_ = 0;  // next physical slot when acting as a ring
  bool full_ = false;
};

}  // namespace dessca
