#pragma once

#include <string>
#include <vector>

namespace dessca {

using Vec = std::vector<double>;

// Per-dimension physical bounds of a state box. All coverage bookkeeping
// happens in coordinates normalized onto [-1,1]^d; BoxBounds carries the
// affine map between the two.
class BoxBounds {
 public:
  BoxBounds(Vec lower, Vec upper);

  int dim() const { return static_cast<int>(lower_.size()); }
  const Vec& lower() const { return lower_; }
  const Vec& upper() const { return upper_; }

  // Closed-box membership test in physical coordinates.
  bool contains(const Vec& physical) const;

 private:
  Vec lower_;
  Vec upper_;
};

// Affine map of a physical state onto [-1,1]^d (lower -> -1, upper -> +1).
Vec normalize(const Vec& physical, const BoxBounds& bounds);

// Exact inverse of normalize.
Vec denormalize(const Vec& normalized, const BoxBounds& bounds);

}  // namespace dessca
