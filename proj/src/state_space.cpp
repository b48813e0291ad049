#include "dessca/state_space.hpp"

#include <stdexcept>

namespace dessca {

BoxBounds::BoxBounds(Vec lower, Vec upper)
    : lower_(std::move(lower)), upper_(std::move(upper)) {
  if (lower_.empty() || lower_.size() != upper_.size()) {
    throw std::invalid_argument("BoxBounds: lower/upper must be non-empty and equal length");
  }
  for (std::size_t i = 0; i < lower_.size(); ++i) {
    if (!(lower_[i] < upper_[i])) {
      throw std::invalid_argument("BoxBounds: lower[" + std::to_string(i) +
                                  "] must be < upper[" + std::to_string(i) + "]");
    }
  }
}

bool BoxBounds::contains(const Vec& physical) const {
  if (physical.size() != lower_.size()) {
    throw std::invalid_argument("BoxBounds::contains: dimension mismatch");
  }
  for (std::size_t i = 0; i < lower_.size(); ++i) {
    if (physical[i] < lower_[i] || physical[i] > upper_[i]) return false;
  }
  return true;
}

Vec normalize(const Vec& physical, const BoxBounds& bounds) {
  if (static_cast<int>(physical.size()) != bounds.dim()) {
    throw std::invalid_argument("normalize: dimension mismatch");
  }
  Vec out(physical.size());
  for (std::size_t i = 0; i < physical.size(); ++i) {
    const double lo = bounds.lower()[i];
    const double hi = bounds.upper()[i];
    out[i] = 2.0 * (physical[i] - lo) / (hi - lo) - 1.0;
  }
  return out;
}

Vec denormalize(const Vec& normalized, const BoxBounds& bounds) {
  if (static_cast<int>(normalized.size()) != bounds.dim()) {
    throw std::invalid_argument("denormalize: dimension mismatch");
  }
  Vec out(normalized.size());
  for (std::size_t i = 0; i < normalized.size(); ++i) {
    const double lo = bounds.lower()[i];
    const double hi = bounds.upper()[i];
    out[i] = lo + (normalized[i] + 1.0) * 0.5 * (hi - lo);
  }
  return out;
}

}  // namespace dessca
