#include "dessca/cartpole.hpp"

#include <cmath>
#include <stdexcept>

namespace dessca {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kDt = 0.02;

double wrap_angle(double eps) {
  // remainder() rounds to nearest, so the result lands in [-pi, pi].
  return std::remainder(eps, 2.0 * kPi);
}

}  // namespace

CartPole::CartPole()
    : bounds_({-1.0, -7.0, -kPi, -10.0}, {1.0, 7.0, kPi, 10.0}),
      state_({0.0, 0.0, 0.0, 0.0}) {
  actions_.type = ActionSpace::Type::finite;
  actions_.actions = {{-1.0}, {1.0}};
}

bool CartPole::feasible_init(const Vec& physical) const {
  if (!bounds_.contains(physical)) return false;
  const double p = physical[0];
  const double v = physical[1];
  const double omega = physical[3];
  if (omega < -1.0 || omega > 1.0) return false;
  // The cart must be slow enough that full braking force can stop it before
  // the wall it is heading toward.
  if (v > 0.0 && v >= std::sqrt(7.5 * (1.0 - p))) return false;
  if (v < 0.0 && v <= -std::sqrt(7.5 * (1.0 + p))) return false;
  return true;
}

void CartPole::reset_to(const Vec& physical) {
  if (!feasible_init(physical)) {
    throw std::invalid_argument("CartPole::reset_to: state outside the initialization set");
  }
  state_ = physical;
}

Transition CartPole::step(const Vec& action) {
  if (action.size() != 1 || (action[0] != -1.0 && action[0] != 1.0)) {
    throw std::invalid_argument("CartPole::step: action must be -1 or +1");
  }
  const double u = action[0];

  const double p = state_[0];
  const double v = state_[1];
  const double eps = state_[2];
  const double omega = state_[3];

  const double sin_eps = std::sin(eps);
  const double cos_eps = std::cos(eps);
  const double b = (10.0 * u + omega * omega * sin_eps) / 22.0;
  const double alpha = (10.0 * sin_eps - b * cos_eps) / (2.0 / 3.0 - cos_eps * cos_eps / 22.0);
  const double a = b - alpha * cos_eps / 22.0;

  const double p_next = p + kDt * v;
  const double v_next = v + kDt * a;
  const double eps_next = wrap_angle(eps + kDt * omega);
  const double omega_next = omega + kDt * alpha;

  state_ = {p_next, v_next, eps_next, omega_next};
  const bool violated = !bounds_.contains(state_);
  // In-bounds reward grades the pre-update pole angle against upright.
  const double reward = violated ? -1.0 : 1.0 - std::abs(eps) / kPi;
  return Transition{state_, reward, violated};
}

}  // namespace dessca
