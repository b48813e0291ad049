#include "dessca/mountain_car.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <stdexcept>

namespace dessca {

MountainCar::MountainCar()
    : bounds_({-1.2, -0.07}, {0.6, 0.07}), state_({-0.5, 0.0}) {
  actions_.type = ActionSpace::Type::box;
  actions_.lower = {-1.0};
  actions_.upper = {1.0};
}

bool MountainCar::feasible_init(const Vec& physical) const {
  return bounds_.contains(physical);
}

void MountainCar::reset_to(const Vec& physical) {
  if (!feasible_init(physical)) {
    throw std::invalid_argument("MountainCar::reset_to: state outside the initialization set");
  }
  state_ = physical;
}

Transition MountainCar::step(const Vec& action) {
  if (action.size() != 1) throw std::invalid_argument("MountainCar::step: action must be scalar");
  double u = action[0];
  if (u < -1.0 || u > 1.0) {
    if (!warned_action_range_) {
      std::cerr << "mountain_car: action outside [-1,1], clamping\n";
      warned_action_range_ = true;
    }
    u = std::clamp(u, -1.0, 1.0);
  }

  const double p = state_[0];
  const double v = state_[1];

  // Reward and termination are functions of the state the action was taken
  // in; the goal branch pays out on the step after crossing.
  const bool at_goal = p > kGoalPosition;
  const double reward = at_goal ? 100.0 : -0.1 * u * u;

  // Wall contact check uses <= because positions are clamped onto the bound.
  double v_next;
  if (p <= bounds_.lower()[0] && v < 0.0) {
    v_next = 0.0;
  } else {
    v_next = v + 1.5e-3 * u - 2.5e-3 * std::cos(3.0 * p);
  }
  v_next = std::clamp(v_next, bounds_.lower()[1], bounds_.upper()[1]);
  const double p_next = std::clamp(p + v_next, bounds_.lower()[0], bounds_.upper()[0]);

  state_ = {p_next, v_next};
  return Transition{state_, reward, at_goal};
}

}  // namespace dessca
