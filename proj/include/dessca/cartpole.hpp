#pragma once

#include "dessca/environment.hpp"

namespace dessca {

// Pole balancing on a cart: state (p, v, eps, omega) on
// [-1,1] x [-7,7] x [-pi,pi] x [-10,10], bang-bang force u in {-1, +1},
// Euler integration with a 0.02 s step. The pole angle wraps to [-pi, pi].
// Reward is 1 - |eps/pi| while the next state stays in the box and -1 with
// termination once it leaves. Initialization is restricted to states from
// which the box constraints still have a chance of being respected:
// omega in [-1,1] and the cart slow enough to brake before either wall.
class CartPole final : public Environment {
 public:
  CartPole();

  std::string_view name() const override { return "cartpole"; }
  const BoxBounds& bounds() const override { return bounds_; }
  const ActionSpace& action_space() const override { return actions_; }

  bool feasible_init(const Vec& physical) const override;
  void reset_to(const Vec& physical) override;
  const Vec& state() const override { return state_; }
  Transition step(const Vec& action) override;

  double max_reward() const override { return 1.0; }
  std::vector<std::string> state_labels() const override { return {"p", "v", "eps", "omega"}; }
  std::vector<std::string> action_labels() const override { return {"u"}; }

 private:
  BoxBounds bounds_;
  ActionSpace actions_;
  Vec state_;
};

}  // namespace dessca
