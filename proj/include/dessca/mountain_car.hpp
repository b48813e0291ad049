#pragma once

#include "dessca/environment.hpp"

namespace dessca {

// Underpowered car in a valley: state (position, velocity) on
// [-1.2, 0.6] x [-0.07, 0.07], continuous drive force u in [-1,1].
//
//   v' = v + 1.5e-3 u - 2.5e-3 cos(3p)   (v' = 0 on wall contact)
//   p' = p + v'
//
// Hitting the left wall with negative velocity stops the car. Reward is 100
// once the goal p > 0.45 is reached and -u^2/10 otherwise; reaching the goal
// terminates the episode. The whole box is a permitted initial state.
class MountainCar final : public Environment {
 public:
  MountainCar();

  std::string_view name() const override { return "mountain_car"; }
  const BoxBounds& bounds() const override { return bounds_; }
  const ActionSpace& action_space() const override { return actions_; }

  bool feasible_init(const Vec& physical) const override;
  void reset_to(const Vec& physical) override;
  const Vec& state() const override { return state_; }
  Transition step(const Vec& action) override;

  double max_reward() const override { return 100.0; }
  std::vector<std::string> state_labels() const override { return {"p", "v"}; }
  std::vector<std::string> action_labels() const override { return {"u"}; }

  static constexpr double kGoalPosition = 0.45;

 private:
  BoxBounds bounds_;
  ActionSpace actions_;
  Vec state_;
  bool warned_action_range_ = false;
};

}  // namespace dessca
