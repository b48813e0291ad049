#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "dessca/state_space.hpp"

namespace dessca {

struct Transition {
  Vec next_state;
  double reward = 0.0;
  bool terminated = false;
};

struct ActionSpace {
  enum class Type { box, finite };

  Type type = Type::box;
  Vec lower, upper;               // box spaces
  std::vector<Vec> actions;       // finite spaces

  int dim() const {
    return type == Type::box ? static_cast<int>(lower.size())
                             : static_cast<int>(actions.front().size());
  }
};

// Episodic plant. step() applies an action to the current state, advances the
// internal state and reports the reward and termination flag for that step.
// reset_to() only accepts states in the feasible initialization set.
//
// Instances are independent; use one per worker when running in parallel.
class Environment {
 public:
  virtual ~Environment() = default;

  virtual std::string_view name() const = 0;
  virtual const BoxBounds& bounds() const = 0;
  virtual const ActionSpace& action_space() const = 0;

  int dim() const { return bounds().dim(); }

  virtual bool feasible_init(const Vec& physical) const = 0;
  virtual void reset_to(const Vec& physical) = 0;
  virtual const Vec& state() const = 0;
  virtual Transition step(const Vec& action) = 0;

  // Upper limit of the per-step reward range, the r_max of the normalized
  // return.
  virtual double max_reward() const = 0;

  // State/action component names for logs (CSV headers).
  virtual std::vector<std::string> state_labels() const = 0;
  virtual std::vector<std::string> action_labels() const = 0;
};

enum class EnvId { mountain_car, cartpole, pmsm };

std::string_view to_string(EnvId id);
EnvId env_from_string(std::string_view name);

// gamma only affects the PMSM reward scaling.
std::unique_ptr<Environment> make_environment(EnvId id, double gamma = 0.99);

}  // namespace dessca
