#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "dessca/environment.hpp"

namespace dessca {

// Maps the current physical state to an action valid for the environment the
// policy was built for. Stateless apart from a private RNG stream, so one
// instance per worker is safe.
class Policy {
 public:
  virtual ~Policy() = default;
  virtual std::string_view name() const = 0;
  virtual Vec act(const Vec& physical_state) = 0;
};

// Uniform over the action space. Box spaces sample each component
// independently; finite spaces pick one member. For the PMSM the box sample
// is rejected and redrawn until the inverter duty-cycle constraint holds at
// the state's rotor angle (throws after 100 rejections).
std::unique_ptr<Policy> make_random_policy(const Environment& env, uint64_t seed);

// Mountain car energy pumping: push in the direction of travel, u = sign(v)
// with u = +1 at v = 0.
std::unique_ptr<Policy> make_mc_bangbang_policy();

// Cartpole bang-bang stabilizer: u = +1 when k_eps*eps + k_omega*omega >= 0,
// else -1. Only useful near the upright equilibrium.
std::unique_ptr<Policy> make_cp_balance_policy(double k_eps = 1.0, double k_omega = 0.25);

enum class PolicyId { random, mc_bangbang, cp_balance };

std::string_view to_string(PolicyId id);
PolicyId policy_from_string(std::string_view name);

std::unique_ptr<Policy> make_policy(PolicyId id, const Environment& env, uint64_t seed);

}  // namespace dessca
