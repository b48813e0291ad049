#include "dessca/policies.hpp"

#include <random>
#include <stdexcept>

#include "dessca/pmsm.hpp"

namespace dessca {

namespace {

class RandomPolicy final : public Policy {
 public:
  RandomPolicy(ActionSpace space, bool duty_constrained, uint64_t seed)
      : space_(std::move(space)), duty_constrained_(duty_constrained), rng_(seed) {}

  std::string_view name() const override { return "random"; }

  Vec act(const Vec& physical_state) override {
    if (space_.type == ActionSpace::Type::finite) {
      std::uniform_int_distribution<size_t> pick(0, space_.actions.size() - 1);
      return space_.actions[pick(rng_)];
    }
    const int d = space_.dim();
    Vec action(d);
    for (int attempt = 0; attempt < 100; ++attempt) {
      for (int i = 0; i < d; ++i) {
        std::uniform_real_distribution<double> dist(space_.lower[i], space_.upper[i]);
        action[i] = dist(rng_);
      }
      if (!duty_constrained_ || Pmsm::duty_feasible(action, physical_state[3])) {
        return action;
      }
    }
    throw std::runtime_error("random policy: action space sampling starved");
  }

 private:
  ActionSpace space_;
  bool duty_constrained_;
  std::mt19937_64 rng_;
};

class McBangBangPolicy final : public Policy {
 public:
  std::string_view name() const override { return "mc_bangbang"; }
  Vec act(const Vec& physical_state) override {
    return {physical_state[1] >= 0.0 ? 1.0 : -1.0};
  }
};

class CpBalancePolicy final : public Policy {
 public:
  CpBalancePolicy(double k_eps, double k_omega) : k_eps_(k_eps), k_omega_(k_omega) {}
  std::string_view name() const override { return "cp_balance"; }
  Vec act(const Vec& physical_state) override {
    const double s = k_eps_ * physical_state[2] + k_omega_ * physical_state[3];
    return {s >= 0.0 ? 1.0 : -1.0};
  }

 private:
  double k_eps_, k_omega_;
};

}  // namespace

std::unique_ptr<Policy> make_random_policy(const Environment& env, uint64_t seed) {
  const bool duty = dynamic_cast<const Pmsm*>(&env) != nullptr;
  return std::make_unique<RandomPolicy>(env.action_space(), duty, seed);
}

std::unique_ptr<Policy> make_mc_bangbang_policy() {
  return std::make_unique<McBangBangPolicy>();
}

std::unique_ptr<Policy> make_cp_balance_policy(double k_eps, double k_omega) {
  return std::make_unique<CpBalancePolicy>(k_eps, k_omega);
}

std::string_view to_string(PolicyId id) {
  switch (id) {
    case PolicyId::random: return "random";
    case PolicyId::mc_bangbang: return "mc_bangbang";
    case PolicyId::cp_balance: return "cp_balance";
  }
  throw std::invalid_argument("unknown policy id");
}

PolicyId policy_from_string(std::string_view name) {
  if (name == "random") return PolicyId::random;
  if (name == "mc_bangbang") return PolicyId::mc_bangbang;
  if (name == "cp_balance") return PolicyId::cp_balance;
  throw std::invalid_argument("unknown policy: " + std::string(name) +
                              " (expected random, mc_bangbang or cp_balance)");
}

std::unique_ptr<Policy> make_policy(PolicyId id, const Environment& env, uint64_t seed) {
  switch (id) {
    case PolicyId::random: return make_random_policy(env, seed);
    case PolicyId::mc_bangbang: return make_mc_bangbang_policy();
    case PolicyId::cp_balance: return make_cp_balance_policy();
  }
  throw std::invalid_argument("unknown policy id");
}

}  // namespace dessca
