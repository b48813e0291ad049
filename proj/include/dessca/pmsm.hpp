#pragma once

#include "dessca/environment.hpp"

namespace dessca {

// Drive-system constants (SI units).
struct PmsmParams {
  int pole_pairs = 3;
  double r_s = 17.932e-3;      // stator resistance [Ohm]
  double l_d = 0.37e-3;        // d inductance [H]
  double l_q = 1.2e-3;         // q inductance [H]
  double psi_p = 65.65e-3;     // permanent magnet flux [Vs]
  double i_n = 230.0;          // nominal current [A]
  double i_lim = 270.0;        // maximum current [A]
  double u_dc = 350.0;         // DC-link voltage [V]
  double omega_lim = 1256.64;  // maximum angular velocity [1/s]
  double tau = 100e-6;         // sampling time [s]
};

// Permanent magnet synchronous motor current control in dq coordinates.
// State (i_d, i_q, omega_me, eps_el, i_d_ref, i_q_ref); the speed and the
// current references are exogenous and held constant by the dynamics.
// Actions are duty cycles (u_d, u_q) restricted so that the three phase
// voltages stay within the inverter limits at the current rotor angle.
// One step integrates the stator ODEs over one sampling period with
// fixed-step RK4 and advances eps_el by pole_pairs*omega_me*tau.
//
// The reward pays (1-gamma)/2 * (2 - e_d - e_q) for reference tracking,
// switches to a linear overcurrent penalty once the current magnitude
// exceeds the nominal current, and drops to -1 with termination when the
// next state leaves the admissible set (current magnitude at the limit).
class Pmsm final : public Environment {
 public:
  explicit Pmsm(double gamma = 0.99, PmsmParams params = PmsmParams{});

  std::string_view name() const override { return "pmsm"; }
  const BoxBounds& bounds() const override { return bounds_; }
  const ActionSpace& action_space() const override { return actions_; }

  bool feasible_init(const Vec& physical) const override;
  void reset_to(const Vec& physical) override;
  const Vec& state() const override { return state_; }
  Transition step(const Vec& action) override;

  double max_reward() const override { return 1.0 - gamma_; }
  std::vector<std::string> state_labels() const override {
    return {"i_d", "i_q", "omega_me", "eps_el", "i_d_ref", "i_q_ref"};
  }
  std::vector<std::string> action_labels() const override { return {"u_d", "u_q"}; }

  const PmsmParams& params() const { return params_; }
  double gamma() const { return gamma_; }

  // True when all three phase duty cycles implied by (u_d, u_q) at rotor
  // angle eps_el lie in [-1, 1]. Any action with |u|_2 <= 1 passes at every
  // angle.
  static bool duty_feasible(const Vec& action, double eps_el, double tol = 1e-12);

  // Swap in a new operating point (speed and current references) without
  // touching the currents or the rotor angle. Used to chain piecewise
  // constant operating conditions into one long validation run.
  void apply_operating_point(double omega_me, double i_d_ref, double i_q_ref);

 private:
  bool in_admissible_set(const Vec& physical) const;

  PmsmParams params_;
  double gamma_;
  BoxBounds bounds_;
  ActionSpace actions_;
  Vec state_;
  int substeps_ = 10;
};

}  // namespace dessca
