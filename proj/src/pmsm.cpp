#include "dessca/pmsm.hpp"

#include <cmath>
#include <stdexcept>

namespace dessca {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kOmegaEps = 1e-6;  // below this speed the voltage bounds diverge

double wrap_angle(double eps) {
  return std::remainder(eps, 2.0 * kPi);
}

}  // namespace

Pmsm::Pmsm(double gamma, PmsmParams params)
    : params_(params),
      gamma_(gamma),
      bounds_({-params.i_lim, -params.i_lim, -params.omega_lim, -kPi, -params.i_lim, -params.i_lim},
              {params.i_lim, params.i_lim, params.omega_lim, kPi, params.i_lim, params.i_lim}),
      state_(6, 0.0) {
  if (gamma_ <= 0.0 || gamma_ >= 1.0) {
    throw std::invalid_argument("Pmsm: gamma must lie in (0,1)");
  }
  // Bounding box of the inverter hexagon; duty_feasible() is the exact test.
  const double box = 2.0 / std::sqrt(3.0);
  actions_.type = ActionSpace::Type::box;
  actions_.lower = {-box, -box};
  actions_.upper = {box, box};
}

bool Pmsm::duty_feasible(const Vec& action, double eps_el, double tol) {
  if (action.size() != 2) return false;
  for (int k = 0; k < 3; ++k) {
    const double theta = eps_el - k * 2.0 * kPi / 3.0;
    const double phase = std::cos(theta) * action[0] - std::sin(theta) * action[1];
    if (std::abs(phase) > 1.0 + tol) return false;
  }
  return true;
}

bool Pmsm::in_admissible_set(const Vec& physical) const {
  if (!bounds_.contains(physical)) return false;
  const double i_s = std::sqrt(physical[0] * physical[0] + physical[1] * physical[1]);
  return i_s < params_.i_lim;
}

bool Pmsm::feasible_init(const Vec& physical) const {
  if (!in_admissible_set(physical)) return false;

  const double omega = physical[2];
  const bool voltage_binding = std::abs(omega) >= kOmegaEps;
  const double volt_denom = std::sqrt(3.0) * params_.pole_pairs * std::abs(omega);

  // d-current interval: nominal current cut down by the voltage limit once
  // the speed makes the back-EMF significant.
  double id_lo = -params_.i_n;
  double id_hi = params_.i_n;
  if (voltage_binding) {
    const double r_d = params_.u_dc / (params_.l_d * volt_denom);
    id_lo = std::max(id_lo, -params_.psi_p / params_.l_d - r_d);
    id_hi = std::min(id_hi, -params_.psi_p / params_.l_d + r_d);
  }

  // Both the actual and the reference current pair must be steady-state
  // reachable operating points at this speed.
  const double pairs[2][2] = {{physical[0], physical[1]}, {physical[4], physical[5]}};
  for (const auto& pair : pairs) {
    const double i_d = pair[0];
    const double i_q = pair[1];
    if (i_d < id_lo || i_d > id_hi) return false;

    double q_max = std::sqrt(std::max(params_.i_n * params_.i_n - i_d * i_d, 0.0));
    if (voltage_binding) {
      const double r_q = params_.u_dc / (params_.l_q * volt_denom);
      const double shifted = (params_.l_d / params_.l_q) * (i_d + params_.psi_p / params_.l_d);
      const double arg = r_q * r_q - shifted * shifted;
      q_max = std::min(q_max, std::sqrt(std::max(arg, 0.0)));
    }
    if (i_q < -q_max || i_q > q_max) return false;
  }
  return true;
}

void Pmsm::reset_to(const Vec& physical) {
  if (physical.size() != 6) {
    throw std::invalid_argument("Pmsm::reset_to: state must have 6 components");
  }
  if (!feasible_init(physical)) {
    throw std::invalid_argument("Pmsm::reset_to: state outside the initialization set");
  }
  state_ = physical;
}

void Pmsm::apply_operating_point(double omega_me, double i_d_ref, double i_q_ref) {
  if (std::abs(omega_me) > params_.omega_lim || std::abs(i_d_ref) > params_.i_lim ||
      std::abs(i_q_ref) > params_.i_lim) {
    throw std::invalid_argument("Pmsm::apply_operating_point: value outside the state box");
  }
  state_[2] = omega_me;
  state_[4] = i_d_ref;
  state_[5] = i_q_ref;
}

Transition Pmsm::step(const Vec& action) {
  if (action.size() != 2) throw std::invalid_argument("Pmsm::step: action must be (u_d, u_q)");
  if (!duty_feasible(action, state_[3])) {
    throw std::invalid_argument("Pmsm::step: infeasible duty cycle");
  }

  const double omega = state_[2];
  const double v_d = params_.u_dc * action[0] / (std::sqrt(3.0) * params_.l_d);
  const double v_q = params_.u_dc * action[1] / (std::sqrt(3.0) * params_.l_q);
  const double p_omega = params_.pole_pairs * omega;

  const auto d_id = [&](double id, double iq) {
    return -(params_.r_s / params_.l_d) * id + (p_omega * params_.l_q / params_.l_d) * iq + v_d;
  };
  const auto d_iq = [&](double id, double iq) {
    return -(params_.r_s / params_.l_q) * iq - (p_omega / params_.l_q) * (params_.l_d * id + params_.psi_p) + v_q;
  };

  double id = state_[0];
  double iq = state_[1];
  const double h = params_.tau / substeps_;
  for (int s = 0; s < substeps_; ++s) {
    const double k1d = d_id(id, iq), k1q = d_iq(id, iq);
    const double k2d = d_id(id + 0.5 * h * k1d, iq + 0.5 * h * k1q);
    const double k2q = d_iq(id + 0.5 * h * k1d, iq + 0.5 * h * k1q);
    const double k3d = d_id(id + 0.5 * h * k2d, iq + 0.5 * h * k2q);
    const double k3q = d_iq(id + 0.5 * h * k2d, iq + 0.5 * h * k2q);
    const double k4d = d_id(id + h * k3d, iq + h * k3q);
    const double k4q = d_iq(id + h * k3d, iq + h * k3q);
    id += h / 6.0 * (k1d + 2.0 * k2d + 2.0 * k3d + k4d);
    iq += h / 6.0 * (k1q + 2.0 * k2q + 2.0 * k3q + k4q);
  }

  // Reward grades the state the action was taken in.
  const double i_s_pre = std::sqrt(state_[0] * state_[0] + state_[1] * state_[1]);
  const double scale = 0.5 * (1.0 - gamma_);
  double in_bounds_reward;
  if (i_s_pre > params_.i_n) {
    in_bounds_reward =
        scale * (1.0 - (i_s_pre - params_.i_n) / (params_.i_lim - params_.i_n)) - scale;
  } else {
    const auto track_error = [&](double ref, double cur) {
      const double rel = (ref - cur) / (2.0 * params_.i_lim);
      return 0.5 * (std::sqrt(std::abs(rel)) + rel * rel);
    };
    const double e_d = track_error(state_[4], state_[0]);
    const double e_q = track_error(state_[5], state_[1]);
    in_bounds_reward = scale * (2.0 - e_d - e_q);
  }

  const double eps_next = wrap_angle(state_[3] + p_omega * params_.tau);
  state_ = {id, iq, omega, eps_next, state_[4], state_[5]};
  const bool violated = !in_admissible_set(state_);
  return Transition{state_, violated ? -1.0 : in_bounds_reward, violated};
}

}  // namespace dessca
