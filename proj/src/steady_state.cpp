#include "optomech/steady_state.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <sstream>

#include "optomech/errors.hpp"

namespace optomech {

namespace {
using Cx = std::complex<double>;
constexpr Cx kI{0.0, 1.0};
}  // namespace

AtomicGainCoefficients atomic_coefficients(const SystemParams& p,
                                           const std::array<double, 2>& delta_eff) {
  AtomicGainCoefficients c;
  const double gain = p.g[0] * p.g[1] * p.inject_rate * p.rho0.rho_ca;
  for (int l = 0; l < 2; ++l) {
    c.u[l] = gain / (p.gamma_atom + kI * p.delta[l]);
  }
  c.s1a = p.kappa[0] + kI * delta_eff[0] -
          p.g[0] * p.g[0] * p.inject_rate * p.rho0.rho_aa /
              (p.gamma_atom + kI * p.delta[0]);
  c.s2c = p.kappa[1] + kI * delta_eff[1] +
          p.g[1] * p.g[1] * p.inject_rate * p.rho0.rho_cc /
              (p.gamma_atom + kI * p.delta[1]);
  return c;
}

double steady_state_residual(const SystemParams& p, const SteadyState& st) {
  const auto c = atomic_coefficients(p, st.delta_eff);
  const Cx a1 = st.a_s[0], a2 = st.a_s[1];
  const Cx r1 = c.s1a * a1 - c.u[0] * std::conj(a2) - p.drive_amp[0];
  const Cx r2 = c.s2c * a2 + c.u[1] * std::conj(a1) - p.drive_amp[1];
  const double s1 = std::max({std::abs(c.s1a * a1), std::abs(p.drive_amp[0]), 1e-300});
  const double s2 = std::max({std::abs(c.s2c * a2), std::abs(p.drive_amp[1]), 1e-300});
  double res = std::max(std::abs(r1) / s1, std::abs(r2) / s2);
  for (int j = 0; j < 2; ++j) {
    const double chi = radiation_pressure_coupling(p, j);
    const double q_expected = -chi * std::norm(st.a_s[j]) / p.omega_m[j];
    const double sq = std::max(std::abs(q_expected), 1.0);
    res = std::max(res, std::abs(st.q_s[j] - q_expected) / sq);
  }
  return res;
}

SteadyState solve_steady_state(const SystemParams& p, const SteadySolveOptions& opts) {
  const std::array<double, 2> chi = {radiation_pressure_coupling(p, 0),
                                     radiation_pressure_coupling(p, 1)};
  // Convergence is measured in scaled field amplitudes and displacements.
  const std::array<double, 2> a_scale = {
      std::max(1.0, std::abs(p.drive_amp[0]) / p.kappa[0]),
      std::max(1.0, std::abs(p.drive_amp[1]) / p.kappa[1])};

  std::array<double, 2> q{0.0, 0.0};
  std::array<Cx, 2> a{Cx(0.0), Cx(0.0)};
  std::array<double, 2> prev_dq{0.0, 0.0};
  std::array<double, 2> damp{1.0, 1.0};
  bool damped = false;

  SteadyState st;
  for (int it = 1; it <= opts.max_iter; ++it) {
    const std::array<double, 2> dt = {p.delta_cav[0] + chi[0] * q[0],
                                      p.delta_cav[1] + chi[1] * q[1]};
    const auto c = atomic_coefficients(p, dt);
    const Cx den = c.u[0] * std::conj(c.u[1]) + c.s1a * std::conj(c.s2c);
    if (std::abs(den) < 1e-300) {
      throw DegenerateDenominator("solve_steady_state: |u1 u2* + s1a s2c*| underflows");
    }
    const Cx a1 = (std::conj(c.s2c) * p.drive_amp[0] + std::conj(p.drive_amp[1]) * c.u[0]) / den;
    const Cx a2 = (std::conj(c.s1a) * p.drive_amp[1] - std::conj(p.drive_amp[0]) * c.u[1]) /
                  std::conj(den);

    std::array<double, 2> q_new;
    double change = 0.0;
    for (int j = 0; j < 2; ++j) {
      const Cx an = (j == 0) ? a1 : a2;
      const double q_fix = -chi[j] * std::norm(an) / p.omega_m[j];
      const double dq = q_fix - q[j];
      if (dq * prev_dq[j] < 0.0) {
        damp[j] = 0.5;  // sign-alternating updates: Kerr feedback limit cycle
        damped = true;
      }
      q_new[j] = q[j] + damp[j] * dq;
      prev_dq[j] = dq;

      const double da = std::abs(an - a[j]) / a_scale[j];
      const double dqs = std::abs(q_new[j] - q[j]) /
                         std::max(1.0, std::abs(q_new[j]));
      change = std::max({change, da, dqs});
      a[j] = an;
    }
    q = q_new;

    if (change < opts.rel_tol ||
        (std::abs(a[0]) < 1.0 && std::abs(a[1]) < 1.0 && change < opts.abs_tol)) {
      st.a_s = a;
      st.q_s = q;
      st.p_s = {0.0, 0.0};
      for (int j = 0; j < 2; ++j) {
        st.delta_eff[j] = p.delta_cav[j] + chi[j] * q[j];
        st.x_s[j] = std::sqrt(2.0) * a[j].real();
        st.y_s[j] = std::sqrt(2.0) * a[j].imag();
      }
      st.iterations = it;
      st.damped = damped;
      st.residual = steady_state_residual(p, st);
      return st;
    }
  }

  st.a_s = a;
  st.q_s = q;
  for (int j = 0; j < 2; ++j) st.delta_eff[j] = p.delta_cav[j] + chi[j] * q[j];
  const double last = steady_state_residual(p, st);
  std::ostringstream os;
  os << "solve_steady_state: no convergence after " << opts.max_iter
     << " iterations, last residual " << last;
  throw NonConvergence(os.str(), last);
}

}  // namespace optomech
