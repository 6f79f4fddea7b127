#pragma once

#include <array>
#include <complex>

#include "optomech/params.hpp"

namespace optomech {

// Effective two-mode coefficients at fixed effective detunings:
//   u_l  = g1 g2 r_a rho_ca / (gamma + i delta_l)
//   s1a  = kappa1 + i dt1 - g1^2 r_a rho_aa / (gamma + i delta_1)
//   s2c  = kappa2 + i dt2 + g2^2 r_a rho_cc / (gamma + i delta_2)
struct AtomicGainCoefficients {
  std::array<std::complex<double>, 2> u{};
  std::complex<double> s1a;
  std::complex<double> s2c;
};

AtomicGainCoefficients atomic_coefficients(const SystemParams& params,
                                           const std::array<double, 2>& delta_eff);

struct SteadyState {
  std::array<std::complex<double>, 2> a_s{};  // field amplitudes
  std::array<double, 2> q_s{};                // mirror displacements
  std::array<double, 2> p_s{};                // mirror momenta (identically 0)
  std::array<double, 2> delta_eff{};          // delta_cav_j + chi_j q_s_j
  std::array<double, 2> x_s{};                // sqrt(2) Re a_s
  std::array<double, 2> y_s{};                // sqrt(2) Im a_s
  double residual = 0.0;                      // max relative back-substitution residual
  int iterations = 0;
  bool damped = false;                        // oscillation damping was engaged
};

struct SteadySolveOptions {
  double rel_tol = 1e-12;
  double abs_tol = 1e-14;
  int max_iter = 10000;
};

// Damped fixed-point iteration on the radiation-pressure displacements,
// starting from Q = 0 (the branch continuously connected to the undriven
// cavity). Throws NonConvergence / DegenerateDenominator.
SteadyState solve_steady_state(const SystemParams& params,
                               const SteadySolveOptions& opts = {});

// Max relative residual of the coupled steady-state equations at (a1, a2):
//   s1a a1 - u1 conj(a2) = eps1,   s2c a2 + u2 conj(a1) = eps2
// plus the displacement relations. Used by the solver and by tests.
double steady_state_residual(const SystemParams& params, const SteadyState& st);

}  // namespace optomech
