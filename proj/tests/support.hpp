#pragma once

// Shared fixtures for the test suites: canonical configs, random stable
// systems, and standard covariance matrices with known entanglement.

#include <cmath>
#include <random>
#include <string>

#include "optomech/config.hpp"
#include "optomech/constants.hpp"
#include "optomech/covariance.hpp"
#include "optomech/dynamics.hpp"
#include "optomech/steady_state.hpp"
#include "optomech/types.hpp"

namespace optomech::testing {

// Stable operating point used by the shipped figure configs.
inline std::string base_config_json() {
  return R"({
    "cavity_length_m": 5e-3,
    "mirror_mass_kg": 2e-11,
    "wavelength_m": 8.1e-7,
    "omega_m_hz": 1e7,
    "quality_factor": 6700,
    "kappa_hz": 2.15e5,
    "g_hz": 2.0e5,
    "gamma_atom_hz": 206901.42601946395,
    "delta_atom_hz": 477464.829275686,
    "delta_cav_ratio": 0.9,
    "drive_power_w": 1e-2,
    "inject_rate": 400.0,
    "rho0": {"rho_aa": 0.5, "rho_cc": 0.5, "rho_ca": 0.5},
    "temperature_k": 4.2e-5
  })";
}

inline Config base_config() { return parse_config(base_config_json()); }

struct Pipeline {
  SystemParams params;
  SteadyState steady;
  LinearModel model;
};

inline Pipeline run_pipeline(const Config& cfg) {
  Pipeline p;
  p.params = build_params(cfg);
  p.steady = solve_steady_state(p.params);
  p.model = build_linear_model(p.params, p.steady);
  return p;
}

// Decoupled empty cavity: no drive, no atoms, vacuum baths.
inline Config empty_cavity_config() {
  Config c = base_config();
  c.g_hz = {0.0, 0.0};
  c.drive_amp_hz = {0.0, 0.0};
  c.n_field = 0.0;
  c.n_mech = {0.0, 0.0};
  return c;
}

// Random configuration drawn around the operating point; not all draws are
// stable, callers filter via stability().
template <typename Rng>
Config random_config_near_operating_point(Rng& rng) {
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  Config c = base_config();
  const double g = 1.2e5 + 1.0e5 * uni(rng);
  c.g_hz = {g, g};
  const double ratio = 0.75 + 0.25 * uni(rng);
  c.delta_cav_hz = {ratio * c.omega_m_hz[0], ratio * c.omega_m_hz[1]};
  c.inject_rate = 200.0 + 300.0 * uni(rng);
  const double delta = (2.4e6 + 1.2e6 * uni(rng)) / k_two_pi;
  c.delta_atom_hz = {delta, delta};
  const double kap = 2.15e5 * (0.8 + 0.4 * uni(rng));
  c.kappa_hz = {kap, kap};
  const double rho_aa = 0.25 + 0.35 * uni(rng);
  const double rho_cc = 1.0 - rho_aa;
  c.rho0 = {rho_aa, rho_cc, 0.95 * std::sqrt(rho_aa * rho_cc)};
  const double amp = c.drive_amp_hz[0] * (0.6 + 0.6 * uni(rng));
  c.drive_amp_hz = {amp, amp};
  return c;
}

// Random Hurwitz-stable matrix: shift a random matrix left of the axis.
template <typename Rng>
Eigen::MatrixXd random_stable_matrix(Rng& rng, int n, double margin = 0.1) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXd m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = gauss(rng);
  const Eigen::VectorXcd eigs = m.eigenvalues();
  const double shift = eigs.real().maxCoeff() + margin;
  m.diagonal().array() -= shift;
  return m;
}

template <typename Rng>
Eigen::MatrixXd random_psd_matrix(Rng& rng, int n) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXd b(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) b(i, j) = gauss(rng);
  return b * b.transpose();
}

// Two-mode squeezed vacuum CM in the vacuum-1/2 convention.
inline Mat4 two_mode_squeezed_vacuum(double r) {
  const double ch = 0.5 * std::cosh(2.0 * r);
  const double sh = 0.5 * std::sinh(2.0 * r);
  Mat4 v = Mat4::Zero();
  v(0, 0) = v(1, 1) = v(2, 2) = v(3, 3) = ch;
  v(0, 2) = v(2, 0) = sh;
  v(1, 3) = v(3, 1) = -sh;
  return v;
}

// Random physical CM: 1/2 I + W W^T dominates the vacuum floor.
template <typename Rng>
Mat4 random_physical_cm(Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 0.4);
  Mat4 w;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) w(i, j) = gauss(rng);
  return 0.5 * Mat4::Identity() + w * w.transpose();
}

}  // namespace optomech::testing
