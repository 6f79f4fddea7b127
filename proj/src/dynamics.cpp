#include "optomech/dynamics.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

#include "optomech/errors.hpp"

namespace optomech {

Mat12 build_drift_matrix(const SystemParams& p, const SteadyState& st) {
  const std::array<double, 2> chi = {radiation_pressure_coupling(p, 0),
                                     radiation_pressure_coupling(p, 1)};
  const double ra = p.inject_rate;
  const auto& r = p.rho0;

  Mat12 a = Mat12::Zero();

  // Mechanical blocks.
  a(kQ1, kP1) = p.omega_m[0];
  a(kP1, kQ1) = -p.omega_m[0];
  a(kP1, kP1) = -p.gamma_m[0];
  a(kP1, kX1) = -chi[0] * st.x_s[0];
  a(kP1, kY1) = -chi[0] * st.y_s[0];
  a(kQ2, kP2) = p.omega_m[1];
  a(kP2, kQ2) = -p.omega_m[1];
  a(kP2, kP2) = -p.gamma_m[1];
  a(kP2, kX2) = -chi[1] * st.x_s[1];
  a(kP2, kY2) = -chi[1] * st.y_s[1];

  // Field quadratures, coupled to mirror displacement and atomic coherences.
  a(kX1, kQ1) = chi[0] * st.y_s[0];
  a(kX1, kX1) = -p.kappa[0];
  a(kX1, kY1) = st.delta_eff[0];
  a(kX1, kU2) = p.g[0];
  a(kY1, kQ1) = -chi[0] * st.x_s[0];
  a(kY1, kX1) = -st.delta_eff[0];
  a(kY1, kY1) = -p.kappa[0];
  a(kY1, kU1) = -p.g[0];
  a(kX2, kQ2) = chi[1] * st.y_s[1];
  a(kX2, kX2) = -p.kappa[1];
  a(kX2, kY2) = st.delta_eff[1];
  a(kX2, kV2) = p.g[1];
  a(kY2, kQ2) = -chi[1] * st.x_s[1];
  a(kY2, kX2) = -st.delta_eff[1];
  a(kY2, kY2) = -p.kappa[1];
  a(kY2, kV1) = -p.g[1];

  // Atomic coherence quadratures (sigma_ba -> U, sigma_cb -> V).
  a(kU1, kY1) = -p.g[0] * ra * r.rho_aa;
  a(kU1, kY2) = p.g[1] * ra * r.rho_ca;
  a(kU1, kU1) = -p.gamma_atom;
  a(kU1, kU2) = p.delta[0];
  a(kU2, kX1) = p.g[0] * ra * r.rho_aa;
  a(kU2, kX2) = p.g[1] * ra * r.rho_ca;
  a(kU2, kU1) = -p.delta[0];
  a(kU2, kU2) = -p.gamma_atom;
  a(kV1, kY1) = -p.g[0] * ra * r.rho_ca;
  a(kV1, kY2) = p.g[1] * ra * r.rho_cc;
  a(kV1, kV1) = -p.gamma_atom;
  a(kV1, kV2) = p.delta[1];
  a(kV2, kX1) = -p.g[0] * ra * r.rho_ca;
  a(kV2, kX2) = -p.g[1] * ra * r.rho_cc;
  a(kV2, kV1) = -p.delta[1];
  a(kV2, kV2) = -p.gamma_atom;

  return a;
}

void build_diffusion(const SystemParams& p, Mat12& d_mat, Mat12x6& g_mat, Mat6& p_noise) {
  g_mat = Mat12x6::Zero();
  g_mat(kP1, kXi1) = 1.0;
  g_mat(kP2, kXi2) = 1.0;
  g_mat(kX1, kX1in) = std::sqrt(2.0 * p.kappa[0]);
  g_mat(kY1, kY1in) = std::sqrt(2.0 * p.kappa[0]);
  g_mat(kX2, kX2in) = std::sqrt(2.0 * p.kappa[1]);
  g_mat(kY2, kY2in) = std::sqrt(2.0 * p.kappa[1]);

  p_noise = Mat6::Zero();
  p_noise(kXi1, kXi1) = p.gamma_m[0] * (2.0 * p.n_mech[0] + 1.0);
  p_noise(kXi2, kXi2) = p.gamma_m[1] * (2.0 * p.n_mech[1] + 1.0);
  const double field_sd = (2.0 * p.n_field + 1.0) / 2.0;
  p_noise(kX1in, kX1in) = field_sd;
  p_noise(kY1in, kY1in) = field_sd;
  p_noise(kX2in, kX2in) = field_sd;
  p_noise(kY2in, kY2in) = field_sd;

  d_mat = g_mat * p_noise * g_mat.transpose();
}

LinearModel build_linear_model(const SystemParams& p, const SteadyState& st) {
  LinearModel m;
  m.a_mat = build_drift_matrix(p, st);
  build_diffusion(p, m.d_mat, m.g_mat, m.p_noise);
  return m;
}

StabilityReport stability(const Mat12& a_mat) {
  Eigen::EigenSolver<Mat12> solver(a_mat, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) {
    throw EigenSolverFailure("stability: eigenvalue iteration failed");
  }
  StabilityReport rep;
  rep.eigenvalues = solver.eigenvalues();
  rep.max_real_part = rep.eigenvalues.real().maxCoeff();
  rep.stable = rep.max_real_part < 0.0;
  return rep;
}

}  // namespace optomech
