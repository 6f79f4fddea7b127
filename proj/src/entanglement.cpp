#include "optomech/entanglement.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <sstream>

#include "optomech/errors.hpp"

namespace optomech {

DuanResult duan_sum(const TwoModeCM& cm) {
  const Mat4& v = cm.v4;
  // mirrors: X = q1 + q2, Y = p1 - p2; fields: X = q1 - q2, Y = p1 + p2.
  const double sx = (cm.subsystem == Subsystem::mirrors) ? +1.0 : -1.0;
  const double sy = -sx;
  DuanResult r;
  const double var_x = v(0, 0) + v(2, 2) + 2.0 * sx * v(0, 2);
  const double var_y = v(1, 1) + v(3, 3) + 2.0 * sy * v(1, 3);
  r.total = var_x + var_y;
  r.entangled = r.total < 2.0;
  return r;
}

Mat4 partial_transpose(const Mat4& v4) {
  Mat4 out = v4;
  out.row(3) *= -1.0;
  out.col(3) *= -1.0;
  return out;
}

std::pair<double, double> symplectic_eigenvalues(const Mat4& v4) {
  Mat4 beta = Mat4::Zero();
  beta(0, 1) = 1.0;
  beta(1, 0) = -1.0;
  beta(2, 3) = 1.0;
  beta(3, 2) = -1.0;

  const Mat4 bv = beta * v4;
  const Mat4 m = -(bv * bv);
  Eigen::EigenSolver<Mat4> solver(m, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) {
    throw EigenSolverFailure("symplectic_eigenvalues: eigenvalue iteration failed");
  }

  std::array<double, 4> ev;
  const double scale = std::max(m.cwiseAbs().maxCoeff(), 1.0);
  for (int i = 0; i < 4; ++i) {
    const std::complex<double> lam = solver.eigenvalues()(i);
    if (lam.real() < -1e-10 * scale) {
      std::ostringstream os;
      os << "symplectic_eigenvalues: -(beta V)^2 has negative eigenvalue "
         << lam.real() << ", input is not a physical covariance matrix";
      throw DomainError(os.str());
    }
    ev[i] = std::sqrt(std::max(lam.real(), 0.0));
  }
  std::sort(ev.begin(), ev.end());
  // Eigenvalues come in degenerate pairs {nu^2, nu^2}; return the two roots.
  return {ev[0], ev[3]};
}

SimonResult simon_criterion(const TwoModeCM& cm) {
  const auto [nu_min, nu_max] = symplectic_eigenvalues(partial_transpose(cm.v4));
  SimonResult r;
  r.nu_min = nu_min;
  r.nu_max = nu_max;
  r.entangled = nu_min < 0.5;
  return r;
}

double logarithmic_negativity(double nu_min) {
  if (nu_min <= 0.0) return 0.0;
  return std::max(0.0, -std::log(2.0 * nu_min));
}

}  // namespace optomech
