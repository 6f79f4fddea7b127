#include "optomech/covariance.hpp"

#include <Eigen/Eigenvalues>
#include <sstream>

#include "optomech/errors.hpp"
#include "optomech/lyapunov.hpp"

namespace optomech {

CovarianceMatrix solve_lyapunov(const Mat12& a_mat, const Mat12& d_mat) {
  const StabilityReport rep = stability(a_mat);
  if (!rep.stable) {
    std::ostringstream os;
    os << "solve_lyapunov: drift matrix is unstable, max eigenvalue real part "
       << rep.max_real_part << " rad/s";
    throw UnstableSystem(os.str(), rep.max_real_part);
  }

  CovarianceMatrix cm;
  cm.v = lyapunov_solve(a_mat, d_mat);
  cm.v = 0.5 * (cm.v + cm.v.transpose()).eval();  // scrub roundoff asymmetry
  cm.residual = (a_mat * cm.v + cm.v * a_mat.transpose() + d_mat).norm();
  return cm;
}

TwoModeCM reduce_two_mode(const CovarianceMatrix& cm, Subsystem subsystem) {
  const int offset = (subsystem == Subsystem::mirrors) ? kQ1 : kX1;
  TwoModeCM out;
  out.subsystem = subsystem;
  out.v4 = cm.v.block<4, 4>(offset, offset);
  return out;
}

double bosonic_physicality(const CovarianceMatrix& cm) {
  using CMat8 = Eigen::Matrix<std::complex<double>, 8, 8>;
  Mat8 beta = Mat8::Zero();
  for (int m = 0; m < 4; ++m) {
    beta(2 * m, 2 * m + 1) = 1.0;
    beta(2 * m + 1, 2 * m) = -1.0;
  }
  const Mat8 v8 = cm.v.block<8, 8>(0, 0);
  CMat8 h = v8.cast<std::complex<double>>() +
            std::complex<double>(0.0, 0.5) * beta.cast<std::complex<double>>();
  Eigen::SelfAdjointEigenSolver<CMat8> solver(h);
  if (solver.info() != Eigen::Success) {
    throw EigenSolverFailure("bosonic_physicality: eigenvalue iteration failed");
  }
  return solver.eigenvalues().minCoeff();
}

}  // namespace optomech
