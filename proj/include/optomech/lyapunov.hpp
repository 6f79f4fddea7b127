#pragma once

#include <Eigen/Dense>
#include <vector>

#include "optomech/errors.hpp"

namespace optomech {

// Solves the continuous Lyapunov equation  A X + X A^T = -Q  (Q symmetric)
// by real Bartels-Stewart: Schur-reduce A, back-substitute over the
// quasi-triangular diagonal blocks, transform back. Throws SingularLyapunov
// when an eigenvalue pair of A sums to zero, EigenSolverFailure when the
// Schur iteration does not converge.
template <typename DerivedA, typename DerivedQ>
typename DerivedA::PlainObject lyapunov_solve(const Eigen::MatrixBase<DerivedA>& a,
                                              const Eigen::MatrixBase<DerivedQ>& q) {
  using Matrix = typename DerivedA::PlainObject;
  const Eigen::Index n = a.rows();

  Eigen::RealSchur<Matrix> schur(a);
  if (schur.info() != Eigen::Success) {
    throw EigenSolverFailure("lyapunov_solve: real Schur decomposition failed");
  }
  const Matrix& t = schur.matrixT();
  const Matrix& u = schur.matrixU();

  // Diagonal block boundaries of the quasi-triangular T.
  std::vector<Eigen::Index> start, size;
  for (Eigen::Index i = 0; i < n;) {
    const Eigen::Index bs = (i + 1 < n && t(i + 1, i) != 0.0) ? 2 : 1;
    start.push_back(i);
    size.push_back(bs);
    i += bs;
  }
  const Eigen::Index nb = static_cast<Eigen::Index>(start.size());

  Matrix c = -(u.transpose() * q * u);
  Matrix y = Matrix::Zero(n, n);

  const double scale = t.cwiseAbs().maxCoeff();
  for (Eigen::Index kb = nb - 1; kb >= 0; --kb) {
    const Eigen::Index k0 = start[kb], ks = size[kb];
    for (Eigen::Index lb = nb - 1; lb >= 0; --lb) {
      const Eigen::Index l0 = start[lb], ls = size[lb];
      Eigen::MatrixXd rhs = c.block(k0, l0, ks, ls);
      if (k0 + ks < n) {
        rhs.noalias() -= t.block(k0, k0 + ks, ks, n - k0 - ks) *
                         y.block(k0 + ks, l0, n - k0 - ks, ls);
      }
      if (l0 + ls < n) {
        rhs.noalias() -= y.block(k0, l0 + ls, ks, n - l0 - ls) *
                         t.block(l0, l0 + ls, ls, n - l0 - ls).transpose();
      }
      // Small Sylvester system (I (x) T_kk + T_ll (x) I) vec(Y_kl) = vec(rhs).
      const Eigen::Index m = ks * ls;
      Eigen::MatrixXd sys = Eigen::MatrixXd::Zero(m, m);
      for (Eigen::Index j = 0; j < ls; ++j) {
        sys.block(j * ks, j * ks, ks, ks) = t.block(k0, k0, ks, ks);
        for (Eigen::Index j2 = 0; j2 < ls; ++j2) {
          for (Eigen::Index i = 0; i < ks; ++i) {
            sys(j * ks + i, j2 * ks + i) += t(l0 + j, l0 + j2);
          }
        }
      }
      Eigen::FullPivLU<Eigen::MatrixXd> lu(sys);
      lu.setThreshold(1e-13);
      if (!lu.isInvertible()) {
        throw SingularLyapunov(
            "lyapunov_solve: eigenvalue pair of A sums to zero (singular operator)");
      }
      const Eigen::VectorXd sol =
          lu.solve(Eigen::Map<const Eigen::VectorXd>(rhs.data(), m));
      y.block(k0, l0, ks, ls) =
          Eigen::Map<const Eigen::MatrixXd>(sol.data(), ks, ls);
      (void)scale;
    }
  }

  Matrix x = u * y * u.transpose();
  return x;
}

}  // namespace optomech
