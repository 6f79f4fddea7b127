#pragma once

#include "optomech/dynamics.hpp"
#include "optomech/types.hpp"

namespace optomech {

// Stationary symmetrized covariance V_ij = <f_i f_j + f_j f_i> / 2 solving
// A V + V A^T = -D, with the Frobenius residual of the solved equation.
struct CovarianceMatrix {
  Mat12 v;
  double residual = 0.0;
};

// Rejects unstable drift matrices before solving; symmetrizes the result.
// Throws UnstableSystem / SingularLyapunov.
CovarianceMatrix solve_lyapunov(const Mat12& a_mat, const Mat12& d_mat);

// 4x4 reduced covariance in (q1, p1, q2, p2) ordering for the chosen pair;
// mirrors -> rows 0-3 of f, fields -> rows 4-7.
struct TwoModeCM {
  Mat4 v4;
  Subsystem subsystem = Subsystem::mirrors;
};

TwoModeCM reduce_two_mode(const CovarianceMatrix& cm, Subsystem subsystem);

// Smallest eigenvalue of the Hermitian matrix V8 + i beta/2 over the bosonic
// (mirror + field) block. Nonnegative for a physical Gaussian state; computed
// for reporting, never asserted.
double bosonic_physicality(const CovarianceMatrix& cm);

}  // namespace optomech
