#pragma once

#include <utility>

#include "optomech/covariance.hpp"
#include "optomech/types.hpp"

namespace optomech {

// All criteria below are tied to the vacuum-variance-1/2 quadrature
// normalization X = (a + a^dag)/sqrt(2), Y = (a - a^dag)/(i sqrt(2));
// hence the Duan boundary at 2 and the symplectic boundary at 1/2.

// Duan sum of the EPR-like combinations:
//   mirrors: X = q1 + q2, Y = p1 - p2
//   fields:  X = q1 - q2, Y = p1 + p2
// total = Var(X) + Var(Y); total < 2 certifies entanglement.
struct DuanResult {
  double total = 0.0;
  bool entangled = false;
};

DuanResult duan_sum(const TwoModeCM& cm);

// Partial transposition of mode 2: sign flip of the p2 row and column.
Mat4 partial_transpose(const Mat4& v4);

// Symplectic eigenvalues: square roots of the (twofold degenerate) ordinary
// eigenvalues of -(beta V)^2, beta = diag(J, J), J = [[0,1],[-1,0]].
// Returns (nu_min, nu_max). Throws DomainError on a non-physical input
// (negative eigenvalue of -(beta V)^2 beyond tolerance).
std::pair<double, double> symplectic_eigenvalues(const Mat4& v4);

// Simon / PPT criterion: nu_min of the partially transposed CM below 1/2
// certifies entanglement (necessary and sufficient for two-mode Gaussian
// states).
struct SimonResult {
  double nu_min = 0.0;
  double nu_max = 0.0;
  bool entangled = false;
};

SimonResult simon_criterion(const TwoModeCM& cm);

// Convenience measure beyond the two criteria: E_N = max(0, -ln(2 nu_min)).
double logarithmic_negativity(double nu_min);

}  // namespace optomech
