#pragma once

#include <optional>
#include <vector>

#include "optomech/dynamics.hpp"
#include "optomech/types.hpp"

namespace optomech {

// Output transfer matrix T(w) = C (-i w I - A)^{-1} G - E, mapping the six
// noise inputs onto the output fluctuation vector. C places sqrt(2 kappa_j)
// on the four field quadrature rows; E routes the four field input columns
// to the same rows with unit weight. Throws SingularResolvent.
CMat12x6 output_transfer(const LinearModel& model, double omega);

// Symmetrized output spectral density, bosonic (mirror + field) block:
// rows 0-3 are zero for the output map, the field block lives in rows 4-7.
Mat8 output_correlation(const LinearModel& model, double omega);

// Intracavity spectral density sym Re[(R G) P (R G)^H], R = (-i w I - A)^{-1};
// (1/2pi) Integral over w reproduces the stationary Lyapunov covariance.
Mat12 intracavity_correlation(const LinearModel& model, double omega);

// S_OUT(w) = Var_out(X1 - X2) + Var_out(Y1 + Y2) at analysis frequency w.
double squeezing_at(const LinearModel& model, double omega);

struct SpectrumSeries {
  std::vector<double> omega_grid;  // rad/s, detuning from the cavity frequency
  std::vector<double> s_out;
  std::optional<std::vector<Mat8>> v_out;  // per-w output correlation blocks
};

// Evaluates S_OUT over the grid; per-w evaluations are independent and are
// computed in parallel, results assembled in grid order.
SpectrumSeries squeezing_spectrum(const LinearModel& model,
                                  const std::vector<double>& omega_grid,
                                  bool keep_v_out = false);

// Uniform symmetric grid helper: n points spanning [-omega_max, +omega_max].
std::vector<double> symmetric_grid(double omega_max, int n);

}  // namespace optomech
