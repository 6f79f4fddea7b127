#pragma once

#include "optomech/params.hpp"
#include "optomech/steady_state.hpp"
#include "optomech/types.hpp"

namespace optomech {

// Linearized fluctuation model  f_dot = A f + G n(t)  with
// <n_i(t) n_j(t')>_sym = P_ij delta(t - t') and D = G P G^T.
struct LinearModel {
  Mat12 a_mat;     // drift
  Mat12 d_mat;     // diffusion, D = G P G^T
  Mat12x6 g_mat;   // noise injection map
  Mat6 p_noise;    // diagonal symmetrized noise spectral densities
};

// Drift matrix of the fluctuations around the given steady state.
Mat12 build_drift_matrix(const SystemParams& params, const SteadyState& steady);

// Noise-injection map, noise spectral densities and their product D.
void build_diffusion(const SystemParams& params, Mat12& d_mat, Mat12x6& g_mat,
                     Mat6& p_noise);

LinearModel build_linear_model(const SystemParams& params, const SteadyState& steady);

struct StabilityReport {
  CVec12 eigenvalues;
  double max_real_part = 0.0;
  bool stable = false;
};

// Full nonsymmetric eigendecomposition of the drift matrix.
StabilityReport stability(const Mat12& a_mat);

}  // namespace optomech
