#include "optomech/spectra.hpp"

#include <Eigen/LU>
#include <atomic>
#include <cmath>
#include <complex>
#include <mutex>
#include <thread>

#include "optomech/errors.hpp"

namespace optomech {

namespace {

using Cx = std::complex<double>;

// (-i w I - A)^{-1} G, shared by output and intracavity transfers.
CMat12x6 resolvent_times_g(const LinearModel& model, double omega) {
  CMat12 shifted = (-model.a_mat).cast<Cx>();
  for (int i = 0; i < 12; ++i) shifted(i, i) -= Cx(0.0, omega);
  Eigen::FullPivLU<CMat12> lu(shifted);
  if (!lu.isInvertible()) {
    throw SingularResolvent("output_transfer: (-i w I - A) is singular", omega);
  }
  return lu.solve(model.g_mat.cast<Cx>());
}

// Output coupling diag(...sqrt(2 kappa_j) on field rows...) recovered from G.
Vec12 output_coupling_diag(const LinearModel& model) {
  Vec12 c = Vec12::Zero();
  c(kX1) = model.g_mat(kX1, kX1in);
  c(kY1) = model.g_mat(kY1, kY1in);
  c(kX2) = model.g_mat(kX2, kX2in);
  c(kY2) = model.g_mat(kY2, kY2in);
  return c;
}

}  // namespace

CMat12x6 output_transfer(const LinearModel& model, double omega) {
  const CMat12x6 rg = resolvent_times_g(model, omega);
  const Vec12 c = output_coupling_diag(model);
  CMat12x6 t = c.cast<Cx>().asDiagonal() * rg;
  // -E: the four field input columns reflect directly into the output rows.
  t(kX1, kX1in) -= 1.0;
  t(kY1, kY1in) -= 1.0;
  t(kX2, kX2in) -= 1.0;
  t(kY2, kY2in) -= 1.0;
  return t;
}

Mat8 output_correlation(const LinearModel& model, double omega) {
  const CMat12x6 t = output_transfer(model, omega);
  const CMat12 full = t * model.p_noise.cast<Cx>() * t.adjoint();
  Mat8 v = full.topLeftCorner<8, 8>().real();
  return 0.5 * (v + v.transpose()).eval();
}

Mat12 intracavity_correlation(const LinearModel& model, double omega) {
  const CMat12x6 rg = resolvent_times_g(model, omega);
  const CMat12 full = rg * model.p_noise.cast<Cx>() * rg.adjoint();
  Mat12 v = full.real();
  return 0.5 * (v + v.transpose()).eval();
}

double squeezing_at(const LinearModel& model, double omega) {
  const Mat8 v = output_correlation(model, omega);
  const double var_x = v(kX1, kX1) + v(kX2, kX2) - 2.0 * v(kX1, kX2);
  const double var_y = v(kY1, kY1) + v(kY2, kY2) + 2.0 * v(kY1, kY2);
  return var_x + var_y;
}

SpectrumSeries squeezing_spectrum(const LinearModel& model,
                                  const std::vector<double>& omega_grid,
                                  bool keep_v_out) {
  SpectrumSeries series;
  series.omega_grid = omega_grid;
  const std::size_t n = omega_grid.size();
  series.s_out.resize(n);
  if (keep_v_out) series.v_out.emplace(n);

  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const unsigned n_threads = static_cast<unsigned>(
      std::min<std::size_t>(hw, std::max<std::size_t>(n / 64, 1)));

  std::atomic<std::size_t> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  auto worker = [&]() {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      try {
        const Mat8 v = output_correlation(model, series.omega_grid[i]);
        const double var_x = v(kX1, kX1) + v(kX2, kX2) - 2.0 * v(kX1, kX2);
        const double var_y = v(kY1, kY1) + v(kY2, kY2) + 2.0 * v(kY1, kY2);
        series.s_out[i] = var_x + var_y;
        if (keep_v_out) (*series.v_out)[i] = v;
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        next.store(n);
        return;
      }
    }
  };

  if (n_threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(n_threads);
    for (unsigned t = 0; t < n_threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (first_error) std::rethrow_exception(first_error);
  return series;
}

std::vector<double> symmetric_grid(double omega_max, int n) {
  std::vector<double> grid(static_cast<std::size_t>(n));
  if (n == 1) {
    grid[0] = 0.0;
    return grid;
  }
  for (int i = 0; i < n; ++i) {
    grid[static_cast<std::size_t>(i)] =
        -omega_max + 2.0 * omega_max * static_cast<double>(i) / (n - 1);
  }
  return grid;
}

}  // namespace optomech
