#include <doctest.h>

#include <cmath>
#include <random>

#include "optomech/covariance.hpp"
#include "optomech/entanglement.hpp"
#include "optomech/errors.hpp"
#include "../support.hpp"

using namespace optomech;

namespace {

TwoModeCM as_fields(const Mat4& v4) { return TwoModeCM{v4, Subsystem::fields}; }
TwoModeCM as_mirrors(const Mat4& v4) { return TwoModeCM{v4, Subsystem::mirrors}; }

}  // namespace

TEST_CASE("vacuum sits exactly on the separability boundary") {
  const Mat4 vac = 0.5 * Mat4::Identity();
  for (const TwoModeCM& cm : {as_fields(vac), as_mirrors(vac)}) {
    const DuanResult d = duan_sum(cm);
    CHECK(d.total == doctest::Approx(2.0).epsilon(1e-14));
    CHECK_FALSE(d.entangled);
    const auto [nu_min, nu_max] = symplectic_eigenvalues(cm.v4);
    CHECK(nu_min == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(nu_max == doctest::Approx(0.5).epsilon(1e-12));
  }
}

TEST_CASE("symplectic eigenvalues scale linearly") {
  const Mat4 v = 1.7 * Mat4::Identity();
  const auto [nu_min, nu_max] = symplectic_eigenvalues(v);
  CHECK(nu_min == doctest::Approx(1.7).epsilon(1e-12));
  CHECK(nu_max == doctest::Approx(1.7).epsilon(1e-12));
}

TEST_CASE("two-mode squeezed vacuum: analytic values") {
  for (double r : {0.1, 0.5, 1.0}) {
    const Mat4 v = testing::two_mode_squeezed_vacuum(r);
    const DuanResult d = duan_sum(as_fields(v));
    CHECK(std::abs(d.total - 2.0 * std::exp(-2.0 * r)) < 1e-10);
    CHECK(d.entangled);
    const SimonResult s = simon_criterion(as_fields(v));
    CHECK(std::abs(s.nu_min - 0.5 * std::exp(-2.0 * r)) < 1e-10);
    CHECK(s.entangled);
    CHECK(logarithmic_negativity(s.nu_min) == doctest::Approx(2.0 * r).epsilon(1e-9));
  }
}

TEST_CASE("partial transposition properties") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const Mat4 v = testing::random_physical_cm(rng);
    const Mat4 pt = partial_transpose(v);
    // involution
    CHECK((partial_transpose(pt) - v).norm() == 0.0);
    // 2x2 block determinants: diagonal blocks preserved, off-diagonal negated
    CHECK(pt.block<2, 2>(0, 0).determinant() ==
          doctest::Approx(v.block<2, 2>(0, 0).determinant()).epsilon(1e-12));
    CHECK(pt.block<2, 2>(2, 2).determinant() ==
          doctest::Approx(v.block<2, 2>(2, 2).determinant()).epsilon(1e-12));
    CHECK(pt.block<2, 2>(0, 2).determinant() ==
          doctest::Approx(-v.block<2, 2>(0, 2).determinant()).epsilon(1e-12));
  }
  const Mat4 diag = Eigen::Vector4d(0.7, 0.9, 1.1, 1.3).asDiagonal();
  CHECK((partial_transpose(diag) - diag).norm() == 0.0);
}

TEST_CASE("symplectic invariance under phase-space rotations") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> angle(0.0, 6.28);
  for (int trial = 0; trial < 20; ++trial) {
    const Mat4 v = testing::random_physical_cm(rng);
    const double th = angle(rng);
    Mat2 rot;
    rot << std::cos(th), std::sin(th), -std::sin(th), std::cos(th);
    Mat4 s = Mat4::Zero();
    s.block<2, 2>(0, 0) = rot;
    s.block<2, 2>(2, 2) = rot;
    const Mat4 v_rot = s * v * s.transpose();
    const auto [a_min, a_max] = symplectic_eigenvalues(v);
    const auto [b_min, b_max] = symplectic_eigenvalues(v_rot);
    CHECK(a_min == doctest::Approx(b_min).epsilon(1e-9));
    CHECK(a_max == doctest::Approx(b_max).epsilon(1e-9));
  }
}

TEST_CASE("eigenvalues of -(beta V)^2 come in degenerate pairs") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    const Mat4 v = testing::random_physical_cm(rng);
    Mat4 beta = Mat4::Zero();
    beta(0, 1) = 1.0;
    beta(1, 0) = -1.0;
    beta(2, 3) = 1.0;
    beta(3, 2) = -1.0;
    const Mat4 m = -(beta * v) * (beta * v);
    Eigen::EigenSolver<Mat4> es(m, false);
    Eigen::Vector4d ev = es.eigenvalues().real();
    std::sort(ev.data(), ev.data() + 4);
    CHECK(std::abs(ev(0) - ev(1)) <= 1e-9 * std::abs(ev(1)));
    CHECK(std::abs(ev(2) - ev(3)) <= 1e-9 * std::abs(ev(3)));
  }
}

TEST_CASE("non-physical input is reported") {
  // A "covariance" violating positivity makes -(beta V)^2 indefinite.
  Mat4 bad = Mat4::Zero();
  bad(0, 0) = 1.0;
  bad(1, 1) = -1.0;
  bad(2, 2) = 1.0;
  bad(3, 3) = 1.0;
  CHECK_THROWS_AS((void)symplectic_eigenvalues(bad), DomainError);
}

TEST_CASE("log-negativity clamps at zero") {
  CHECK(logarithmic_negativity(0.5) == 0.0);
  CHECK(logarithmic_negativity(0.7) == 0.0);
  CHECK(logarithmic_negativity(0.25) == doctest::Approx(std::log(2.0)).epsilon(1e-12));
}

TEST_CASE("Duan implies Simon across a sweep") {
  // Duan with the fixed EPR combination is sufficient; PPT is necessary and
  // sufficient, so every Duan detection must be a PPT detection.
  Config cfg = testing::base_config();
  int checked = 0;
  for (double ratio : {0.82, 0.86, 0.9, 0.94, 0.98}) {
    cfg.delta_cav_hz = {ratio * cfg.omega_m_hz[0], ratio * cfg.omega_m_hz[1]};
    const auto p = testing::run_pipeline(cfg);
    if (!stability(p.model.a_mat).stable) continue;
    const CovarianceMatrix cm = solve_lyapunov(p.model.a_mat, p.model.d_mat);
    for (Subsystem sub : {Subsystem::mirrors, Subsystem::fields}) {
      const TwoModeCM two = reduce_two_mode(cm, sub);
      if (duan_sum(two).entangled) {
        CHECK(simon_criterion(two).entangled);
      }
      ++checked;
    }
  }
  CHECK(checked >= 6);
}
