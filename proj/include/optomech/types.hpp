#pragma once

#include <Eigen/Dense>
#include <array>
#include <complex>

namespace optomech {

using Mat12 = Eigen::Matrix<double, 12, 12>;
using Mat12x6 = Eigen::Matrix<double, 12, 6>;
using Mat8 = Eigen::Matrix<double, 8, 8>;
using Mat6 = Eigen::Matrix<double, 6, 6>;
using Mat4 = Eigen::Matrix<double, 4, 4>;
using Mat2 = Eigen::Matrix<double, 2, 2>;
using Vec12 = Eigen::Matrix<double, 12, 1>;
using CVec12 = Eigen::Matrix<std::complex<double>, 12, 1>;
using CMat12 = Eigen::Matrix<std::complex<double>, 12, 12>;
using CMat12x6 = Eigen::Matrix<std::complex<double>, 12, 6>;

// Fluctuation vector ordering, fixed across the whole library:
// f = (dQ1, dP1, dQ2, dP2, dX1, dY1, dX2, dY2, dU1, dU2, dV1, dV2)
enum FluctuationIndex : int {
  kQ1 = 0, kP1 = 1, kQ2 = 2, kP2 = 3,
  kX1 = 4, kY1 = 5, kX2 = 6, kY2 = 7,
  kU1 = 8, kU2 = 9, kV1 = 10, kV2 = 11,
};

inline constexpr std::array<const char*, 12> kFluctuationNames = {
    "dQ1", "dP1", "dQ2", "dP2", "dX1", "dY1", "dX2", "dY2", "dU1", "dU2", "dV1", "dV2"};

// Noise vector ordering for the injection map G:
// n = (xi1, xi2, X1in, Y1in, X2in, Y2in)
enum NoiseIndex : int {
  kXi1 = 0, kXi2 = 1, kX1in = 2, kY1in = 3, kX2in = 4, kY2in = 5,
};

enum class Subsystem { mirrors, fields };

}  // namespace optomech
