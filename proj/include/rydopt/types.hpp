#pragma once

#include <Eigen/Dense>
#include <array>
#include <complex>
#include <numbers>

namespace rydopt {

using cd = std::complex<double>;
using Mat16 = Eigen::Matrix<cd, 16, 16>;
using Mat4 = Eigen::Matrix<cd, 4, 4>;
using Vec16 = Eigen::Vector<cd, 16>;
using MatX = Eigen::MatrixXcd;
using StateBlock = Eigen::Matrix<cd, 16, Eigen::Dynamic>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
inline constexpr cd kImag{0.0, 1.0};

// Two-atom basis. Per-atom level order: |R> = 0, |1> = 1, |0> = 2, |s> = 3.
// Global index of (level of atom 1, level of atom 2) is 4*l1 + l2.
inline constexpr int kDim = 16;
inline constexpr int kLevelR = 0;
inline constexpr int kLevel1 = 1;
inline constexpr int kLevel0 = 2;
inline constexpr int kLevelS = 3;
inline constexpr int kIndexRR = 0;

constexpr int pair_index(int level1, int level2) { return 4 * level1 + level2; }

// Logical ordering (|00>, |01>, |10>, |11>), atom 1 is the control qubit.
inline constexpr std::array<int, 4> kLogicalIndex = {
    pair_index(kLevel0, kLevel0), pair_index(kLevel0, kLevel1),
    pair_index(kLevel1, kLevel0), pair_index(kLevel1, kLevel1)};

}  // namespace rydopt
