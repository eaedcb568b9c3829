#include "rydopt/operators.hpp"

#include <cmath>
#include <stdexcept>

namespace rydopt {

namespace {
void require_finite(cd omega, double a, double zeeman) {
  if (!std::isfinite(omega.real()) || !std::isfinite(omega.imag()) ||
      !std::isfinite(a) || !std::isfinite(zeeman))
    throw std::invalid_argument("hamiltonian: non-finite input");
}
}  // namespace

Eigen::Matrix<cd, 4, 4> build_local_hamiltonian(cd omega, double a,
                                                double zeeman,
                                                const PhysicalConfig& cfg) {
  (void)cfg;  // bounds are enforced where protocols are built
  require_finite(omega, a, zeeman);
  Eigen::Matrix<cd, 4, 4> h = Eigen::Matrix<cd, 4, 4>::Zero();
  h(kLevelR, kLevel1) = 0.5 * omega;
  h(kLevel1, kLevelR) = 0.5 * std::conj(omega);
  h(kLevel1, kLevel0) = 0.5 * a;
  h(kLevel0, kLevel1) = 0.5 * a;
  // |1>-|0> splitting of 2*pi*zeeman rad/s, i.e. mu*B/h = zeeman in Hz.
  h(kLevel1, kLevel1) = kPi * zeeman;
  h(kLevel0, kLevel0) = -kPi * zeeman;
  return h;
}

Mat16 build_total_hamiltonian(cd omega, double a1, double a2, double zeeman,
                              double v_over_hbar, const PhysicalConfig& cfg) {
  if (!std::isfinite(v_over_hbar))
    throw std::invalid_argument("hamiltonian: non-finite interaction");
  const auto h1 = build_local_hamiltonian(omega, a1, zeeman, cfg);
  const auto h2 = build_local_hamiltonian(omega, a2, zeeman, cfg);
  Mat16 h = Mat16::Zero();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      if (h1(i, j) != 0.0)
        for (int k = 0; k < 4; ++k) h(4 * i + k, 4 * j + k) += h1(i, j);
      if (h2(i, j) != 0.0)
        for (int k = 0; k < 4; ++k) h(4 * k + i, 4 * k + j) += h2(i, j);
    }
  h(kIndexRR, kIndexRR) += v_over_hbar;
  return h;
}

double vdw_strength(double r_um, const PhysicalConfig& cfg) {
  if (!(r_um > 0)) throw std::invalid_argument("vdw_strength: r must be > 0");
  const double r6 = std::pow(r_um, 6);
  const double ordinary = 1e12 * cfg.c6 / r6;  // C6 in THz*um^6
  return cfg.vdw_convention == VdwConvention::angular_frequency
             ? kTwoPi * ordinary
             : ordinary;
}

std::vector<Mat16> build_lindblad_ops(const PhysicalConfig& cfg) {
  const double gamma_1 = cfg.gamma_1() * 1e6;  // 1/s
  const double gamma_s = cfg.gamma_s() * 1e6;
  std::vector<Mat16> ops;
  ops.reserve(4);
  for (int atom = 0; atom < 2; ++atom) {
    for (auto [to, rate] : {std::pair{kLevelS, gamma_s}, {kLevel1, gamma_1}}) {
      Mat16 l = Mat16::Zero();
      const double amp = std::sqrt(rate);
      for (int k = 0; k < 4; ++k) {
        if (atom == 0)
          l(4 * to + k, 4 * kLevelR + k) = amp;
        else
          l(4 * k + to, 4 * k + kLevelR) = amp;
      }
      ops.push_back(l);
    }
  }
  return ops;
}

Mat16 computational_projector() {
  Mat16 p = Mat16::Zero();
  for (int q : kLogicalIndex) p(q, q) = 1.0;
  return p;
}

Mat16 target_cnot() {
  Mat16 u = Mat16::Identity();
  // Flip the target (atom 2) when the control (atom 1) is |1>.
  const int i10 = kLogicalIndex[2], i11 = kLogicalIndex[3];
  u(i10, i10) = u(i11, i11) = 0.0;
  u(i10, i11) = u(i11, i10) = 1.0;
  return u;
}

Mat4 target_cnot_logical() {
  Mat4 u = Mat4::Identity();
  u(2, 2) = u(3, 3) = 0.0;
  u(2, 3) = u(3, 2) = 1.0;
  return u;
}

Vec16 random_product_ket(Rng& rng) {
  auto draw_qubit = [&rng](cd& amp0, cd& amp1) {
    const double cos_theta = 1.0 - 2.0 * rng.uniform();
    const double phase = kTwoPi * rng.uniform();
    amp0 = std::sqrt(0.5 * (1.0 + cos_theta));
    amp1 = std::polar(std::sqrt(0.5 * (1.0 - cos_theta)), phase);
  };
  cd a0, a1, b0, b1;
  draw_qubit(a0, a1);
  draw_qubit(b0, b1);
  Vec16 psi = Vec16::Zero();
  psi(pair_index(kLevel0, kLevel0)) = a0 * b0;
  psi(pair_index(kLevel0, kLevel1)) = a0 * b1;
  psi(pair_index(kLevel1, kLevel0)) = a1 * b0;
  psi(pair_index(kLevel1, kLevel1)) = a1 * b1;
  return psi;
}

Mat16 random_product_state(Rng& rng) {
  const Vec16 psi = random_product_ket(rng);
  return psi * psi.adjoint();
}

Mat16 swap_atoms() {
  Mat16 s = Mat16::Zero();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) s(4 * j + i, 4 * i + j) = 1.0;
  return s;
}

}  // namespace rydopt
