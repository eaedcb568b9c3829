#pragma once

#include "rydopt/types.hpp"

namespace rydopt {

// Whether a C6 coefficient quoted in THz*um^6 is an ordinary or an angular
// frequency, i.e. V/hbar = 1e12 * C6 / r^6 or 2*pi * 1e12 * C6 / r^6.
enum class VdwConvention { ordinary_frequency, angular_frequency };

// Physical constants, control bounds and numerical resolution.
// Unit conventions: tau in us, gamma in 1/us, Rabi/Raman amplitudes in rad/s,
// Zeeman splitting mu*B/h in Hz, distances in um. Anything handed to the
// integrator is converted to SI (seconds, rad/s) first.
struct PhysicalConfig {
  double c6 = 1.0;  // THz * um^6
  VdwConvention vdw_convention = VdwConvention::angular_frequency;
  double r = 10.0;    // um
  double tau = 1.0;   // us
  double omega_max = kTwoPi * 1e7;  // rad/s
  double a_max = kTwoPi * 1e7;      // rad/s
  double dphi_min = -kPi / 100e-9;  // rad/s (phase slope bound)
  double dphi_max = +kPi / 100e-9;  // rad/s
  double b_min = 1e5;  // Hz, Zeeman splitting mu*B/h
  double b_max = 2e5;  // Hz
  double gamma = 0.0;      // total Rydberg decay rate, 1/us
  double branching = 20.0;  // gamma_s / gamma_1
  int m = 64;          // samples per protocol
  int n_steps = 8192;  // integrator steps over [0, tau]

  double tau_seconds() const { return tau * 1e-6; }
  double gamma_per_second() const { return gamma * 1e6; }

  // Decay rates in 1/us; gamma_1 + gamma_s = gamma, gamma_s = branching*gamma_1.
  double gamma_1() const { return gamma / (1.0 + branching); }
  double gamma_s() const { return gamma - gamma_1(); }

  // Lattice spacing of the protocol samples, in seconds.
  double sample_dt_seconds() const { return tau_seconds() / (m - 1); }

  // Bounds on the stored phase increments (rad): slope bound times lattice dt.
  double dphi_increment_min() const { return dphi_min * sample_dt_seconds(); }
  double dphi_increment_max() const { return dphi_max * sample_dt_seconds(); }

  // Throws std::invalid_argument when an invariant is violated.
  void validate() const;
};

}  // namespace rydopt
