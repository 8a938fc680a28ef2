// Copyright (c) 2026 the casimir authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <numbers>
#include <stdexcept>

namespace casimir {

namespace constants {

// CODATA / SI exact values. Fixed at build time, never configurable.
inline constexpr double c = 299792458.0;            // m/s
inline constexpr double k_B = 1.380649e-23;         // J/K
inline constexpr double h_planck = 6.62607015e-34;  // J s
inline constexpr double hbar = h_planck / (2.0 * std::numbers::pi);  // J s
inline constexpr double e_charge = 1.602176634e-19;                  // C

}  // namespace constants

// Photon energy in eV -> angular frequency in rad/s.
inline double ev_to_radsec(double energy_ev) {
  if (energy_ev < 0.0) throw std::domain_error("ev_to_radsec: energy must be >= 0");
  return energy_ev * constants::e_charge / constants::hbar;
}

// Matsubara frequency zeta_n = 2 pi k_B T n / hbar in rad/s; exactly 0 for n = 0.
inline double matsubara_frequency(long n, double temperature) {
  if (!(temperature > 0.0)) throw std::domain_error("matsubara_frequency: T must be > 0");
  if (n < 0) throw std::domain_error("matsubara_frequency: n must be >= 0");
  if (n == 0) return 0.0;
  const double scale = 2.0 * std::numbers::pi * constants::k_B / constants::hbar * temperature;
  return scale * static_cast<double>(n);
}

// Characteristic frequency of the gap, omega_c = c / (2 a), in rad/s.
inline double characteristic_frequency(double separation) {
  if (!(separation > 0.0)) throw std::domain_error("characteristic_frequency: a must be > 0");
  return constants::c / (2.0 * separation);
}

// Characteristic frequency of the anomalous skin effect, Omega = (v_F/c) * omega_p.
inline double anomalous_frequency(double vf_over_c, double omega_p) {
  if (vf_over_c < 0.0 || omega_p < 0.0)
    throw std::domain_error("anomalous_frequency: arguments must be >= 0");
  return vf_over_c * omega_p;
}

}  // namespace casimir
