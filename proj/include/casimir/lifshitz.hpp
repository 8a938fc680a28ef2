// Copyright (c) 2026 the casimir authors
// SPDX-License-Identifier: Apache-2.0

// Matsubara summation and quadrature core: per-term integrals, the finite-
// temperature free energy per unit area, its T -> 0 integral limit, and the
// pressure. All integrals are evaluated in the dimensionless variable
// t = 2 y a on [x_n, tail_cutoff] with x_n = 2 zeta_n a / c.

#pragma once

#include <casimir/materials.hpp>
#include <casimir/reflection.hpp>

namespace casimir {

struct QuadratureSettings {
  double rel_tol = 1e-8;
  double abs_tol = 1e-20;            // J/m^2
  int max_subdivisions = 200;
  double tail_cutoff = 60.0;         // dimensionless upper limit in t
  double matsubara_tail_tol = 1e-10; // relative bound on dropped Matsubara terms
  long max_terms = 1000000;
  void validate() const;
};

struct FreeEnergyResult {
  double value = 0.0;       // J/m^2, <= 0
  long n_terms = 0;         // Matsubara terms summed (n = 0 included)
  double quad_error = 0.0;  // J/m^2, accumulated quadrature error estimate
  double tail_bound = 0.0;  // J/m^2, bound on the dropped terms
};

struct TermResult {
  double value = 0.0;       // J/m^2
  double quad_error = 0.0;  // J/m^2
};

struct ZeroTResult {
  double value = 0.0;       // J/m^2
  double quad_error = 0.0;  // J/m^2
};

struct PressureResult {
  double analytic = 0.0;           // Pa, from the term-by-term derivative
  double finite_difference = 0.0;  // Pa, five-point central -dF/da
  double discrepancy = 0.0;        // |analytic - fd| / |analytic|
  long n_terms = 0;
  double quad_error = 0.0;         // Pa, analytic branch
  double tail_bound = 0.0;         // Pa, analytic branch
};

// ln(1 - r_sq e^(-x)), evaluated without cancellation at either end.
double log_integrand(double r_sq, double x);

// One term of the primed Matsubara sum (n = 0 carries weight 1/2 and always
// routes through the n=0 prescription, never through the model at zeta = 0).
TermResult matsubara_term(long n, double a, double T, const ResponseModel& model,
                          const N0Prescription& prescription, const QuadratureSettings& settings);

// Sum of matsubara_term over ascending n until the analytic tail bound
// drops below matsubara_tail_tol * |partial sum|.
FreeEnergyResult free_energy(double a, double T, const ResponseModel& model,
                             const N0Prescription& prescription,
                             const QuadratureSettings& settings);

// E(a) = (hbar / 4 pi^2) Int_0^inf dzeta Int_{zeta/c}^inf y [ln(...) + ln(...)] dy,
// outer variable mapped by zeta = (c/2a) u/(1-u), u in (0,1).
ZeroTResult zero_T_energy(double a, const ResponseModel& model,
                          const QuadratureSettings& settings);

// Pressure from the analytic term-by-term derivative of the free energy and,
// as a built-in cross-check, from a five-point central difference of F(a).
PressureResult pressure(double a, double T, const ResponseModel& model,
                        const N0Prescription& prescription, const QuadratureSettings& settings);

}  // namespace casimir
