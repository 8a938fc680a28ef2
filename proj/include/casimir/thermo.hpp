// Copyright (c) 2026 the casimir authors
// SPDX-License-Identifier: Apache-2.0

// Thermodynamic quantities derived from the free energy: the finite-
// temperature correction, the entropy S = -dF/dT with its stencil
// diagnostics, a low-temperature Nernst check, and the side-by-side
// comparison of the fixed-impedance recipe against the frequency-matched
// one and the two dielectric models.

#pragma once

#include <string>
#include <vector>

#include <casimir/lifshitz.hpp>

namespace casimir {

struct TemperatureCorrection {
  double delta_F = 0.0;   // J/m^2, F(a,T) - E(a)
  double relative = 0.0;  // delta_F / |E(a)|
  FreeEnergyResult finite_T;
  ZeroTResult zero_T;
};

TemperatureCorrection temperature_correction(double a, double T, const ResponseModel& model,
                                             const N0Prescription& prescription,
                                             const QuadratureSettings& settings);

struct EntropyResult {
  double S = 0.0;                // J/(m^2 K), Richardson-extrapolated
  double stencil_h = 0.0;        // K
  double richardson_error = 0.0; // J/(m^2 K), |S_h - S_{h/2}|
  bool step_warning = false;     // richardson_error > 10% of |S|
};

// Central difference S = -(F(T+h) - F(T-h)) / 2h from steps h and h/2,
// Richardson-combined. Requires T - 2h > 0.
EntropyResult entropy(double a, double T, const ResponseModel& model,
                      const N0Prescription& prescription, const QuadratureSettings& settings,
                      double h);

// Default stencil step: 1% of T but at least 0.5 K, clamped to T/4 so the
// precondition T > 2h holds on kelvin-scale grids.
double default_entropy_step(double T);

struct NernstPoint {
  double T = 0.0;
  double S = 0.0;
  double richardson_error = 0.0;
  double stencil_h = 0.0;
};

struct NernstReport {
  std::vector<NernstPoint> points;
  double intercept = 0.0;        // linear fit of |S| vs T on the lowest decade
  double intercept_sigma = 0.0;  // fit uncertainty of the intercept
  int fit_points = 0;
  bool pass = false;  // |intercept| <= 3 * intercept_sigma
};

NernstReport nernst_check(double a, const ResponseModel& model,
                          const N0Prescription& prescription, const QuadratureSettings& settings,
                          const std::vector<double>& T_grid);

enum class ComparisonMethod { GkmRecipe, Matched, Drude, Plasma };

const char* comparison_method_name(ComparisonMethod method);

struct ComparisonRow {
  double a = 0.0;
  ComparisonMethod method = ComparisonMethod::GkmRecipe;
  double omega_c = 0.0;             // c / 2a
  ImpedanceRegime fixed_regime = ImpedanceRegime::InfraredOptics;  // GKM rows only
  bool has_fixed_regime = false;
  long n_normal = 0;     // matched rows: Matsubara terms (n >= 1) per regime
  long n_anomalous = 0;
  long n_infrared = 0;
  bool has_regime_counts = false;
  double free_energy = 0.0;  // J/m^2
  double zero_T = 0.0;       // J/m^2
  double delta_F = 0.0;      // J/m^2
  double relative = 0.0;
  long n_terms = 0;
};

// One row per (a, method), methods ordered GKM-recipe, matched, Drude,
// plasma; each with its Auto zero-frequency prescription. The GKM row picks
// the single impedance regime that omega_c = c/2a falls in and uses it for
// every term, which is the recipe this library exists to contrast with the
// matched evaluation.
std::vector<ComparisonRow> prescription_comparison(const std::vector<double>& a_values, double T,
                                                   const MaterialParams& params,
                                                   const QuadratureSettings& settings);

}  // namespace casimir
