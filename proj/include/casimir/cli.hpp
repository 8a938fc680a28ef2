// Copyright (c) 2026 the casimir authors
// SPDX-License-Identifier: Apache-2.0

// Command-line front end: flag parsing and validation, optical-table
// ingestion, sweep orchestration, CSV and optional SVG output.
//
// Exit status contract: 0 success, 1 usage or I/O error, 2 numerical
// non-convergence (a partial CSV is still written, with the failure marked
// in the status column).

#pragma once

#include <string>
#include <vector>

#include <casimir/lifshitz.hpp>
#include <casimir/thermo.hpp>

namespace casimir::cli {

enum class Command { Energy, Pressure, TempCorr, Entropy, Nernst, Compare, Reflect, Epsilon, Kk };

enum class ModelKind {
  Ideal,
  Plasma,
  Drude,
  Table,
  ImpNormalSkin,
  ImpAnomalousSkin,
  ImpInfrared,
  ImpMatched
};

enum class PrescriptionKind { Auto, Drude, Plasma, Ideal };

struct RunConfig {
  Command command = Command::Energy;
  ModelKind model_kind = ModelKind::Drude;
  std::string table_path;
  MaterialParams material;
  PrescriptionKind prescription = PrescriptionKind::Auto;
  double ns_upper = 0.0;  // 0 = model default (omega_tau)
  double as_upper = 0.0;  // 0 = model default (Omega)
  std::vector<double> a_values;
  double temperature = 0.0;
  std::vector<double> T_values;  // entropy sweep / nernst grid
  double entropy_step = 0.0;     // 0 = default step per temperature
  QuadratureSettings settings;
  std::vector<double> zeta_values;  // epsilon / kk
  double reflect_zeta = 0.0;
  std::vector<double> q_values;  // reflect
  std::string out_path = "-";
  std::string svg_path;

  // Resolved flag list that reproduces this config (excludes --out/--svg).
  std::vector<std::string> canonical_args() const;
};

// Thrown when --help was requested; carries the help text.
struct HelpRequested {
  std::string text;
};

// Parse and fully validate an argument vector (without the program name).
// Unit flags are resolved here; conflicting or meaningless flag combinations
// raise UsageError naming the flags involved.
RunConfig parse_and_validate(const std::vector<std::string>& args);

// Read a two-column (omega [rad/s], eps'' []) whitespace-separated text file
// with '#' comments, validate it and fit the analytic tails. Validation
// errors cite the offending line number.
OpticalTable ingest_optical_table(const std::string& path);

// Geometric range "lo:hi:n", comma list "v1,v2,..." or single value.
std::vector<double> parse_value_grid(const std::string& spec, const std::string& flag);

// Execute a validated config. Returns 0 on success, 2 on numerical
// non-convergence; throws UsageError / std::runtime_error for I/O problems.
int run(const RunConfig& config);

// Full front end: parse, run, map errors to the exit-status contract.
int cli_main(const std::vector<std::string>& args);

}  // namespace casimir::cli
