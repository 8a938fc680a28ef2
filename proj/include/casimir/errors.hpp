// Copyright (c) 2026 the casimir authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace casimir {

// A model was asked for a response it does not define (e.g. a permittivity
// from an impedance variant).
class WrongModelError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// The requested evaluation point makes the model singular (e.g. a Drude
// permittivity at zero frequency).
class SingularModelError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

// 0/0 at zero frequency: the value depends on the order of limits and must
// be fixed by an explicit zero-frequency prescription.
class IndeterminateLimitError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

// An Auto prescription could not be resolved from the response model.
class UnresolvedPrescriptionError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Optical table data failed validation; carries the offending input line
// when the table came from a file (line < 0 otherwise).
class TableValidationError : public std::runtime_error {
public:
  explicit TableValidationError(const std::string& msg, long line = -1)
      : std::runtime_error(msg), line_(line) {}
  long line() const { return line_; }

private:
  long line_;
};

// Quadrature or series summation failed to converge within its budget.
// Carries the partial result and the accumulated error estimate.
class ConvergenceError : public std::runtime_error {
public:
  ConvergenceError(const std::string& msg, double partial, double error_estimate)
      : std::runtime_error(msg), partial_(partial), error_estimate_(error_estimate) {}
  double partial() const { return partial_; }
  double error_estimate() const { return error_estimate_; }

private:
  double partial_;
  double error_estimate_;
};

// Command-line usage error (unknown flag, missing flag, conflicting flags).
class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace casimir
