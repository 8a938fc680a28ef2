// Copyright (c) 2026 the casimir authors
// SPDX-License-Identifier: Apache-2.0

// Squared TM/TE reflection coefficients at imaginary frequencies, from a
// dielectric function or a surface impedance, and the explicit n = 0
// prescriptions. The zero-frequency term is never obtained by substituting
// zeta = 0 into a model: its TE limit depends on the model class, so it
// always routes through an N0Prescription.

#pragma once

#include <variant>

#include <casimir/materials.hpp>

namespace casimir {

struct ReflectionPair {
  double r_par_sq = 0.0;   // TM (parallel) coefficient squared
  double r_perp_sq = 0.0;  // TE (perpendicular) coefficient squared
};

struct DrudeLimit {};  // (1, 0)
struct PlasmaLike {    // (1, ((wp - cq)/(wp + cq))^2)
  double omega_p = 0.0;
};
struct IdealLike {};  // (1, 1)
struct AutoPrescription {};

using N0Prescription = std::variant<DrudeLimit, PlasmaLike, IdealLike, AutoPrescription>;

// Fresnel coefficients at imaginary frequency for a half-space with
// permittivity eps, in the radial variable y >= zeta/c:
//   y1 = sqrt(y^2 + (eps - 1) zeta^2 / c^2)
//   r_par = (eps y - y1)/(eps y + y1),  r_perp = (y - y1)/(y + y1)
ReflectionPair fresnel_dielectric(double eps, double zeta, double y);

// Impedance-boundary coefficients, chosen so the zeta -> 0 limits reproduce
// the plasma-like and ideal-like zero-frequency forms:
//   r_par = (c y - zeta Z)/(c y + zeta Z),  r_perp = (zeta - c y Z)/(zeta + c y Z)
ReflectionPair fresnel_impedance(double impedance, double zeta, double y);

// Resolve Auto against the model class; every other prescription passes
// through unchanged. Tabulated data carry no zero-frequency asymptote, so
// Auto cannot be resolved for them.
N0Prescription resolve_auto(const N0Prescription& prescription, const ResponseModel& model);

// Zero-frequency (n = 0) coefficients at transverse wave vector q > 0.
// The prescription must already be resolved.
ReflectionPair n0_term_coefficients(const N0Prescription& prescription, double q);

// Model dispatch at zeta > 0 (dielectric or impedance route as appropriate).
ReflectionPair reflection_at(const ResponseModel& model, double zeta, double y);

const char* prescription_name(const N0Prescription& prescription);

}  // namespace casimir
