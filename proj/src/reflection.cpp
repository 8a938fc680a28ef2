// Copyright (c) 2026 the casimir authors
// SPDX-License-Identifier: Apache-2.0

#include <casimir/reflection.hpp>

#include <cmath>

namespace casimir {

ReflectionPair fresnel_dielectric(double eps, double zeta, double y) {
  if (!(eps > 1.0)) throw std::domain_error("fresnel_dielectric: eps must be > 1");
  if (!(zeta > 0.0)) throw std::domain_error("fresnel_dielectric: zeta must be > 0");
  if (y < zeta / constants::c)
    throw std::domain_error("fresnel_dielectric: y below zeta/c is outside the integration region");

  const double zc = zeta / constants::c;
  const double y1 = std::sqrt(y * y + (eps - 1.0) * zc * zc);
  const double r_par = (eps * y - y1) / (eps * y + y1);
  const double r_perp = (y - y1) / (y + y1);
  return {r_par * r_par, r_perp * r_perp};
}

ReflectionPair fresnel_impedance(double impedance, double zeta, double y) {
  if (impedance < 0.0) throw std::domain_error("fresnel_impedance: impedance must be >= 0");
  if (zeta < 0.0) throw std::domain_error("fresnel_impedance: zeta must be >= 0");
  if (zeta == 0.0 && impedance == 0.0)
    throw IndeterminateLimitError(
        "fresnel_impedance: zeta = 0 with Z = 0 is 0/0; use an n=0 prescription");
  if (zeta > 0.0 && y < zeta / constants::c)
    throw std::domain_error("fresnel_impedance: y below zeta/c is outside the integration region");

  const double cy = constants::c * y;
  const double r_par = (cy - zeta * impedance) / (cy + zeta * impedance);
  const double r_perp = (zeta - cy * impedance) / (zeta + cy * impedance);
  return {r_par * r_par, r_perp * r_perp};
}

N0Prescription resolve_auto(const N0Prescription& prescription, const ResponseModel& model) {
  if (!std::holds_alternative<AutoPrescription>(prescription)) return prescription;

  struct Resolver {
    N0Prescription operator()(const IdealMetal&) const { return IdealLike{}; }
    N0Prescription operator()(const Plasma& m) const { return PlasmaLike{m.params.omega_p}; }
    N0Prescription operator()(const Drude&) const { return DrudeLimit{}; }
    N0Prescription operator()(const Tabulated&) const {
      throw UnresolvedPrescriptionError(
          "auto n=0 prescription is ambiguous for tabulated data; set one explicitly");
    }
    N0Prescription operator()(const ImpedanceNormalSkin&) const { return IdealLike{}; }
    N0Prescription operator()(const ImpedanceAnomalousSkin&) const { return IdealLike{}; }
    N0Prescription operator()(const ImpedanceInfrared& m) const {
      return PlasmaLike{m.params.omega_p};
    }
    N0Prescription operator()(const ImpedanceMatched&) const { return IdealLike{}; }
  };
  return std::visit(Resolver{}, model);
}

ReflectionPair n0_term_coefficients(const N0Prescription& prescription, double q) {
  if (!(q > 0.0)) throw std::domain_error("n0_term_coefficients: q must be > 0");
  if (std::holds_alternative<AutoPrescription>(prescription))
    throw UnresolvedPrescriptionError(
        "n0_term_coefficients: Auto must be resolved against a model first");

  if (std::holds_alternative<DrudeLimit>(prescription)) return {1.0, 0.0};
  if (std::holds_alternative<IdealLike>(prescription)) return {1.0, 1.0};
  const auto& pl = std::get<PlasmaLike>(prescription);
  if (!(pl.omega_p > 0.0))
    throw std::domain_error("n0_term_coefficients: PlasmaLike needs omega_p > 0");
  const double r = (pl.omega_p - constants::c * q) / (pl.omega_p + constants::c * q);
  return {1.0, r * r};
}

ReflectionPair reflection_at(const ResponseModel& model, double zeta, double y) {
  if (!(zeta > 0.0))
    throw std::domain_error("reflection_at: zeta must be > 0; n=0 uses n0_term_coefficients");
  if (std::holds_alternative<IdealMetal>(model)) return {1.0, 1.0};
  if (is_dielectric(model)) return fresnel_dielectric(eps_imag_axis(model, zeta), zeta, y);
  return fresnel_impedance(impedance_imag_axis(model, zeta), zeta, y);
}

const char* prescription_name(const N0Prescription& prescription) {
  if (std::holds_alternative<DrudeLimit>(prescription)) return "drude";
  if (std::holds_alternative<PlasmaLike>(prescription)) return "plasma";
  if (std::holds_alternative<IdealLike>(prescription)) return "ideal";
  return "auto";
}

}  // namespace casimir
