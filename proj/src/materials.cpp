// Copyright (c) 2026 the casimir authors
// SPDX-License-Identifier: Apache-2.0

#include <casimir/materials.hpp>

#include <cmath>
#include <numbers>

#include <casimir/quadrature.hpp>

namespace casimir {

void MaterialParams::validate() const {
  if (!(omega_p > 0.0)) throw std::domain_error("MaterialParams: omega_p must be > 0");
  if (omega_tau < 0.0) throw std::domain_error("MaterialParams: omega_tau must be >= 0");
  if (vf_over_c < 0.0 || vf_over_c >= 1.0)
    throw std::domain_error("MaterialParams: vf_over_c must be in [0, 1)");
  if (!(v_prefactor > 0.0)) throw std::domain_error("MaterialParams: v_prefactor must be > 0");
}

Conductivity drude_sigma(const MaterialParams& params) {
  params.validate();
  if (!(params.omega_tau > 0.0))
    throw SingularModelError("drude_sigma: omega_tau = 0 makes the conductivity singular");
  return {params.omega_p * params.omega_p / (4.0 * std::numbers::pi * params.omega_tau)};
}

RegimeBreakpoints RegimeBreakpoints::defaults_for(const MaterialParams& params) {
  params.validate();
  return {params.omega_tau, anomalous_frequency(params)};
}

void RegimeBreakpoints::validate() const {
  if (!(ns_upper > 0.0)) throw std::domain_error("RegimeBreakpoints: ns_upper must be > 0");
  // as_upper < ns_upper is allowed: the anomalous band is then empty.
}

const char* regime_name(ImpedanceRegime regime) {
  switch (regime) {
    case ImpedanceRegime::NormalSkin: return "NS";
    case ImpedanceRegime::AnomalousSkin: return "AS";
    case ImpedanceRegime::InfraredOptics: return "IR";
  }
  return "?";
}

void validate_model(const ResponseModel& model) {
  std::visit(
      [](const auto& m) {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, IdealMetal>) {
          // nothing to check
        } else if constexpr (std::is_same_v<T, Tabulated>) {
          if (!m.table) throw std::domain_error("Tabulated model has no table");
        } else if constexpr (std::is_same_v<T, Drude> || std::is_same_v<T, ImpedanceNormalSkin>) {
          m.params.validate();
          if (!(m.params.omega_tau > 0.0))
            throw std::domain_error(model_name(ResponseModel{m}) + " requires omega_tau > 0");
        } else if constexpr (std::is_same_v<T, ImpedanceAnomalousSkin>) {
          m.params.validate();
          if (!(m.params.vf_over_c > 0.0))
            throw std::domain_error("anomalous-skin impedance requires vf_over_c > 0");
        } else if constexpr (std::is_same_v<T, ImpedanceMatched>) {
          m.params.validate();
          if (!(m.params.vf_over_c > 0.0))
            throw std::domain_error("matched impedance requires vf_over_c > 0");
          m.breakpoints.validate();
        } else {
          m.params.validate();
        }
      },
      model);
}

bool is_dielectric(const ResponseModel& model) {
  return std::holds_alternative<Plasma>(model) || std::holds_alternative<Drude>(model) ||
         std::holds_alternative<Tabulated>(model);
}

bool is_impedance(const ResponseModel& model) {
  return std::holds_alternative<ImpedanceNormalSkin>(model) ||
         std::holds_alternative<ImpedanceAnomalousSkin>(model) ||
         std::holds_alternative<ImpedanceInfrared>(model) ||
         std::holds_alternative<ImpedanceMatched>(model);
}

std::string model_name(const ResponseModel& model) {
  struct Namer {
    std::string operator()(const IdealMetal&) const { return "ideal"; }
    std::string operator()(const Plasma&) const { return "plasma"; }
    std::string operator()(const Drude&) const { return "drude"; }
    std::string operator()(const Tabulated&) const { return "table"; }
    std::string operator()(const ImpedanceNormalSkin&) const { return "imp-ns"; }
    std::string operator()(const ImpedanceAnomalousSkin&) const { return "imp-as"; }
    std::string operator()(const ImpedanceInfrared&) const { return "imp-ir"; }
    std::string operator()(const ImpedanceMatched&) const { return "imp-matched"; }
  };
  return std::visit(Namer{}, model);
}

double eps_imag_axis(const ResponseModel& model, double zeta) {
  validate_model(model);
  if (!is_dielectric(model))
    throw WrongModelError("eps_imag_axis: model '" + model_name(model) +
                          "' has no dielectric function");
  if (!(zeta > 0.0))
    throw SingularModelError(
        "eps_imag_axis: permittivity diverges at zeta = 0; use an n=0 prescription");

  if (const auto* p = std::get_if<Plasma>(&model)) {
    const double wp = p->params.omega_p;
    return 1.0 + wp * wp / (zeta * zeta);
  }
  if (const auto* d = std::get_if<Drude>(&model)) {
    const double wp = d->params.omega_p;
    return 1.0 + wp * wp / (zeta * (zeta + d->params.omega_tau));
  }
  const auto& tab = std::get<Tabulated>(model);
  return kk_transform(*tab.table, zeta).eps;
}

double impedance_imag_axis(const ResponseModel& model, double zeta) {
  validate_model(model);
  if (zeta < 0.0) throw std::domain_error("impedance_imag_axis: zeta must be >= 0");

  if (const auto* ir = std::get_if<ImpedanceInfrared>(&model)) {
    const double wp = ir->params.omega_p;
    return zeta / std::sqrt(wp * wp + zeta * zeta);
  }
  if (const auto* ns = std::get_if<ImpedanceNormalSkin>(&model)) {
    return std::sqrt(zeta * ns->params.omega_tau) / ns->params.omega_p;
  }
  if (const auto* as = std::get_if<ImpedanceAnomalousSkin>(&model)) {
    const double v = as->params.v_prefactor * as->params.vf_over_c;
    const double wp = as->params.omega_p;
    return std::cbrt(v * zeta * zeta / (wp * wp));
  }
  if (const auto* m = std::get_if<ImpedanceMatched>(&model)) {
    return matched_impedance(m->params, m->breakpoints, zeta).value;
  }
  throw WrongModelError("impedance_imag_axis: model '" + model_name(model) +
                        "' has no surface impedance");
}

namespace {

double regime_impedance(const MaterialParams& p, ImpedanceRegime regime, double zeta) {
  switch (regime) {
    case ImpedanceRegime::NormalSkin:
      return std::sqrt(zeta * p.omega_tau) / p.omega_p;
    case ImpedanceRegime::AnomalousSkin:
      return std::cbrt(p.v_prefactor * p.vf_over_c * zeta * zeta / (p.omega_p * p.omega_p));
    case ImpedanceRegime::InfraredOptics:
      return zeta / std::sqrt(p.omega_p * p.omega_p + zeta * zeta);
  }
  return 0.0;
}

}  // namespace

MatchedImpedance matched_impedance(const MaterialParams& params, const RegimeBreakpoints& bp,
                                   double zeta) {
  params.validate();
  bp.validate();
  if (zeta < 0.0) throw std::domain_error("matched_impedance: zeta must be >= 0");

  const bool has_anomalous_band = bp.as_upper > bp.ns_upper;
  MatchedImpedance out;
  if (zeta < bp.ns_upper) {
    out.regime = ImpedanceRegime::NormalSkin;
  } else if (has_anomalous_band && zeta < bp.as_upper) {
    out.regime = ImpedanceRegime::AnomalousSkin;
  } else {
    out.regime = ImpedanceRegime::InfraredOptics;
  }
  out.value = regime_impedance(params, out.regime, zeta);

  // Discontinuity of the piecewise impedance at the breakpoint nearest zeta.
  double boundary = bp.ns_upper;
  ImpedanceRegime below = ImpedanceRegime::NormalSkin;
  ImpedanceRegime above = has_anomalous_band ? ImpedanceRegime::AnomalousSkin
                                             : ImpedanceRegime::InfraredOptics;
  if (has_anomalous_band &&
      std::fabs(zeta - bp.as_upper) < std::fabs(zeta - bp.ns_upper)) {
    boundary = bp.as_upper;
    below = ImpedanceRegime::AnomalousSkin;
    above = ImpedanceRegime::InfraredOptics;
  }
  out.boundary_jump = std::fabs(regime_impedance(params, above, boundary) -
                                regime_impedance(params, below, boundary));
  return out;
}

}  // namespace casimir
