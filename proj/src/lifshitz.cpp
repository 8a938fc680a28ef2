// Copyright (c) 2026 the casimir authors
// SPDX-License-Identifier: Apache-2.0

#include <casimir/lifshitz.hpp>

#include <cmath>
#include <numbers>

#include <casimir/kahan.hpp>
#include <casimir/quadrature.hpp>

namespace casimir {

namespace {

using constants::c;
using constants::hbar;
using constants::k_B;
constexpr double pi = std::numbers::pi;

// Material response frozen at one frequency so the y-integration does not
// re-evaluate the model (the tabulated transform in particular).
struct FrozenResponse {
  enum class Kind { Ideal, Dielectric, Impedance } kind;
  double value;  // eps or Z
};

FrozenResponse freeze(const ResponseModel& model, double zeta) {
  if (std::holds_alternative<IdealMetal>(model))
    return {FrozenResponse::Kind::Ideal, 0.0};
  if (is_dielectric(model))
    return {FrozenResponse::Kind::Dielectric, eps_imag_axis(model, zeta)};
  return {FrozenResponse::Kind::Impedance, impedance_imag_axis(model, zeta)};
}

ReflectionPair reflect(const FrozenResponse& response, double zeta, double y) {
  switch (response.kind) {
    case FrozenResponse::Kind::Ideal: return {1.0, 1.0};
    case FrozenResponse::Kind::Dielectric: return fresnel_dielectric(response.value, zeta, y);
    case FrozenResponse::Kind::Impedance: return fresnel_impedance(response.value, zeta, y);
  }
  return {0.0, 0.0};
}

// r^2 e^-t / (1 - r^2 e^-t), stable near t = 0.
double exp_ratio(double r_sq, double t) {
  const double e = std::exp(-t);
  const double den = -std::expm1(-t) + (1.0 - r_sq) * e;
  return r_sq * e / den;
}

// Dominant-exponential bound on the Matsubara tail from index N on, for a
// per-term envelope C (x^2+2x+2) e^-x (free energy) or C (x^2+4x+6) e^-x
// (pressure). The max(1, 1/x1) factor accounts for the term density when
// the Matsubara spacing x1 = 2 zeta_1 a / c is below 1.
double tail_bound_free_energy(double x, double x1, double a, double T) {
  const double density = std::max(1.0, 1.0 / x1);
  return 2.0 * (k_B * T / (4.0 * pi * a * a)) * (x * x + 2.0 * x + 2.0) * std::exp(-x) * density;
}

double tail_bound_pressure(double x, double x1, double a, double T) {
  const double density = std::max(1.0, 1.0 / x1);
  return 2.0 * (k_B * T / (4.0 * pi * a * a * a)) * (x * x + 4.0 * x + 6.0) * std::exp(-x) *
         density;
}

void validate_point(double a, double T) {
  if (!(a > 0.0)) throw std::domain_error("separation a must be > 0");
  if (!(T > 0.0)) throw std::domain_error("temperature T must be > 0");
}

// One pressure term, same structure as matsubara_term but with the
// t^2 r^2 e^-t/(1 - r^2 e^-t) integrand of -dF/da.
TermResult pressure_term(long n, double a, double T, const ResponseModel& model,
                         const N0Prescription& resolved, const QuadratureSettings& settings) {
  const double zeta = matsubara_frequency(n, T);
  const double x_lo = 2.0 * zeta * a / c;
  if (x_lo >= settings.tail_cutoff) return {0.0, 0.0};

  const double weight = (n == 0) ? 0.5 : 1.0;
  const double prefactor = -k_B * T * weight / (8.0 * pi * a * a * a);

  IntegrationResult res;
  if (n == 0) {
    auto f = [&](double t) {
      const ReflectionPair r = n0_term_coefficients(resolved, t / (2.0 * a));
      return t * t * (exp_ratio(r.r_par_sq, t) + exp_ratio(r.r_perp_sq, t));
    };
    res = integrate_adaptive(f, x_lo, settings.tail_cutoff, settings.rel_tol,
                             settings.abs_tol / std::fabs(prefactor), settings.max_subdivisions);
  } else {
    const FrozenResponse frozen = freeze(model, zeta);
    auto f = [&](double t) {
      const ReflectionPair r = reflect(frozen, zeta, t / (2.0 * a));
      return t * t * (exp_ratio(r.r_par_sq, t) + exp_ratio(r.r_perp_sq, t));
    };
    res = integrate_adaptive(f, x_lo, settings.tail_cutoff, settings.rel_tol,
                             settings.abs_tol / std::fabs(prefactor), settings.max_subdivisions);
  }
  if (!res.converged)
    throw ConvergenceError("pressure term n=" + std::to_string(n) + " quadrature did not converge",
                           prefactor * res.value, std::fabs(prefactor) * res.error);
  return {prefactor * res.value, std::fabs(prefactor) * res.error};
}

}  // namespace

void QuadratureSettings::validate() const {
  if (!(rel_tol > 0.0) || !(abs_tol > 0.0) || !(matsubara_tail_tol > 0.0))
    throw std::domain_error("QuadratureSettings: tolerances must be > 0");
  if (!(tail_cutoff >= 30.0)) throw std::domain_error("QuadratureSettings: tail_cutoff must be >= 30");
  if (max_subdivisions < 1) throw std::domain_error("QuadratureSettings: max_subdivisions must be >= 1");
  if (max_terms < 1) throw std::domain_error("QuadratureSettings: max_terms must be >= 1");
}

double log_integrand(double r_sq, double x) {
  if (r_sq < 0.0 || r_sq > 1.0) throw std::domain_error("log_integrand: r_sq must be in [0, 1]");
  if (x < 0.0) throw std::domain_error("log_integrand: x must be >= 0");
  if (r_sq == 1.0 && x == 0.0)
    throw std::domain_error("log_integrand: singular endpoint r_sq = 1, x = 0");

  const double u = r_sq * std::exp(-x);
  if (u < 0.5) return std::log1p(-u);
  return std::log(-std::expm1(-x) + (1.0 - r_sq) * std::exp(-x));
}

TermResult matsubara_term(long n, double a, double T, const ResponseModel& model,
                          const N0Prescription& prescription, const QuadratureSettings& settings) {
  validate_point(a, T);
  settings.validate();
  if (n < 0) throw std::domain_error("matsubara_term: n must be >= 0");

  const double zeta = matsubara_frequency(n, T);
  const double x_lo = 2.0 * zeta * a / c;
  if (x_lo >= settings.tail_cutoff) return {0.0, 0.0};

  const double weight = (n == 0) ? 0.5 : 1.0;
  const double prefactor = k_B * T * weight / (8.0 * pi * a * a);

  IntegrationResult res;
  if (n == 0) {
    const N0Prescription resolved = resolve_auto(prescription, model);
    auto f = [&](double t) {
      const ReflectionPair r = n0_term_coefficients(resolved, t / (2.0 * a));
      return t * (log_integrand(r.r_par_sq, t) + log_integrand(r.r_perp_sq, t));
    };
    res = integrate_adaptive(f, x_lo, settings.tail_cutoff, settings.rel_tol,
                             settings.abs_tol / prefactor, settings.max_subdivisions);
  } else {
    const FrozenResponse frozen = freeze(model, zeta);
    auto f = [&](double t) {
      const ReflectionPair r = reflect(frozen, zeta, t / (2.0 * a));
      return t * (log_integrand(r.r_par_sq, t) + log_integrand(r.r_perp_sq, t));
    };
    res = integrate_adaptive(f, x_lo, settings.tail_cutoff, settings.rel_tol,
                             settings.abs_tol / prefactor, settings.max_subdivisions);
  }
  if (!res.converged)
    throw ConvergenceError("matsubara term n=" + std::to_string(n) + " quadrature did not converge",
                           prefactor * res.value, prefactor * res.error);
  return {prefactor * res.value, prefactor * res.error};
}

FreeEnergyResult free_energy(double a, double T, const ResponseModel& model,
                             const N0Prescription& prescription,
                             const QuadratureSettings& settings) {
  validate_point(a, T);
  settings.validate();
  validate_model(model);
  const N0Prescription resolved = resolve_auto(prescription, model);

  const double x1 = 2.0 * matsubara_frequency(1, T) * a / c;
  KahanSum sum;
  KahanSum err_sum;
  for (long n = 0;; ++n) {
    if (n >= settings.max_terms)
      throw ConvergenceError("free_energy: Matsubara sum exceeded max_terms", sum.value(),
                             err_sum.value());
    const TermResult term = matsubara_term(n, a, T, model, resolved, settings);
    sum.add(term.value);
    err_sum.add(term.quad_error);

    const double x_next = static_cast<double>(n + 1) * x1;
    const double bound = tail_bound_free_energy(x_next, x1, a, T);
    if (bound <= settings.matsubara_tail_tol * std::fabs(sum.value()))
      return {sum.value(), n + 1, err_sum.value(), bound};
  }
}

ZeroTResult zero_T_energy(double a, const ResponseModel& model,
                          const QuadratureSettings& settings) {
  if (!(a > 0.0)) throw std::domain_error("separation a must be > 0");
  settings.validate();
  validate_model(model);

  const double wc = characteristic_frequency(a);
  const double inner_rel = settings.rel_tol * 0.1;

  auto outer = [&](double u) {
    const double x = u / (1.0 - u);
    if (x >= settings.tail_cutoff) return 0.0;
    const double zeta = wc * x;
    const FrozenResponse frozen = freeze(model, zeta);
    auto f = [&](double t) {
      const ReflectionPair r = reflect(frozen, zeta, t / (2.0 * a));
      return t * (log_integrand(r.r_par_sq, t) + log_integrand(r.r_perp_sq, t));
    };
    const IntegrationResult inner = integrate_adaptive(f, x, settings.tail_cutoff, inner_rel,
                                                       1e-30, settings.max_subdivisions);
    if (!inner.converged)
      throw ConvergenceError("zero_T_energy: inner quadrature did not converge", inner.value,
                             inner.error);
    return inner.value / ((1.0 - u) * (1.0 - u));
  };

  const IntegrationResult res =
      integrate_adaptive(outer, 0.0, 1.0, settings.rel_tol, 1e-30, settings.max_subdivisions);
  const double prefactor = hbar * wc / (16.0 * pi * pi * a * a);
  if (!res.converged)
    throw ConvergenceError("zero_T_energy: outer quadrature did not converge",
                           prefactor * res.value, prefactor * res.error);
  const double value = prefactor * res.value;
  // inner quadratures contribute up to ~inner_rel of |value| on top of the
  // outer estimate
  return {value, prefactor * res.error + 2.0 * inner_rel * std::fabs(value)};
}

PressureResult pressure(double a, double T, const ResponseModel& model,
                        const N0Prescription& prescription, const QuadratureSettings& settings) {
  validate_point(a, T);
  settings.validate();
  validate_model(model);
  const N0Prescription resolved = resolve_auto(prescription, model);

  const double x1 = 2.0 * matsubara_frequency(1, T) * a / c;
  PressureResult out;
  KahanSum sum;
  KahanSum err_sum;
  for (long n = 0;; ++n) {
    if (n >= settings.max_terms)
      throw ConvergenceError("pressure: Matsubara sum exceeded max_terms", sum.value(),
                             err_sum.value());
    const TermResult term = pressure_term(n, a, T, model, resolved, settings);
    sum.add(term.value);
    err_sum.add(term.quad_error);

    const double x_next = static_cast<double>(n + 1) * x1;
    const double bound = tail_bound_pressure(x_next, x1, a, T);
    if (bound <= settings.matsubara_tail_tol * std::fabs(sum.value())) {
      out.analytic = sum.value();
      out.n_terms = n + 1;
      out.quad_error = err_sum.value();
      out.tail_bound = bound;
      break;
    }
  }

  const double h = 0.01 * a;
  auto F = [&](double sep) { return free_energy(sep, T, model, resolved, settings).value; };
  const double dFda =
      (F(a - 2.0 * h) - 8.0 * F(a - h) + 8.0 * F(a + h) - F(a + 2.0 * h)) / (12.0 * h);
  out.finite_difference = -dFda;
  out.discrepancy = std::fabs(out.analytic - out.finite_difference) /
                    std::max(std::fabs(out.analytic), 1e-300);
  return out;
}

}  // namespace casimir
