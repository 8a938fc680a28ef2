// Copyright (c) 2026 the casimir authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <cmath>
#include <numbers>

#include <casimir/materials.hpp>
#include <casimir/quadrature.hpp>

namespace casimir {

namespace {

constexpr double kLowTailPowerFloor = -1.0;  // keep the w->0 extension integrable

// Fit eps2(w) = A / (w (w^2 + wt^2)) through the first two rows. With
// g_i = eps2_i * w_i this is a linear solve for A and wt^2; the fit is
// rejected when the data are not Drude-shaped (g must be decreasing and
// both parameters positive).
OpticalTable::LowTail fit_low_tail(const std::vector<OpticalRow>& rows) {
  OpticalTable::LowTail tail;
  const OpticalRow& r0 = rows[0];
  const OpticalRow& r1 = rows[1];
  if (!(r0.eps2 > 0.0)) return tail;  // Kind::None

  if (r1.eps2 > 0.0) {
    const double g0 = r0.eps2 * r0.omega;
    const double g1 = r1.eps2 * r1.omega;
    const double denom = 1.0 / g1 - 1.0 / g0;
    if (denom > 0.0) {
      const double amplitude = (r1.omega * r1.omega - r0.omega * r0.omega) / denom;
      const double wt2 = amplitude / g0 - r0.omega * r0.omega;
      if (amplitude > 0.0 && wt2 > 0.0) {
        tail.kind = OpticalTable::LowTail::Kind::Drude;
        tail.amplitude = amplitude;
        tail.omega_tau = std::sqrt(wt2);
        return tail;
      }
    }
    // Not Drude-shaped: continue the first segment's power law downward,
    // clamped so the tail integral stays finite.
    double slope = std::log(r1.eps2 / r0.eps2) / std::log(r1.omega / r0.omega);
    slope = std::max(slope, kLowTailPowerFloor);
    tail.kind = OpticalTable::LowTail::Kind::PowerLaw;
    tail.exponent = slope;
    tail.amplitude = r0.eps2 / std::pow(r0.omega, slope);
    return tail;
  }

  // single positive leading point: 1/w continuation
  tail.kind = OpticalTable::LowTail::Kind::PowerLaw;
  tail.exponent = -1.0;
  tail.amplitude = r0.eps2 * r0.omega;
  return tail;
}

// Integral of w * eps2(w) / (w^2 + zeta^2) over (0, w1] for the low tail.
double low_tail_integral(const OpticalTable::LowTail& tail, double w1, double zeta) {
  switch (tail.kind) {
    case OpticalTable::LowTail::Kind::None:
      return 0.0;
    case OpticalTable::LowTail::Kind::Drude: {
      // A * Int dw / ((w^2 + wt^2)(w^2 + zeta^2)) in closed form
      const double wt = tail.omega_tau;
      if (std::fabs(zeta - wt) < 1e-8 * wt) {
        const double z2 = zeta * zeta;
        return tail.amplitude * (w1 / (2.0 * z2 * (w1 * w1 + z2)) +
                                 std::atan(w1 / zeta) / (2.0 * z2 * zeta));
      }
      const double j = (std::atan(w1 / wt) / wt - std::atan(w1 / zeta) / zeta) /
                       (zeta * zeta - wt * wt);
      return tail.amplitude * j;
    }
    case OpticalTable::LowTail::Kind::PowerLaw: {
      const double s = tail.exponent;
      if (std::fabs(s + 1.0) < 1e-12)
        return tail.amplitude * std::atan(w1 / zeta) / zeta;
      auto f = [&](double w) {
        return tail.amplitude * std::pow(w, s + 1.0) / (w * w + zeta * zeta);
      };
      return integrate_adaptive(f, 0.0, w1, 1e-10, 0.0, 100).value;
    }
  }
  return 0.0;
}

// Integral of B w^(1-p) / (w^2 + zeta^2) over [wN, inf), via w = wN / u.
double high_tail_integral(const OpticalTable::HighTail& tail, double wn, double zeta) {
  if (!tail.active) return 0.0;
  const double p = tail.exponent;
  auto f = [&](double u) {
    return std::pow(wn, 2.0 - p) * std::pow(u, p - 2.0) / (wn * wn + zeta * zeta * u * u);
  };
  return tail.amplitude * integrate_adaptive(f, 0.0, 1.0, 1e-10, 0.0, 100).value;
}

}  // namespace

OpticalTable OpticalTable::from_rows(std::vector<OpticalRow> rows, double high_tail_exponent) {
  if (rows.size() < 8)
    throw TableValidationError("optical table needs at least 8 rows, got " +
                               std::to_string(rows.size()));
  if (!(high_tail_exponent >= 3.0))
    throw TableValidationError("high-tail exponent must be >= 3");
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!(rows[i].omega > 0.0) || !std::isfinite(rows[i].omega))
      throw TableValidationError("row " + std::to_string(i + 1) + ": omega must be positive",
                                 static_cast<long>(i + 1));
    if (rows[i].eps2 < 0.0 || !std::isfinite(rows[i].eps2))
      throw TableValidationError("row " + std::to_string(i + 1) + ": eps'' must be >= 0",
                                 static_cast<long>(i + 1));
    if (i > 0 && !(rows[i].omega > rows[i - 1].omega))
      throw TableValidationError("row " + std::to_string(i + 1) +
                                     ": omega must be strictly increasing",
                                 static_cast<long>(i + 1));
  }

  OpticalTable table;
  table.rows_ = std::move(rows);
  table.low_ = fit_low_tail(table.rows_);
  const OpticalRow& last = table.rows_.back();
  if (last.eps2 > 0.0) {
    table.high_.active = true;
    table.high_.exponent = high_tail_exponent;
    table.high_.amplitude = last.eps2 * std::pow(last.omega, high_tail_exponent);
  }
  return table;
}

double OpticalTable::eps2_at(double omega) const {
  if (omega <= rows_.front().omega) return rows_.front().eps2;
  if (omega >= rows_.back().omega) return rows_.back().eps2;
  auto it = std::upper_bound(rows_.begin(), rows_.end(), omega,
                             [](double w, const OpticalRow& r) { return w < r.omega; });
  const OpticalRow& hi = *it;
  const OpticalRow& lo = *(it - 1);
  if (lo.eps2 > 0.0 && hi.eps2 > 0.0) {
    const double t = std::log(omega / lo.omega) / std::log(hi.omega / lo.omega);
    return lo.eps2 * std::pow(hi.eps2 / lo.eps2, t);
  }
  const double t = (omega - lo.omega) / (hi.omega - lo.omega);
  return lo.eps2 + t * (hi.eps2 - lo.eps2);
}

KkResult kk_transform(const OpticalTable& table, double zeta) {
  if (!(zeta > 0.0))
    throw SingularModelError("kk_transform: zeta must be > 0 (the transform diverges at 0)");

  auto f = [&](double w) { return w * table.eps2_at(w) / (w * w + zeta * zeta); };
  std::vector<double> breakpoints;
  breakpoints.reserve(table.rows().size());
  for (const auto& r : table.rows()) breakpoints.push_back(r.omega);

  auto mid = integrate_adaptive_partition(f, breakpoints, 1e-9, 0.0, 400);
  const double low = low_tail_integral(table.low_tail(), table.omega_min(), zeta);
  const double high = high_tail_integral(table.high_tail(), table.omega_max(), zeta);

  const double scale = 2.0 / std::numbers::pi;
  return {1.0 + scale * (low + mid.value + high), scale * mid.error};
}

}  // namespace casimir
