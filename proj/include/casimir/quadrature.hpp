// Copyright (c) 2026 the casimir authors
// SPDX-License-Identifier: Apache-2.0

// Globally adaptive Gauss-Kronrod 7/15 quadrature on a finite interval.
// The worst-error segment is bisected until the accumulated error estimate
// drops below max(abs_tol, rel_tol*|integral|) or the segment budget runs
// out. The error estimate follows the QUADPACK rescaling of |K15 - G7|.

#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include <casimir/kahan.hpp>

namespace casimir {

struct IntegrationResult {
  double value = 0.0;
  double error = 0.0;   // accumulated error estimate, same units as value
  int segments = 0;     // segments in the final partition
  bool converged = false;
};

namespace quad_detail {

// QUADPACK dqk15 abscissae (positive half) and weights.
inline constexpr double xgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.0};
inline constexpr double wgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
inline constexpr double wg[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469};

struct Segment {
  double lo, hi, value, error;
};

template <typename F>
Segment gk15(F&& f, double lo, double hi) {
  const double center = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);

  const double fc = f(center);
  double resk = wgk[7] * fc;
  double resg = wg[3] * fc;
  double fv1[7], fv2[7];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * xgk[j];
    fv1[j] = f(center - dx);
    fv2[j] = f(center + dx);
    resk += wgk[j] * (fv1[j] + fv2[j]);
    if (j % 2 == 1) resg += wg[j / 2] * (fv1[j] + fv2[j]);
  }
  const double reskh = resk * 0.5;
  double resasc = wgk[7] * std::fabs(fc - reskh);
  for (int j = 0; j < 7; ++j)
    resasc += wgk[j] * (std::fabs(fv1[j] - reskh) + std::fabs(fv2[j] - reskh));
  resasc *= std::fabs(half);

  double err = std::fabs((resk - resg) * half);
  if (resasc != 0.0 && err != 0.0)
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));

  return {lo, hi, resk * half, err};
}

}  // namespace quad_detail

// Adaptive integration starting from an explicit initial partition. The
// breakpoints must be strictly increasing; extra_subdivisions bounds the
// number of bisections performed beyond the initial segments.
template <typename F>
IntegrationResult integrate_adaptive_partition(F&& f, const std::vector<double>& breakpoints,
                                               double rel_tol, double abs_tol,
                                               int extra_subdivisions) {
  using quad_detail::Segment;
  IntegrationResult out;
  if (breakpoints.size() < 2) {
    out.converged = true;
    return out;
  }

  std::vector<Segment> segs;
  segs.reserve(breakpoints.size() - 1 + static_cast<std::size_t>(std::max(extra_subdivisions, 0)));
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i)
    segs.push_back(quad_detail::gk15(f, breakpoints[i], breakpoints[i + 1]));

  int splits = 0;
  for (;;) {
    KahanSum total, err_total;
    for (const auto& s : segs) {
      total.add(s.value);
      err_total.add(s.error);
    }
    const double tol = std::max(abs_tol, rel_tol * std::fabs(total.value()));
    if (err_total.value() <= tol) {
      out.value = total.value();
      out.error = err_total.value();
      out.segments = static_cast<int>(segs.size());
      out.converged = true;
      return out;
    }
    if (splits >= extra_subdivisions) {
      out.value = total.value();
      out.error = err_total.value();
      out.segments = static_cast<int>(segs.size());
      out.converged = false;
      return out;
    }

    std::size_t worst = 0;
    for (std::size_t i = 1; i < segs.size(); ++i)
      if (segs[i].error > segs[worst].error) worst = i;
    const Segment s = segs[worst];
    const double mid = 0.5 * (s.lo + s.hi);
    if (!(mid > s.lo && mid < s.hi)) {
      // interval at floating-point resolution; cannot refine further
      out.value = 0.0;
      for (const auto& seg : segs) out.value += seg.value;
      out.error = std::numeric_limits<double>::infinity();
      out.segments = static_cast<int>(segs.size());
      out.converged = false;
      return out;
    }
    segs[worst] = quad_detail::gk15(f, s.lo, mid);
    segs.push_back(quad_detail::gk15(f, mid, s.hi));
    std::sort(segs.begin(), segs.end(),
              [](const Segment& a, const Segment& b) { return a.lo < b.lo; });
    ++splits;
  }
}

template <typename F>
IntegrationResult integrate_adaptive(F&& f, double lo, double hi, double rel_tol, double abs_tol,
                                     int max_subdivisions) {
  if (!(hi > lo)) {
    IntegrationResult out;
    out.converged = true;
    return out;
  }
  return integrate_adaptive_partition(std::forward<F>(f), std::vector<double>{lo, hi}, rel_tol,
                                      abs_tol, max_subdivisions);
}

}  // namespace casimir
