// Copyright (c) 2026 the casimir authors
// SPDX-License-Identifier: Apache-2.0

// Material response on the imaginary frequency axis: dielectric functions,
// the dispersion-relation transform of tabulated eps''(omega) data, and the
// three surface-impedance regimes plus the frequency-matched selector.

#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include <casimir/errors.hpp>
#include <casimir/units.hpp>

namespace casimir {

struct MaterialParams {
  double omega_p = 0.0;    // plasma frequency, rad/s
  double omega_tau = 0.0;  // relaxation frequency, rad/s
  double vf_over_c = 0.0;  // Fermi velocity over c
  double v_prefactor = 1.0;  // dimensionless factor multiplying v_F to form v
  void validate() const;
};

// Gaussian-unit conductivity, sigma = omega_p^2 / (4 pi omega_tau), in rad/s.
struct Conductivity {
  double sigma = 0.0;
};

Conductivity drude_sigma(const MaterialParams& params);

inline double anomalous_frequency(const MaterialParams& p) {
  return anomalous_frequency(p.vf_over_c, p.omega_p);
}

// Frequency boundaries between impedance regimes, half-open [lower, upper).
// When as_upper <= ns_upper the anomalous band is empty and the selector
// switches straight from normal skin to infrared optics at ns_upper.
struct RegimeBreakpoints {
  double ns_upper = 0.0;  // rad/s, top of the normal-skin band
  double as_upper = 0.0;  // rad/s, top of the anomalous-skin band
  static RegimeBreakpoints defaults_for(const MaterialParams& params);
  void validate() const;
};

enum class ImpedanceRegime { NormalSkin, AnomalousSkin, InfraredOptics };

const char* regime_name(ImpedanceRegime regime);

struct OpticalRow {
  double omega;  // rad/s, strictly increasing
  double eps2;   // eps''(omega), >= 0
};

// Immutable table of eps''(omega) with analytic extensions below and above
// the sampled window. Interpolation between rows is log-log linear where
// both endpoints are positive, linear otherwise.
class OpticalTable {
public:
  struct LowTail {
    enum class Kind { None, Drude, PowerLaw } kind = Kind::None;
    // Drude: eps2(w) = amplitude / (w (w^2 + omega_tau^2))
    // PowerLaw: eps2(w) = amplitude * w^exponent  (exponent > -2)
    double amplitude = 0.0;
    double omega_tau = 0.0;
    double exponent = 0.0;
  };
  struct HighTail {
    bool active = false;
    double exponent = 3.0;   // eps2(w) = amplitude * w^-exponent
    double amplitude = 0.0;
  };

  static OpticalTable from_rows(std::vector<OpticalRow> rows, double high_tail_exponent = 3.0);

  const std::vector<OpticalRow>& rows() const { return rows_; }
  double omega_min() const { return rows_.front().omega; }
  double omega_max() const { return rows_.back().omega; }
  double eps2_at(double omega) const;  // omega within [omega_min, omega_max]
  const LowTail& low_tail() const { return low_; }
  const HighTail& high_tail() const { return high_; }

private:
  OpticalTable() = default;
  std::vector<OpticalRow> rows_;
  LowTail low_;
  HighTail high_;
};

struct IdealMetal {};
struct Plasma {
  MaterialParams params;
};
struct Drude {
  MaterialParams params;
};
struct Tabulated {
  std::shared_ptr<const OpticalTable> table;
};
struct ImpedanceNormalSkin {
  MaterialParams params;
};
struct ImpedanceAnomalousSkin {
  MaterialParams params;
};
struct ImpedanceInfrared {
  MaterialParams params;
};
struct ImpedanceMatched {
  MaterialParams params;
  RegimeBreakpoints breakpoints;
};

using ResponseModel = std::variant<IdealMetal, Plasma, Drude, Tabulated, ImpedanceNormalSkin,
                                   ImpedanceAnomalousSkin, ImpedanceInfrared, ImpedanceMatched>;

void validate_model(const ResponseModel& model);
bool is_dielectric(const ResponseModel& model);  // Plasma, Drude, Tabulated
bool is_impedance(const ResponseModel& model);
std::string model_name(const ResponseModel& model);

inline ResponseModel tabulated_model(OpticalTable table) {
  return Tabulated{std::make_shared<const OpticalTable>(std::move(table))};
}

// eps(i zeta) for the dielectric variants; zeta must be positive. At zeta = 0
// the Drude/Plasma/tabulated permittivities diverge and a zero-frequency
// prescription has to be used instead (SingularModelError).
double eps_imag_axis(const ResponseModel& model, double zeta);

struct KkResult {
  double eps;         // eps(i zeta)
  double quad_error;  // quadrature error estimate on eps
};

// eps(i zeta) = 1 + (2/pi) Int_0^inf w eps''(w) / (w^2 + zeta^2) dw evaluated
// as analytic low tail + adaptive quadrature over the table + high tail.
KkResult kk_transform(const OpticalTable& table, double zeta);

// Dimensionless surface impedance Z(i zeta) for the impedance variants:
//   infrared optics:   zeta / sqrt(omega_p^2 + zeta^2)
//   normal skin:       sqrt(zeta / (4 pi sigma)) = sqrt(zeta omega_tau) / omega_p
//   anomalous skin:    ((v/c) zeta^2 / omega_p^2)^(1/3), v = v_prefactor * v_F
double impedance_imag_axis(const ResponseModel& model, double zeta);

struct MatchedImpedance {
  double value = 0.0;
  ImpedanceRegime regime = ImpedanceRegime::NormalSkin;
  double boundary_jump = 0.0;  // |Z step| across the breakpoint nearest to zeta
};

MatchedImpedance matched_impedance(const MaterialParams& params, const RegimeBreakpoints& bp,
                                   double zeta);

}  // namespace casimir
