// Copyright (c) 2026 the casimir authors
// SPDX-License-Identifier: Apache-2.0

#include "cli_internal.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <thread>

#include <casimir/cli.hpp>

namespace casimir::cli {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.11e", v);
  return buf;
}

int thread_count() {
  const char* env = std::getenv("CASIMIR_THREADS");
  if (env == nullptr) return 1;
  const int n = std::atoi(env);
  return n > 0 ? n : 1;
}

// Output of one sweep point: CSV rows plus up to one (x, y) plot point per
// row and a convergence flag.
struct SweepItem {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::pair<double, double>> points;
  bool failed = false;
};

// Evaluate fn over items, possibly on CASIMIR_THREADS workers; results keep
// input order so the output is identical however many threads ran.
template <typename In, typename Fn>
std::vector<SweepItem> map_ordered(const std::vector<In>& items, Fn fn) {
  std::vector<SweepItem> out(items.size());
  const int threads = std::min<int>(thread_count(), static_cast<int>(items.size()));
  if (threads <= 1) {
    for (std::size_t i = 0; i < items.size(); ++i) out[i] = fn(items[i]);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(items.size());
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(threads));
  for (int t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= items.size()) return;
        try {
          out[i] = fn(items[i]);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    });
  for (auto& th : pool) th.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

ResponseModel build_model(const RunConfig& cfg, const std::shared_ptr<const OpticalTable>& table) {
  switch (cfg.model_kind) {
    case ModelKind::Ideal: return IdealMetal{};
    case ModelKind::Plasma: return Plasma{cfg.material};
    case ModelKind::Drude: return Drude{cfg.material};
    case ModelKind::Table: return Tabulated{table};
    case ModelKind::ImpNormalSkin: return ImpedanceNormalSkin{cfg.material};
    case ModelKind::ImpAnomalousSkin: return ImpedanceAnomalousSkin{cfg.material};
    case ModelKind::ImpInfrared: return ImpedanceInfrared{cfg.material};
    case ModelKind::ImpMatched: {
      RegimeBreakpoints bp = RegimeBreakpoints::defaults_for(cfg.material);
      if (cfg.ns_upper > 0.0) bp.ns_upper = cfg.ns_upper;
      if (cfg.as_upper > 0.0) bp.as_upper = cfg.as_upper;
      return ImpedanceMatched{cfg.material, bp};
    }
  }
  return IdealMetal{};
}

N0Prescription build_prescription(const RunConfig& cfg) {
  switch (cfg.prescription) {
    case PrescriptionKind::Auto: return AutoPrescription{};
    case PrescriptionKind::Drude: return DrudeLimit{};
    case PrescriptionKind::Plasma: return PlasmaLike{cfg.material.omega_p};
    case PrescriptionKind::Ideal: return IdealLike{};
  }
  return AutoPrescription{};
}

struct Document {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> trailer;  // '#'-prefixed summary lines
  std::vector<detail_svg::Series> series;
  std::string x_label, y_label;
  bool failed = false;
};

void append_items(Document& doc, const std::vector<SweepItem>& items, const std::string& label) {
  detail_svg::Series series;
  series.label = label;
  for (const auto& item : items) {
    for (const auto& row : item.rows) doc.rows.push_back(row);
    for (const auto& p : item.points) {
      series.xs.push_back(p.first);
      series.ys.push_back(p.second);
    }
    doc.failed = doc.failed || item.failed;
  }
  doc.series.push_back(std::move(series));
}

Document run_energy(const RunConfig& cfg, const ResponseModel& model,
                    const N0Prescription& prescription) {
  Document doc;
  doc.header = {"a_m", "T_K", "free_energy_J_per_m2", "n_terms", "quad_error_J_per_m2",
                "tail_bound_J_per_m2", "status"};
  doc.x_label = "a_m";
  doc.y_label = "free_energy_J_per_m2";
  auto items = map_ordered(cfg.a_values, [&](double a) {
    SweepItem item;
    try {
      const FreeEnergyResult r = free_energy(a, cfg.temperature, model, prescription, cfg.settings);
      item.rows.push_back({num(a), num(cfg.temperature), num(r.value), std::to_string(r.n_terms),
                           num(r.quad_error), num(r.tail_bound), "ok"});
      item.points.emplace_back(a, r.value);
    } catch (const ConvergenceError&) {
      item.rows.push_back({num(a), num(cfg.temperature), num(kNaN), "0", num(kNaN), num(kNaN),
                           "convergence_error"});
      item.points.emplace_back(a, kNaN);
      item.failed = true;
    }
    return item;
  });
  append_items(doc, items, "");
  return doc;
}

Document run_pressure(const RunConfig& cfg, const ResponseModel& model,
                      const N0Prescription& prescription) {
  Document doc;
  doc.header = {"a_m",     "T_K",     "pressure_Pa", "pressure_fd_Pa", "fd_discrepancy_rel",
                "n_terms", "quad_error_Pa", "status"};
  doc.x_label = "a_m";
  doc.y_label = "pressure_Pa";
  auto items = map_ordered(cfg.a_values, [&](double a) {
    SweepItem item;
    try {
      const PressureResult r = pressure(a, cfg.temperature, model, prescription, cfg.settings);
      item.rows.push_back({num(a), num(cfg.temperature), num(r.analytic),
                           num(r.finite_difference), num(r.discrepancy),
                           std::to_string(r.n_terms), num(r.quad_error), "ok"});
      item.points.emplace_back(a, r.analytic);
    } catch (const ConvergenceError&) {
      item.rows.push_back(
          {num(a), num(cfg.temperature), num(kNaN), num(kNaN), num(kNaN), "0", num(kNaN),
           "convergence_error"});
      item.points.emplace_back(a, kNaN);
      item.failed = true;
    }
    return item;
  });
  append_items(doc, items, "");
  return doc;
}

Document run_tempcorr(const RunConfig& cfg, const ResponseModel& model,
                      const N0Prescription& prescription) {
  Document doc;
  doc.header = {"a_m",
                "T_K",
                "free_energy_J_per_m2",
                "zero_T_energy_J_per_m2",
                "delta_F_J_per_m2",
                "relative_correction",
                "status"};
  doc.x_label = "a_m";
  doc.y_label = "delta_F_J_per_m2";
  auto items = map_ordered(cfg.a_values, [&](double a) {
    SweepItem item;
    try {
      const TemperatureCorrection r =
          temperature_correction(a, cfg.temperature, model, prescription, cfg.settings);
      item.rows.push_back({num(a), num(cfg.temperature), num(r.finite_T.value),
                           num(r.zero_T.value), num(r.delta_F), num(r.relative), "ok"});
      item.points.emplace_back(a, r.delta_F);
    } catch (const ConvergenceError&) {
      item.rows.push_back({num(a), num(cfg.temperature), num(kNaN), num(kNaN), num(kNaN),
                           num(kNaN), "convergence_error"});
      item.points.emplace_back(a, kNaN);
      item.failed = true;
    }
    return item;
  });
  append_items(doc, items, "");
  return doc;
}

Document run_entropy(const RunConfig& cfg, const ResponseModel& model,
                     const N0Prescription& prescription) {
  Document doc;
  doc.header = {"a_m",
                "T_K",
                "entropy_J_per_m2_K",
                "stencil_h_K",
                "richardson_error_J_per_m2_K",
                "step_warning",
                "status"};
  doc.x_label = "T_K";
  doc.y_label = "entropy_J_per_m2_K";
  const double a = cfg.a_values.front();
  const std::vector<double> temps =
      cfg.T_values.empty() ? std::vector<double>{cfg.temperature} : cfg.T_values;
  auto items = map_ordered(temps, [&](double T) {
    SweepItem item;
    const double h = cfg.entropy_step > 0.0 ? cfg.entropy_step : default_entropy_step(T);
    try {
      const EntropyResult r = entropy(a, T, model, prescription, cfg.settings, h);
      item.rows.push_back({num(a), num(T), num(r.S), num(r.stencil_h), num(r.richardson_error),
                           r.step_warning ? "1" : "0", "ok"});
      item.points.emplace_back(T, r.S);
    } catch (const ConvergenceError&) {
      item.rows.push_back({num(a), num(T), num(kNaN), num(h), num(kNaN), "0",
                           "convergence_error"});
      item.points.emplace_back(T, kNaN);
      item.failed = true;
    }
    return item;
  });
  append_items(doc, items, "");
  return doc;
}

Document run_nernst(const RunConfig& cfg, const ResponseModel& model,
                    const N0Prescription& prescription) {
  Document doc;
  doc.header = {"a_m", "T_K", "entropy_J_per_m2_K", "richardson_error_J_per_m2_K", "stencil_h_K",
                "status"};
  doc.x_label = "T_K";
  doc.y_label = "entropy_J_per_m2_K";
  const double a = cfg.a_values.front();
  detail_svg::Series series;
  try {
    const NernstReport report = nernst_check(a, model, prescription, cfg.settings, cfg.T_values);
    for (const auto& p : report.points) {
      doc.rows.push_back(
          {num(a), num(p.T), num(p.S), num(p.richardson_error), num(p.stencil_h), "ok"});
      series.xs.push_back(p.T);
      series.ys.push_back(p.S);
    }
    doc.trailer.push_back("# nernst_intercept_J_per_m2_K: " + num(report.intercept));
    doc.trailer.push_back("# nernst_intercept_sigma: " + num(report.intercept_sigma));
    doc.trailer.push_back("# nernst_fit_points: " + std::to_string(report.fit_points));
    doc.trailer.push_back(std::string("# nernst_pass: ") + (report.pass ? "true" : "false"));
  } catch (const ConvergenceError&) {
    doc.rows.push_back({num(a), num(kNaN), num(kNaN), num(kNaN), num(kNaN), "convergence_error"});
    doc.trailer.push_back("# nernst_pass: indeterminate (convergence failure)");
    doc.failed = true;
  }
  doc.series.push_back(std::move(series));
  return doc;
}

Document run_compare(const RunConfig& cfg) {
  Document doc;
  doc.header = {"a_m",
                "method",
                "omega_c_rad_s",
                "fixed_regime",
                "n_normal",
                "n_anomalous",
                "n_infrared",
                "free_energy_J_per_m2",
                "zero_T_energy_J_per_m2",
                "delta_F_J_per_m2",
                "relative_correction",
                "status"};
  doc.x_label = "a_m";
  doc.y_label = "delta_F_J_per_m2";

  auto items = map_ordered(cfg.a_values, [&](double a) {
    SweepItem item;
    try {
      const auto rows = prescription_comparison({a}, cfg.temperature, cfg.material, cfg.settings);
      for (const auto& r : rows) {
        item.rows.push_back(
            {num(r.a), comparison_method_name(r.method), num(r.omega_c),
             r.has_fixed_regime ? regime_name(r.fixed_regime) : "-",
             r.has_regime_counts ? std::to_string(r.n_normal) : "-",
             r.has_regime_counts ? std::to_string(r.n_anomalous) : "-",
             r.has_regime_counts ? std::to_string(r.n_infrared) : "-", num(r.free_energy),
             num(r.zero_T), num(r.delta_F), num(r.relative), "ok"});
        item.points.emplace_back(r.a, r.delta_F);
      }
    } catch (const ConvergenceError&) {
      for (const char* method : {"gkm-recipe", "matched", "drude", "plasma"}) {
        item.rows.push_back({num(a), method, num(characteristic_frequency(a)), "-", "-", "-", "-",
                             num(kNaN), num(kNaN), num(kNaN), num(kNaN), "convergence_error"});
        item.points.emplace_back(a, kNaN);
      }
      item.failed = true;
    }
    return item;
  });

  // one plot series per method
  for (int m = 0; m < 4; ++m) {
    detail_svg::Series series;
    series.label = comparison_method_name(static_cast<ComparisonMethod>(m));
    for (const auto& item : items)
      if (item.points.size() == 4) {
        series.xs.push_back(item.points[static_cast<std::size_t>(m)].first);
        series.ys.push_back(item.points[static_cast<std::size_t>(m)].second);
      }
    doc.series.push_back(std::move(series));
  }
  for (const auto& item : items) {
    for (const auto& row : item.rows) doc.rows.push_back(row);
    doc.failed = doc.failed || item.failed;
  }
  return doc;
}

Document run_reflect(const RunConfig& cfg, const ResponseModel& model,
                     const N0Prescription& prescription) {
  Document doc;
  doc.header = {"q_per_m", "r_par_sq", "r_perp_sq"};
  doc.x_label = "q_per_m";
  doc.y_label = "r_perp_sq";
  detail_svg::Series series;
  const N0Prescription resolved =
      cfg.reflect_zeta == 0.0 ? resolve_auto(prescription, model) : prescription;
  for (double q : cfg.q_values) {
    const ReflectionPair r = cfg.reflect_zeta == 0.0
                                 ? n0_term_coefficients(resolved, q)
                                 : reflection_at(model, cfg.reflect_zeta, q);
    doc.rows.push_back({num(q), num(r.r_par_sq), num(r.r_perp_sq)});
    series.xs.push_back(q);
    series.ys.push_back(r.r_perp_sq);
  }
  doc.series.push_back(std::move(series));
  return doc;
}

Document run_epsilon(const RunConfig& cfg, const ResponseModel& model) {
  Document doc;
  doc.header = {"zeta_rad_s", "eps"};
  doc.x_label = "zeta_rad_s";
  doc.y_label = "eps";
  detail_svg::Series series;
  for (double zeta : cfg.zeta_values) {
    const double eps = eps_imag_axis(model, zeta);
    doc.rows.push_back({num(zeta), num(eps)});
    series.xs.push_back(zeta);
    series.ys.push_back(eps);
  }
  doc.series.push_back(std::move(series));
  return doc;
}

Document run_kk(const RunConfig& cfg, const OpticalTable& table) {
  Document doc;
  doc.header = {"zeta_rad_s", "eps", "quad_error"};
  doc.x_label = "zeta_rad_s";
  doc.y_label = "eps";
  detail_svg::Series series;
  for (double zeta : cfg.zeta_values) {
    const KkResult r = kk_transform(table, zeta);
    doc.rows.push_back({num(zeta), num(r.eps), num(r.quad_error)});
    series.xs.push_back(zeta);
    series.ys.push_back(r.eps);
  }
  doc.series.push_back(std::move(series));
  return doc;
}

void write_document(const RunConfig& cfg, const Document& doc, std::ostream& out) {
  out << "# casimir CSV v1\n";
  out << "# args:";
  for (const auto& arg : cfg.canonical_args()) out << ' ' << arg;
  out << '\n';
  for (std::size_t i = 0; i < doc.header.size(); ++i) {
    if (i > 0) out << ',';
    out << doc.header[i];
  }
  out << '\n';
  for (const auto& row : doc.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0) out << ',';
      out << row[i];
    }
    out << '\n';
  }
  for (const auto& line : doc.trailer) out << line << '\n';
}

}  // namespace

int run(const RunConfig& cfg) {
  std::shared_ptr<const OpticalTable> table;
  if (cfg.model_kind == ModelKind::Table)
    table = std::make_shared<const OpticalTable>(ingest_optical_table(cfg.table_path));

  const ResponseModel model = build_model(cfg, table);
  const N0Prescription prescription = build_prescription(cfg);

  Document doc;
  switch (cfg.command) {
    case Command::Energy: doc = run_energy(cfg, model, prescription); break;
    case Command::Pressure: doc = run_pressure(cfg, model, prescription); break;
    case Command::TempCorr: doc = run_tempcorr(cfg, model, prescription); break;
    case Command::Entropy: doc = run_entropy(cfg, model, prescription); break;
    case Command::Nernst: doc = run_nernst(cfg, model, prescription); break;
    case Command::Compare: doc = run_compare(cfg); break;
    case Command::Reflect: doc = run_reflect(cfg, model, prescription); break;
    case Command::Epsilon: doc = run_epsilon(cfg, model); break;
    case Command::Kk: doc = run_kk(cfg, *table); break;
  }

  if (cfg.out_path == "-") {
    write_document(cfg, doc, std::cout);
  } else {
    std::ofstream out(cfg.out_path);
    if (!out) throw std::runtime_error("cannot open output file '" + cfg.out_path + "'");
    write_document(cfg, doc, out);
    if (!out.good()) throw std::runtime_error("write failed for '" + cfg.out_path + "'");
  }

  if (!cfg.svg_path.empty())
    detail_svg::write_svg_line_plot(cfg.svg_path, doc.series, doc.x_label, doc.y_label);

  return doc.failed ? 2 : 0;
}

int cli_main(const std::vector<std::string>& args) {
  try {
    const RunConfig cfg = parse_and_validate(args);
    return run(cfg);
  } catch (const HelpRequested& help) {
    std::cout << help.text;
    return 0;
  } catch (const UsageError& e) {
    std::cerr << "casimir: " << e.what() << "\n";
    return 1;
  } catch (const TableValidationError& e) {
    std::cerr << "casimir: " << e.what() << "\n";
    return 1;
  } catch (const ConvergenceError& e) {
    std::cerr << "casimir: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "casimir: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace casimir::cli
