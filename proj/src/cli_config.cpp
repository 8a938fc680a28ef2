// Copyright (c) 2026 the casimir authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>

#include <CLI11.hpp>

#include <casimir/cli.hpp>

namespace casimir::cli {

namespace {

std::string fmt_full(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

double parse_double(const std::string& token, const std::string& flag) {
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(token, &pos);
  } catch (const std::exception&) {
    throw UsageError(flag + ": cannot parse number '" + token + "'");
  }
  if (pos != token.size()) throw UsageError(flag + ": cannot parse number '" + token + "'");
  return v;
}

const std::map<std::string, ModelKind>& model_kinds() {
  static const std::map<std::string, ModelKind> kinds = {
      {"ideal", ModelKind::Ideal},
      {"plasma", ModelKind::Plasma},
      {"drude", ModelKind::Drude},
      {"table", ModelKind::Table},
      {"imp-ns", ModelKind::ImpNormalSkin},
      {"imp-as", ModelKind::ImpAnomalousSkin},
      {"imp-ir", ModelKind::ImpInfrared},
      {"imp-matched", ModelKind::ImpMatched}};
  return kinds;
}

std::string model_kind_name(ModelKind kind) {
  for (const auto& [name, k] : model_kinds())
    if (k == kind) return name;
  return "?";
}

std::string prescription_kind_name(PrescriptionKind kind) {
  switch (kind) {
    case PrescriptionKind::Auto: return "auto";
    case PrescriptionKind::Drude: return "drude";
    case PrescriptionKind::Plasma: return "plasma";
    case PrescriptionKind::Ideal: return "ideal";
  }
  return "?";
}

// Raw flag values as parsed; counts decide which were actually given.
struct RawArgs {
  std::string model;
  std::string table;
  double wp_ev = 9.0;     // gold-like editable defaults (not from any one source)
  double wp_rads = 0.0;
  double wt_ev = 0.035;
  double wt_rads = 0.0;
  double vf_ratio = 4.67e-3;
  double v_prefactor = 1.0;
  std::string n0 = "auto";
  double ns_upper = 0.0;
  double as_upper = 0.0;
  std::string a_spec;
  double temperature = 0.0;
  std::string t_grid;
  double entropy_step = 0.0;
  double rel_tol = QuadratureSettings{}.rel_tol;
  double abs_tol = QuadratureSettings{}.abs_tol;
  double tail_tol = QuadratureSettings{}.matsubara_tail_tol;
  double tail_cutoff = QuadratureSettings{}.tail_cutoff;
  int max_subdiv = QuadratureSettings{}.max_subdivisions;
  long max_terms = QuadratureSettings{}.max_terms;
  std::string zeta_range;
  double zeta_rads = 0.0;
  std::string q_range;
  std::string out = "-";
  std::string svg;
};

struct SubFlags {
  CLI::App* sub = nullptr;
  CLI::Option* model = nullptr;
  CLI::Option* table = nullptr;
  CLI::Option* wp_ev = nullptr;
  CLI::Option* wp_rads = nullptr;
  CLI::Option* wt_ev = nullptr;
  CLI::Option* wt_rads = nullptr;
  CLI::Option* vf_ratio = nullptr;
  CLI::Option* v_prefactor = nullptr;
  CLI::Option* n0 = nullptr;
  CLI::Option* ns_upper = nullptr;
  CLI::Option* as_upper = nullptr;
  CLI::Option* a = nullptr;
  CLI::Option* temperature = nullptr;
  CLI::Option* t_grid = nullptr;
  CLI::Option* entropy_step = nullptr;
  CLI::Option* zeta_range = nullptr;
  CLI::Option* zeta_rads = nullptr;
  CLI::Option* q_range = nullptr;
  bool has_tolerances = false;
};

void add_material_flags(SubFlags& f, RawArgs& raw, bool with_tau) {
  f.wp_ev = f.sub->add_option("--wp-ev", raw.wp_ev, "plasma frequency in eV");
  f.wp_rads = f.sub->add_option("--wp-rads", raw.wp_rads, "plasma frequency in rad/s");
  f.wp_ev->excludes(f.wp_rads);
  if (with_tau) {
    f.wt_ev = f.sub->add_option("--wt-ev", raw.wt_ev, "relaxation frequency in eV");
    f.wt_rads = f.sub->add_option("--wt-rads", raw.wt_rads, "relaxation frequency in rad/s");
    f.wt_ev->excludes(f.wt_rads);
  }
  f.vf_ratio = f.sub->add_option("--vf-ratio", raw.vf_ratio, "Fermi velocity over c");
  f.v_prefactor =
      f.sub->add_option("--v-prefactor", raw.v_prefactor, "prefactor multiplying v_F to form v");
}

void add_model_flags(SubFlags& f, RawArgs& raw) {
  f.model = f.sub->add_option("--model", raw.model,
                              "material response: ideal|plasma|drude|table|imp-ns|imp-as|imp-ir|"
                              "imp-matched");
  f.table = f.sub->add_option("--table", raw.table, "optical table file (omega [rad/s], eps'')");
  add_material_flags(f, raw, true);
  f.n0 = f.sub->add_option("--n0", raw.n0, "n=0 prescription: auto|drude|plasma|ideal");
  f.ns_upper =
      f.sub->add_option("--ns-upper-rads", raw.ns_upper, "matched-regime normal-skin upper edge");
  f.as_upper = f.sub->add_option("--as-upper-rads", raw.as_upper,
                                 "matched-regime anomalous-skin upper edge");
}

void add_tolerance_flags(SubFlags& f, RawArgs& raw) {
  f.sub->add_option("--rel-tol", raw.rel_tol, "quadrature relative tolerance");
  f.sub->add_option("--abs-tol", raw.abs_tol, "quadrature absolute tolerance [J/m^2]");
  f.sub->add_option("--tail-tol", raw.tail_tol, "Matsubara tail bound, relative");
  f.sub->add_option("--tail-cutoff", raw.tail_cutoff, "dimensionless integrand cutoff");
  f.sub->add_option("--max-subdiv", raw.max_subdiv, "max quadrature subdivisions");
  f.sub->add_option("--max-terms", raw.max_terms, "max Matsubara terms");
  f.has_tolerances = true;
}

void add_output_flags(SubFlags& f, RawArgs& raw) {
  f.sub->add_option("--out", raw.out, "output CSV path ('-' for stdout)");
  f.sub->add_option("--svg", raw.svg, "also write a static SVG line plot");
}

bool given(const CLI::Option* opt) { return opt != nullptr && opt->count() > 0; }

}  // namespace

std::vector<double> parse_value_grid(const std::string& spec, const std::string& flag) {
  if (spec.empty()) throw UsageError(flag + ": empty value");
  std::vector<double> out;
  if (spec.find(':') != std::string::npos) {
    // geometric range lo:hi:n
    std::vector<std::string> parts;
    std::size_t start = 0;
    for (std::size_t pos = spec.find(':'); pos != std::string::npos;
         start = pos + 1, pos = spec.find(':', start))
      parts.push_back(spec.substr(start, pos - start));
    parts.push_back(spec.substr(start));
    if (parts.size() != 3) throw UsageError(flag + ": range must be lo:hi:n, got '" + spec + "'");
    const double lo = parse_double(parts[0], flag);
    const double hi = parse_double(parts[1], flag);
    const long n = static_cast<long>(parse_double(parts[2], flag));
    if (!(lo > 0.0) || !(hi >= lo)) throw UsageError(flag + ": need 0 < lo <= hi");
    if (n < 1 || n > 1000000) throw UsageError(flag + ": point count out of range");
    if (n == 1) {
      out.push_back(lo);
    } else {
      const double ratio = std::log(hi / lo);
      for (long i = 0; i < n; ++i)
        out.push_back(lo * std::exp(ratio * static_cast<double>(i) / static_cast<double>(n - 1)));
    }
    return out;
  }
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = spec.find(',', start);
    const std::string token = spec.substr(start, pos - start);
    out.push_back(parse_double(token, flag));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

RunConfig parse_and_validate(const std::vector<std::string>& args) {
  CLI::App app{"thermal Casimir free energy, pressure and entropy between parallel metal plates"};
  app.name("casimir");
  app.require_subcommand(1);

  RawArgs raw;
  std::map<Command, SubFlags> subs;

  auto make_sub = [&](Command cmd, const char* name, const char* desc) -> SubFlags& {
    SubFlags& f = subs[cmd];
    f.sub = app.add_subcommand(name, desc);
    return f;
  };

  {
    SubFlags& f = make_sub(Command::Energy, "energy", "Casimir free energy per unit area F(a,T)");
    add_model_flags(f, raw);
    f.a = f.sub->add_option("--a", raw.a_spec, "separation [m]: value, list or lo:hi:n")
              ->required();
    f.temperature = f.sub->add_option("--T", raw.temperature, "temperature [K]")->required();
    add_tolerance_flags(f, raw);
    add_output_flags(f, raw);
  }
  {
    SubFlags& f = make_sub(Command::Pressure, "pressure",
                           "Casimir pressure, analytic and finite-difference branches");
    add_model_flags(f, raw);
    f.a = f.sub->add_option("--a", raw.a_spec, "separation [m]: value, list or lo:hi:n")
              ->required();
    f.temperature = f.sub->add_option("--T", raw.temperature, "temperature [K]")->required();
    add_tolerance_flags(f, raw);
    add_output_flags(f, raw);
  }
  {
    SubFlags& f = make_sub(Command::TempCorr, "tempcorr",
                           "temperature correction F(a,T) - E(a) and its relative size");
    add_model_flags(f, raw);
    f.a = f.sub->add_option("--a", raw.a_spec, "separation [m]: value, list or lo:hi:n")
              ->required();
    f.temperature = f.sub->add_option("--T", raw.temperature, "temperature [K]")->required();
    add_tolerance_flags(f, raw);
    add_output_flags(f, raw);
  }
  {
    SubFlags& f = make_sub(Command::Entropy, "entropy", "entropy S = -dF/dT");
    add_model_flags(f, raw);
    f.a = f.sub->add_option("--a", raw.a_spec, "separation [m], single value")->required();
    f.temperature = f.sub->add_option("--T", raw.temperature, "temperature [K]");
    f.t_grid = f.sub->add_option("--T-grid", raw.t_grid, "temperature grid: list or lo:hi:n");
    f.entropy_step = f.sub->add_option("--stencil-h", raw.entropy_step, "stencil step [K]");
    add_tolerance_flags(f, raw);
    add_output_flags(f, raw);
  }
  {
    SubFlags& f = make_sub(Command::Nernst, "nernst",
                           "entropy on a low-T grid with extrapolated T->0 intercept");
    add_model_flags(f, raw);
    f.a = f.sub->add_option("--a", raw.a_spec, "separation [m], single value")->required();
    f.t_grid = f.sub->add_option("--T-grid", raw.t_grid, "temperature grid: list or lo:hi:n")
                   ->required();
    add_tolerance_flags(f, raw);
    add_output_flags(f, raw);
  }
  {
    SubFlags& f = make_sub(Command::Compare, "compare",
                           "fixed-impedance recipe vs matched regimes vs Drude vs plasma");
    add_material_flags(f, raw, true);
    f.a = f.sub->add_option("--a", raw.a_spec, "separations [m]: value, list or lo:hi:n")
              ->required();
    f.temperature = f.sub->add_option("--T", raw.temperature, "temperature [K]")->required();
    add_tolerance_flags(f, raw);
    add_output_flags(f, raw);
  }
  {
    SubFlags& f = make_sub(Command::Reflect, "reflect",
                           "squared TM/TE reflection coefficients over a q grid");
    add_model_flags(f, raw);
    f.zeta_rads = f.sub->add_option("--zeta-rads", raw.zeta_rads,
                                    "imaginary frequency [rad/s]; 0 uses the n=0 prescription")
                      ->required();
    f.q_range = f.sub->add_option("--q-range", raw.q_range, "wave vectors [1/m]: list or lo:hi:n")
                    ->required();
    add_output_flags(f, raw);
  }
  {
    SubFlags& f = make_sub(Command::Epsilon, "epsilon",
                           "dielectric permittivity eps(i zeta) over a zeta grid");
    add_model_flags(f, raw);
    f.zeta_range = f.sub->add_option("--zeta-range", raw.zeta_range,
                                     "frequencies [rad/s]: list or lo:hi:n")
                       ->required();
    add_output_flags(f, raw);
  }
  {
    SubFlags& f = make_sub(Command::Kk, "kk",
                           "eps(i zeta) from tabulated eps''(omega) via the dispersion relation");
    f.table = f.sub->add_option("--table", raw.table, "optical table file")->required();
    f.zeta_range = f.sub->add_option("--zeta-range", raw.zeta_range,
                                     "frequencies [rad/s]: list or lo:hi:n")
                       ->required();
    add_output_flags(f, raw);
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested{app.help()};
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  Command command = Command::Energy;
  for (const auto& [cmd, f] : subs)
    if (f.sub->parsed()) command = cmd;
  const SubFlags& f = subs.at(command);

  RunConfig cfg;
  cfg.command = command;

  // model selection
  if (command == Command::Kk) {
    cfg.model_kind = ModelKind::Table;
  } else if (command == Command::Compare) {
    cfg.model_kind = ModelKind::ImpMatched;  // unused; compare runs its fixed method set
  } else {
    if (!given(f.model)) throw UsageError("--model is required for this command");
    const auto it = model_kinds().find(raw.model);
    if (it == model_kinds().end()) throw UsageError("--model: unknown model '" + raw.model + "'");
    cfg.model_kind = it->second;
  }

  // prescription
  if (f.n0 != nullptr) {
    if (raw.n0 == "auto") cfg.prescription = PrescriptionKind::Auto;
    else if (raw.n0 == "drude") cfg.prescription = PrescriptionKind::Drude;
    else if (raw.n0 == "plasma") cfg.prescription = PrescriptionKind::Plasma;
    else if (raw.n0 == "ideal") cfg.prescription = PrescriptionKind::Ideal;
    else throw UsageError("--n0: unknown prescription '" + raw.n0 + "'");
  }

  const bool is_ideal = cfg.model_kind == ModelKind::Ideal && command != Command::Compare;
  const bool is_table = cfg.model_kind == ModelKind::Table;

  // unit resolution and material assembly
  cfg.material.omega_p = given(f.wp_rads) ? raw.wp_rads : ev_to_radsec(raw.wp_ev);
  cfg.material.omega_tau = given(f.wt_rads) ? raw.wt_rads
                           : (f.wt_ev != nullptr ? ev_to_radsec(raw.wt_ev) : 0.0);
  cfg.material.vf_over_c = raw.vf_ratio;
  cfg.material.v_prefactor = raw.v_prefactor;

  // flag combinations that contradict the chosen model
  const bool any_material_flag = given(f.wp_ev) || given(f.wp_rads) || given(f.wt_ev) ||
                                 given(f.wt_rads) || given(f.vf_ratio) || given(f.v_prefactor);
  if (is_ideal && any_material_flag)
    throw UsageError(
        "--model ideal takes no material parameters; drop --wp-*/--wt-*/--vf-ratio/--v-prefactor");
  if (cfg.model_kind == ModelKind::Plasma && (given(f.wt_ev) || given(f.wt_rads)))
    throw UsageError("--model plasma has no relaxation frequency; drop --wt-ev/--wt-rads");
  if (is_table) {
    if (command != Command::Kk && !given(f.table))
      throw UsageError("--model table requires --table <file>");
    if (given(f.wt_ev) || given(f.wt_rads) || given(f.vf_ratio) || given(f.v_prefactor))
      throw UsageError("--model table takes no Drude parameters; drop --wt-*/--vf-ratio/--v-prefactor");
    if ((given(f.wp_ev) || given(f.wp_rads)) && cfg.prescription != PrescriptionKind::Plasma)
      throw UsageError("--wp-* with --model table is only meaningful for --n0 plasma");
    if (cfg.prescription == PrescriptionKind::Auto && command != Command::Epsilon &&
        command != Command::Kk)
      throw UsageError(
          "--model table cannot resolve --n0 auto; choose --n0 drude|plasma|ideal explicitly");
  } else if (given(f.table)) {
    throw UsageError("--table conflicts with --model " + model_kind_name(cfg.model_kind) +
                     "; use --model table");
  }
  if ((given(f.ns_upper) || given(f.as_upper)) && cfg.model_kind != ModelKind::ImpMatched)
    throw UsageError("--ns-upper-rads/--as-upper-rads apply to --model imp-matched only");
  if (command == Command::Epsilon && !(cfg.model_kind == ModelKind::Plasma ||
                                       cfg.model_kind == ModelKind::Drude || is_table))
    throw UsageError("epsilon requires a dielectric model (--model plasma|drude|table)");

  cfg.table_path = raw.table;
  cfg.ns_upper = raw.ns_upper;
  cfg.as_upper = raw.as_upper;

  // model invariants that can be checked without running
  if (!is_ideal && !is_table && command != Command::Compare) {
    if (!(cfg.material.omega_p > 0.0)) throw UsageError("--wp-rads must be > 0");
    if ((cfg.model_kind == ModelKind::Drude || cfg.model_kind == ModelKind::ImpNormalSkin) &&
        !(cfg.material.omega_tau > 0.0))
      throw UsageError("--model " + model_kind_name(cfg.model_kind) + " requires omega_tau > 0");
    if ((cfg.model_kind == ModelKind::ImpAnomalousSkin ||
         cfg.model_kind == ModelKind::ImpMatched) &&
        !(cfg.material.vf_over_c > 0.0))
      throw UsageError("--model " + model_kind_name(cfg.model_kind) + " requires --vf-ratio > 0");
  }

  // grids
  if (f.a != nullptr && given(f.a)) {
    cfg.a_values = parse_value_grid(raw.a_spec, "--a");
    for (double a : cfg.a_values)
      if (!(a > 0.0)) throw UsageError("--a: separations must be > 0");
    if ((command == Command::Entropy || command == Command::Nernst) && cfg.a_values.size() != 1)
      throw UsageError("--a: this command takes a single separation");
  }
  if (f.temperature != nullptr && given(f.temperature)) {
    if (!(raw.temperature > 0.0)) throw UsageError("--T must be > 0");
    cfg.temperature = raw.temperature;
  }
  if (f.t_grid != nullptr && given(f.t_grid)) {
    cfg.T_values = parse_value_grid(raw.t_grid, "--T-grid");
    for (double t : cfg.T_values)
      if (!(t > 0.0)) throw UsageError("--T-grid: temperatures must be > 0");
    if (!std::is_sorted(cfg.T_values.begin(), cfg.T_values.end()))
      throw UsageError("--T-grid must be ascending");
  }
  if (command == Command::Entropy) {
    if (cfg.T_values.empty() && !given(f.temperature))
      throw UsageError("entropy needs --T or --T-grid");
    if (!cfg.T_values.empty() && given(f.temperature))
      throw UsageError("--T conflicts with --T-grid; give one of them");
    if (given(f.entropy_step)) {
      if (!(raw.entropy_step > 0.0)) throw UsageError("--stencil-h must be > 0");
      cfg.entropy_step = raw.entropy_step;
    }
  }
  if (command == Command::Nernst && cfg.T_values.size() < 4)
    throw UsageError("--T-grid: nernst needs at least 4 grid points");

  if (f.zeta_range != nullptr) {
    cfg.zeta_values = parse_value_grid(raw.zeta_range, "--zeta-range");
    for (double z : cfg.zeta_values)
      if (!(z > 0.0)) throw UsageError("--zeta-range: frequencies must be > 0");
  }
  if (f.zeta_rads != nullptr) {
    if (raw.zeta_rads < 0.0) throw UsageError("--zeta-rads must be >= 0");
    cfg.reflect_zeta = raw.zeta_rads;
    cfg.q_values = parse_value_grid(raw.q_range, "--q-range");
    for (double q : cfg.q_values) {
      if (!(q > 0.0)) throw UsageError("--q-range: wave vectors must be > 0");
      if (cfg.reflect_zeta > 0.0 && q < cfg.reflect_zeta / constants::c)
        throw UsageError("--q-range: q below zeta/c is outside the integration region of the "
                         "free-energy integral; raise q or lower --zeta-rads");
    }
    if (cfg.reflect_zeta == 0.0 && cfg.prescription == PrescriptionKind::Auto && is_table)
      throw UsageError("reflect at zeta = 0 with --model table needs an explicit --n0");
  }

  // tolerances
  if (f.has_tolerances) {
    cfg.settings.rel_tol = raw.rel_tol;
    cfg.settings.abs_tol = raw.abs_tol;
    cfg.settings.matsubara_tail_tol = raw.tail_tol;
    cfg.settings.tail_cutoff = raw.tail_cutoff;
    cfg.settings.max_subdivisions = raw.max_subdiv;
    cfg.settings.max_terms = raw.max_terms;
    try {
      cfg.settings.validate();
    } catch (const std::exception& e) {
      throw UsageError(std::string("tolerance flags: ") + e.what());
    }
  }

  cfg.out_path = raw.out;
  cfg.svg_path = raw.svg;
  return cfg;
}

std::vector<std::string> RunConfig::canonical_args() const {
  std::vector<std::string> out;
  auto push = [&](const std::string& flag, const std::string& value) {
    out.push_back(flag);
    out.push_back(value);
  };
  auto push_grid = [&](const std::string& flag, const std::vector<double>& values) {
    std::string joined;
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (i > 0) joined += ',';
      joined += fmt_full(values[i]);
    }
    push(flag, joined);
  };

  switch (command) {
    case Command::Energy: out.push_back("energy"); break;
    case Command::Pressure: out.push_back("pressure"); break;
    case Command::TempCorr: out.push_back("tempcorr"); break;
    case Command::Entropy: out.push_back("entropy"); break;
    case Command::Nernst: out.push_back("nernst"); break;
    case Command::Compare: out.push_back("compare"); break;
    case Command::Reflect: out.push_back("reflect"); break;
    case Command::Epsilon: out.push_back("epsilon"); break;
    case Command::Kk: out.push_back("kk"); break;
  }

  const bool has_model = command != Command::Kk && command != Command::Compare;
  if (has_model) push("--model", model_kind_name(model_kind));
  if (!table_path.empty()) push("--table", table_path);

  const bool material_used =
      command == Command::Compare ||
      (has_model && model_kind != ModelKind::Ideal && model_kind != ModelKind::Table);
  const bool prescription_used = has_model && command != Command::Epsilon;
  if (material_used) {
    push("--wp-rads", fmt_full(material.omega_p));
    push("--wt-rads", fmt_full(material.omega_tau));
    push("--vf-ratio", fmt_full(material.vf_over_c));
    push("--v-prefactor", fmt_full(material.v_prefactor));
  } else if (model_kind == ModelKind::Table && prescription == PrescriptionKind::Plasma &&
             prescription_used) {
    push("--wp-rads", fmt_full(material.omega_p));
  }

  if (prescription_used) push("--n0", prescription_kind_name(prescription));
  if (model_kind == ModelKind::ImpMatched) {
    if (ns_upper > 0.0) push("--ns-upper-rads", fmt_full(ns_upper));
    if (as_upper > 0.0) push("--as-upper-rads", fmt_full(as_upper));
  }

  if (!a_values.empty()) push_grid("--a", a_values);
  if (temperature > 0.0) push("--T", fmt_full(temperature));
  if (!T_values.empty()) push_grid("--T-grid", T_values);
  if (command == Command::Entropy && entropy_step > 0.0) push("--stencil-h", fmt_full(entropy_step));
  if (!zeta_values.empty()) push_grid("--zeta-range", zeta_values);
  if (command == Command::Reflect) {
    push("--zeta-rads", fmt_full(reflect_zeta));
    push_grid("--q-range", q_values);
  }

  const bool tolerances_used = command != Command::Reflect && command != Command::Epsilon &&
                               command != Command::Kk;
  if (tolerances_used) {
    push("--rel-tol", fmt_full(settings.rel_tol));
    push("--abs-tol", fmt_full(settings.abs_tol));
    push("--tail-tol", fmt_full(settings.matsubara_tail_tol));
    push("--tail-cutoff", fmt_full(settings.tail_cutoff));
    push("--max-subdiv", std::to_string(settings.max_subdivisions));
    push("--max-terms", std::to_string(settings.max_terms));
  }
  return out;
}

}  // namespace casimir::cli
