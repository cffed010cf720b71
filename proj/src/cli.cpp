#include "casimir/cli.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "casimir/equilibrium.hpp"
#include "casimir/errors.hpp"
#include "casimir/output.hpp"
#include "casimir/specfun.hpp"
#include "casimir/thermo.hpp"

namespace casimir::cli {

namespace {

using output::Cell;
using output::OutputRecord;
namespace eq = equilibrium;

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kRoomTemperature = 291.15;  // 18 C
constexpr double kHotTemperature = 518.15;   // 245 C

double parse_number(const std::string& text, std::size_t& used) {
  try {
    return std::stod(text, &used);
  } catch (const std::exception&) {
    throw DomainError("cannot parse number from '" + text + "'");
  }
}

double relative_deviation(double computed, double published) {
  return (computed - published) / published;
}

struct GlobalOptions {
  std::string format;
  std::string out_path;
  std::string constants_file;
  std::optional<double> hbar_c;
  std::optional<double> k_B;
};

UnitContext load_units(const GlobalOptions& g) {
  UnitContext ctx;
  if (!g.constants_file.empty()) {
    std::ifstream in(g.constants_file);
    if (!in) throw DomainError("cannot open constants file '" + g.constants_file + "'");
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
      throw DomainError(std::string("constants file: ") + e.what());
    }
    if (doc.contains("hbar_c")) ctx.hbar_c = doc.at("hbar_c").get<double>();
    if (doc.contains("k_B")) ctx.k_B = doc.at("k_B").get<double>();
  }
  if (g.hbar_c) ctx.hbar_c = *g.hbar_c;
  if (g.k_B) ctx.k_B = *g.k_B;
  ctx.validate();
  return ctx;
}

OutputRecord new_record(const std::string& command, const UnitContext& ctx) {
  OutputRecord r;
  r.meta = {
      {"program", "casimir-thermo"},
      {"command", command},
      {"hbar_c_J_m", output::format_number(ctx.hbar_c)},
      {"k_B_J_per_K", output::format_number(ctx.k_B)},
      {"series_rel_tol", output::format_number(specfun::SeriesControl{}.rel_tol)},
      {"root_abs_tol", output::format_number(1e-12)},
  };
  return r;
}

// ---- eval ----------------------------------------------------------------

struct EvalOptions {
  std::optional<double> v;
  std::string a;
  std::string temperature;
  bool celsius = false;
  std::string form = "Auto";
  std::string approx;
};

thermo::FormSelector parse_form(const std::string& s) {
  if (s == "A") return thermo::FormSelector::A;
  if (s == "B") return thermo::FormSelector::B;
  if (s == "Auto" || s == "auto") return thermo::FormSelector::Auto;
  throw DomainError("unknown form '" + s + "' (expected A, B or Auto)");
}

OutputRecord cmd_eval(const EvalOptions& o, const UnitContext& ctx) {
  const bool dimensional = !o.a.empty() || !o.temperature.empty();
  if (o.v && dimensional) throw DomainError("eval: give either --v or --a/--T, not both");
  if (!o.v && (o.a.empty() || o.temperature.empty()))
    throw DomainError("eval: need --v, or both --a and --T");

  double v = 0.0;
  double a = kNaN;
  double temperature = kNaN;
  if (o.v) {
    v = *o.v;
  } else {
    a = parse_length(o.a);
    temperature = parse_temperature(o.temperature, o.celsius);
    v = thermo::reduced_temperature(a, temperature, ctx).v;
  }

  thermo::ThermoPoint t;
  if (o.approx.empty()) {
    t = thermo::thermo_point(v, parse_form(o.form));
  } else if (o.approx == "lowT" || o.approx == "LowT") {
    t = thermo::thermo_point_approx(v, thermo::Regime::LowT);
  } else if (o.approx == "highT" || o.approx == "HighT") {
    t = thermo::thermo_point_approx(v, thermo::Regime::HighT);
  } else {
    throw DomainError("unknown approximation '" + o.approx + "' (expected lowT or highT)");
  }

  OutputRecord r = new_record("eval", ctx);
  r.columns = {"v", "f", "s", "p", "e", "form"};
  std::vector<Cell> row = {t.v, t.f, t.s, t.p, t.e, std::string(thermo::to_string(t.form))};
  if (!o.v) {
    const double a2 = a * a;
    const double pressure = std::numbers::pi * std::numbers::pi * ctx.hbar_c / (a2 * a2) * t.p;
    r.columns.insert(r.columns.end(), {"a_um", "T_K", "P_Pa", "P_N_per_cm2"});
    row.insert(row.end(), {units::to_micron(a), temperature, pressure,
                           units::to_n_per_cm2(pressure)});
  }
  r.add_row(std::move(row));
  return r;
}

// ---- sweep ---------------------------------------------------------------

struct SweepOptions {
  std::string variable = "v";
  double from = 0.01;
  double to = 1.0;
  int steps = 100;
  bool log = false;
  std::vector<std::string> columns;
};

std::vector<double> make_grid(const SweepOptions& o) {
  if (o.steps < 2) throw DomainError("sweep: --steps must be >= 2");
  if (!(o.to > o.from)) throw DomainError("sweep: --to must exceed --from");
  if (o.log && !(o.from > 0.0)) throw DomainError("sweep: --log needs --from > 0");
  std::vector<double> grid(o.steps);
  for (int i = 0; i < o.steps; ++i) {
    const double u = static_cast<double>(i) / (o.steps - 1);
    grid[i] = o.log ? o.from * std::pow(o.to / o.from, u) : o.from + (o.to - o.from) * u;
  }
  grid.back() = o.to;
  return grid;
}

template <class F>
double or_nan(F&& f) {
  try {
    return f();
  } catch (const DomainError&) {
    return kNaN;
  }
}

void select_columns(OutputRecord& r, const std::vector<std::string>& wanted) {
  if (wanted.empty()) return;
  std::vector<std::size_t> keep = {0};
  for (const auto& name : wanted) {
    if (name == r.columns[0]) continue;  // the grid variable is always kept
    bool found = false;
    for (std::size_t i = 1; i < r.columns.size(); ++i) {
      if (r.columns[i] == name) {
        keep.push_back(i);
        found = true;
      }
    }
    if (!found) throw DomainError("sweep: unknown column '" + name + "'");
  }
  OutputRecord sel;
  sel.meta = r.meta;
  for (std::size_t i : keep) sel.columns.push_back(r.columns[i]);
  for (const auto& row : r.rows) {
    std::vector<Cell> cells;
    for (std::size_t i : keep) cells.push_back(row[i]);
    sel.add_row(std::move(cells));
  }
  r = std::move(sel);
}

OutputRecord cmd_sweep(const SweepOptions& o, const UnitContext& ctx) {
  const std::vector<double> grid = make_grid(o);
  OutputRecord r = new_record("sweep", ctx);
  r.meta.emplace_back("variable", o.variable);
  if (o.variable == "v") {
    if (!(o.from >= 0.0)) throw DomainError("sweep: v must be >= 0");
    r.columns = {"v",        "f",        "s",        "p",         "e",
                 "f_lowT",   "s_lowT",   "p_lowT",   "e_lowT",    "f_highT",
                 "s_highT",  "p_highT",  "e_highT",  "R_isothermal"};
    for (double v : grid) {
      const auto t = thermo::thermo_point(v);
      const auto lo = thermo::thermo_point_approx(v, thermo::Regime::LowT);
      const auto hi = thermo::thermo_point_approx(v, thermo::Regime::HighT);
      const double r_iso = or_nan([&] { return eq::r_isothermal(v); });
      r.add_row({v, t.f, t.s, t.p, t.e, lo.f, lo.s, lo.p, lo.e, hi.f, hi.s, hi.p, hi.e, r_iso});
    }
  } else if (o.variable == "at") {
    if (!(o.from >= 0.0)) throw DomainError("sweep: at must be >= 0");
    r.columns = {"at", "v", "v_as", "R", "R_as"};
    for (double at : grid) {
      const double v = eq::isentrope_v(at);
      const double v_as = or_nan([&] { return eq::isentrope_v_asymptotic(at); });
      const double r_exact = or_nan([&] { return eq::r_adiabatic(at); });
      const double r_as = or_nan([&] { return eq::r_adiabatic(at, eq::Model::Asymptotic); });
      r.add_row({at, v, v_as, r_exact, r_as});
    }
  } else {
    throw DomainError("sweep: --var must be v or at");
  }
  select_columns(r, o.columns);
  return r;
}

// ---- equilibrium ---------------------------------------------------------

struct EquilibriumOptions {
  bool isothermal = false;
  bool adiabatic = false;
  std::optional<double> kappa;
  std::string temperature;
  bool celsius = false;
  std::optional<double> mass;
  bool asymptotic = false;
};

OutputRecord cmd_equilibrium(const EquilibriumOptions& o, const UnitContext& ctx,
                             std::ostream& err) {
  if (o.isothermal == o.adiabatic)
    throw DomainError("equilibrium: choose exactly one of --isothermal or --adiabatic");
  if (!o.kappa) throw DomainError("equilibrium: --kappa is required");
  const double kappa = *o.kappa;
  if (!(kappa >= 0.0 && kappa < 1.0)) throw DomainError("equilibrium: kappa must lie in [0, 1)");
  if (o.mass && !(*o.mass > 0.0)) throw DomainError("equilibrium: --mass must be > 0");

  eq::SolveOptions opt;
  opt.model = o.asymptotic ? eq::Model::Asymptotic : eq::Model::Exact;
  opt.units = ctx;
  std::optional<double> temperature;
  if (!o.temperature.empty()) {
    temperature = parse_temperature(o.temperature, o.celsius);
    opt.reference_temperature = temperature;
  }

  std::vector<eq::EquilibriumSolution> roots;
  if (o.isothermal) {
    roots.push_back(eq::solve_isothermal(kappa, opt));
  } else {
    roots = eq::solve_adiabatic(kappa, opt);
    if (roots.empty()) {
      const auto peak = eq::r_adiabatic_peak(opt.model);
      std::ostringstream msg;
      msg << "no adiabatic equilibrium: kappa0 = " << kappa << " exceeds kappa_M = "
          << peak.kappa_m;
      throw NoSolutionError(msg.str());
    }
  }

  OutputRecord r = new_record("equilibrium", ctx);
  r.meta.emplace_back("model", o.asymptotic ? "asymptotic" : "exact");
  if (temperature) r.meta.emplace_back("reference_T_K", output::format_number(*temperature));
  r.columns = {"mode",       "kappa",        "root",        "v",
               "stability",  "kappa_a",      "residual",    "a_um",
               "stiffness_Pa_per_m", "force_coeff_pN_per_cm2",
               "freq_coeff_Hz_sqrt_g_per_cm2", "frequency_Hz"};
  for (const auto& sol : roots) {
    double stiffness = kNaN, force = kNaN, freq_coeff = kNaN, freq = kNaN;
    if (sol.stability == eq::Stability::Stable && temperature) {
      const auto est = eq::oscillation_estimate(sol, *temperature, o.mass.value_or(1.0), ctx);
      stiffness = est.stiffness;
      force = est.force_coeff;
      freq_coeff = est.frequency_coeff;
      if (o.mass) freq = est.frequency;
    } else if (o.mass && sol.stability == eq::Stability::Stable) {
      err << "note: --mass needs a reference temperature (--T) for oscillation data\n";
    }
    r.add_row({std::string(eq::to_string(sol.mode)), sol.kappa, sol.x_root, sol.v,
               std::string(eq::to_string(sol.stability)), sol.kappa_at_a, sol.residual,
               sol.a_physical ? units::to_micron(*sol.a_physical) : kNaN, stiffness, force,
               freq_coeff, freq});
  }
  return r;
}

// ---- reproduce -----------------------------------------------------------

struct Table3Column {
  double kappa, v, a_um, v_as;
};
constexpr Table3Column kTable3[] = {
    {0.0, 0.2419, 5.981, 0.2414},  {0.2, 0.2421, 5.984, 0.2415},
    {0.4, 0.24340, 6.032, 0.2435}, {0.6, 0.2532, 6.260, 0.2528},
    {0.8, 0.2879, 7.117, 0.2877},  {0.95, 0.4233, 10.46, 0.4233},
};

struct Table4Column {
  double kappa0;
  double at_unstable, a_unstable_um, kappa_a_unstable;
  double at_stable, a_stable_um, kappa_a_stable;
};
constexpr Table4Column kTable4[] = {
    {0.2, 0.2767, 6.839, 0.2285, 26.03, 643.4, 0.99998},
    {0.4, 0.2819, 6.969, 0.4592, 3.235, 79.98, 0.9984},
    {0.6, 0.3148, 7.783, 0.7093, 0.8917, 22.05, 0.9778},
    {0.65, 0.3441, 8.506, 0.7876, 0.6503, 16.08, 0.9565},
};

void comparison_row(OutputRecord& r, std::vector<Cell> keys, double computed, double published) {
  keys.insert(keys.end(), {computed, published, relative_deviation(computed, published)});
  r.add_row(std::move(keys));
}

OutputRecord reproduce_table3(const UnitContext& ctx) {
  OutputRecord r = new_record("reproduce table3", ctx);
  r.meta.emplace_back("reference_T_K", output::format_number(kRoomTemperature));
  r.columns = {"quantity", "kappa", "computed", "published", "rel_dev"};
  eq::SolveOptions exact;
  exact.reference_temperature = kRoomTemperature;
  exact.units = ctx;
  eq::SolveOptions asym = exact;
  asym.model = eq::Model::Asymptotic;
  for (const auto& col : kTable3) {
    const auto sol = eq::solve_isothermal(col.kappa, exact);
    const auto sol_as = eq::solve_isothermal(col.kappa, asym);
    comparison_row(r, {std::string("v"), col.kappa}, sol.x_root, col.v);
    comparison_row(r, {std::string("a_18C_um"), col.kappa}, units::to_micron(*sol.a_physical),
                   col.a_um);
    comparison_row(r, {std::string("v_as"), col.kappa}, sol_as.x_root, col.v_as);
  }
  return r;
}

OutputRecord reproduce_table4(const UnitContext& ctx) {
  OutputRecord r = new_record("reproduce table4", ctx);
  r.meta.emplace_back("reference_T_K", output::format_number(kRoomTemperature));
  r.columns = {"branch", "quantity", "kappa0", "computed", "published", "rel_dev"};
  eq::SolveOptions opt;
  opt.reference_temperature = kRoomTemperature;
  opt.units = ctx;
  for (const auto& col : kTable4) {
    const auto roots = eq::solve_adiabatic(col.kappa0, opt);
    const auto& lo = roots.at(0);
    const auto& hi = roots.at(1);
    const std::string u = "unstable", s = "stable";
    comparison_row(r, {u, std::string("at"), col.kappa0}, lo.x_root, col.at_unstable);
    comparison_row(r, {u, std::string("a_18C_um"), col.kappa0}, units::to_micron(*lo.a_physical),
                   col.a_unstable_um);
    comparison_row(r, {u, std::string("kappa_a"), col.kappa0}, lo.kappa_at_a,
                   col.kappa_a_unstable);
    comparison_row(r, {s, std::string("at"), col.kappa0}, hi.x_root, col.at_stable);
    comparison_row(r, {s, std::string("a_18C_um"), col.kappa0}, units::to_micron(*hi.a_physical),
                   col.a_stable_um);
    comparison_row(r, {s, std::string("kappa_a"), col.kappa0}, hi.kappa_at_a, col.kappa_a_stable);
  }
  return r;
}

struct OscillationRange {
  double force_min, force_max, freq_min, freq_max;
};

OscillationRange oscillation_range(double t0, const UnitContext& ctx) {
  eq::SolveOptions opt;
  opt.reference_temperature = t0;
  opt.units = ctx;
  OscillationRange range{INFINITY, -INFINITY, INFINITY, -INFINITY};
  for (const auto& col : kTable4) {
    const auto est = eq::oscillation_estimate(eq::solve_adiabatic(col.kappa0, opt).at(1), t0, 1.0,
                                              ctx);
    range.force_min = std::min(range.force_min, est.force_coeff);
    range.force_max = std::max(range.force_max, est.force_coeff);
    range.freq_min = std::min(range.freq_min, est.frequency_coeff);
    range.freq_max = std::max(range.freq_max, est.frequency_coeff);
  }
  return range;
}

OutputRecord reproduce_constants(const UnitContext& ctx) {
  OutputRecord r = new_record("reproduce constants", ctx);
  r.columns = {"quantity", "computed", "published", "rel_dev"};
  auto row = [&](const char* name, double computed, double published) {
    comparison_row(r, {std::string(name)}, computed, published);
  };
  const auto peak = eq::r_adiabatic_peak();
  const auto room = oscillation_range(kRoomTemperature, ctx);
  const auto hot = oscillation_range(kHotTemperature, ctx);
  row("zeta3", specfun::polylog(3, 1.0), 1.2020569);
  row("casimir_pressure_1um_N_per_cm2", thermo::casimir_pressure_t0(units::from_micron(1.0), ctx),
      1.3001e-7);
  row("v_per_um_at_18C",
      thermo::reduced_temperature(units::from_micron(1.0), kRoomTemperature, ctx).v, 0.04);
  row("at_R_zero", eq::r_adiabatic_zero(), 0.2763);
  row("at_M", peak.at_m, 0.4391);
  row("kappa_M", peak.kappa_m, 0.68542);
  row("force_coeff_min_pN_per_cm2", room.force_min, 0.39);
  row("force_coeff_max_pN_per_cm2", room.force_max, 28.0);
  row("freq_coeff_min_mHz_sqrt_g_per_cm2", room.freq_min * 1e3, 0.12);
  row("freq_coeff_max_mHz_sqrt_g_per_cm2", room.freq_max * 1e3, 6.7);
  row("force_ratio_245C_to_18C", hot.force_max / room.force_max, 10.0);
  row("freq_ratio_245C_to_18C", hot.freq_max / room.freq_max, 4.2);
  return r;
}

}  // namespace

double parse_length(const std::string& text) {
  std::size_t used = 0;
  const double x = parse_number(text, used);
  const std::string unit = text.substr(used);
  double scale = units::kMicron;
  if (unit.empty() || unit == "um") {
    scale = units::kMicron;
  } else if (unit == "nm") {
    scale = 1e-9;
  } else if (unit == "mm") {
    scale = 1e-3;
  } else if (unit == "m") {
    scale = 1.0;
  } else {
    throw DomainError("unknown length unit '" + unit + "' (expected um, nm, mm or m)");
  }
  return x * scale;
}

double parse_temperature(const std::string& text, bool celsius) {
  std::size_t used = 0;
  const double x = parse_number(text, used);
  const std::string unit = text.substr(used);
  if (unit == "K") return x;
  if (unit == "C") return units::from_celsius(x);
  if (!unit.empty()) throw DomainError("unknown temperature unit '" + unit + "' (expected K or C)");
  return celsius ? units::from_celsius(x) : x;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite-temperature Casimir thermodynamics and plate equilibria", "casimir"};
  app.require_subcommand(1);

  GlobalOptions g;
  if (const char* env = std::getenv("CASIMIR_FORMAT")) g.format = env;
  if (g.format.empty()) g.format = "csv";
  app.add_option("--format", g.format, "Output format: csv or json (env CASIMIR_FORMAT)");
  app.add_option("--out", g.out_path, "Write output to this file instead of stdout");
  app.add_option("--constants", g.constants_file,
                 "JSON file with hbar_c (J m) and/or k_B (J/K) overrides");
  app.add_option("--hbar-c", g.hbar_c, "Override hbar*c in J m");
  app.add_option("--kB", g.k_B, "Override Boltzmann constant in J/K");

  EvalOptions eval_opt;
  auto* eval = app.add_subcommand("eval", "Scaled thermodynamic functions f, s, p, e at one point");
  eval->add_option("--v", eval_opt.v, "Reduced temperature v");
  eval->add_option("--a", eval_opt.a, "Plate distance (bare number = um)");
  eval->add_option("--T", eval_opt.temperature, "Temperature (bare number = K)");
  eval->add_flag("--celsius", eval_opt.celsius, "Bare temperatures are in Celsius");
  eval->add_option("--form", eval_opt.form, "A, B or Auto");
  eval->add_option("--approx", eval_opt.approx, "lowT or highT leading-term approximation");

  SweepOptions sweep_opt;
  auto* sweep = app.add_subcommand("sweep", "Grid of function values for plotting");
  sweep->add_option("--var", sweep_opt.variable, "v or at");
  sweep->add_option("--from", sweep_opt.from, "Grid start");
  sweep->add_option("--to", sweep_opt.to, "Grid end");
  sweep->add_option("--steps", sweep_opt.steps, "Number of grid points (>= 2)");
  sweep->add_flag("--log", sweep_opt.log, "Geometric grid");
  sweep->add_option("--columns", sweep_opt.columns, "Subset of columns to emit")->delimiter(',');

  EquilibriumOptions eq_opt;
  auto* equil = app.add_subcommand("equilibrium", "Roots of the pressure balance");
  equil->add_flag("--isothermal", eq_opt.isothermal, "Interior at fixed T");
  equil->add_flag("--adiabatic", eq_opt.adiabatic, "Interior at fixed entropy");
  equil->add_option("--kappa,--kappa0", eq_opt.kappa, "T'/T (isothermal) or T'/T(a=0) (adiabatic)");
  equil->add_option("--T,--T0", eq_opt.temperature, "Reference temperature (bare number = K)");
  equil->add_flag("--celsius", eq_opt.celsius, "Bare temperatures are in Celsius");
  equil->add_option("--mass", eq_opt.mass, "Areal mass of the movable plate in g/cm^2");
  equil->add_flag("--asymptotic", eq_opt.asymptotic, "Use the high-temperature asymptotic model");

  std::string target;
  auto* repro = app.add_subcommand("reproduce", "Recompute published tables and constants");
  repro->add_option("target", target, "table3, table4 or constants")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalidInput;
  }

  try {
    const UnitContext ctx = load_units(g);
    const output::Format format = output::parse_format(g.format);
    OutputRecord record;
    if (eval->parsed()) {
      record = cmd_eval(eval_opt, ctx);
    } else if (sweep->parsed()) {
      record = cmd_sweep(sweep_opt, ctx);
    } else if (equil->parsed()) {
      record = cmd_equilibrium(eq_opt, ctx, err);
    } else if (target == "table3") {
      record = reproduce_table3(ctx);
    } else if (target == "table4") {
      record = reproduce_table4(ctx);
    } else if (target == "constants") {
      record = reproduce_constants(ctx);
    } else {
      throw DomainError("reproduce: unknown target '" + target + "'");
    }

    if (g.out_path.empty()) {
      output::write(record, format, out);
    } else {
      std::ofstream file(g.out_path);
      if (!file) throw DomainError("cannot open output file '" + g.out_path + "'");
      output::write(record, format, file);
    }
    return kOk;
  } catch (const NoSolutionError& e) {
    err << "error: " << e.what() << '\n';
    return kNoSolution;
  } catch (const ConvergenceError& e) {
    err << "error: " << e.what() << '\n';
    return kConvergenceFailure;
  } catch (const DegenerateError& e) {
    err << "error: " << e.what() << '\n';
    return kConvergenceFailure;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const nlohmann::json::exception& e) {
    err << "error: constants file: " << e.what() << '\n';
    return kInvalidInput;
  }
}

}  // namespace casimir::cli
