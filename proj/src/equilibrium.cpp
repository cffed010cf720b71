#include "casimir/equilibrium.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "casimir/errors.hpp"
#include "casimir/roots.hpp"
#include "casimir/specfun.hpp"
#include "casimir/thermo.hpp"

namespace casimir::equilibrium {

namespace {

using std::numbers::pi;
using specfun::kZeta3;

constexpr double k45OverPi4 = 45.0 / (pi * pi * pi * pi);
constexpr double kIsentropeScale = 2.0 / (3.0 * kZeta3);
constexpr double kFourPi4Over45 = 4.0 * pi * pi * pi * pi / 45.0;
constexpr double kAsymptoticB = 45.0 * kZeta3 / (32.0 * pi * pi * pi * pi * pi * pi);

// Relative step in ln a for numerical dG/da and dP/da.
constexpr double kLogStep = 1e-5;
// |dG/d ln a| below this fraction of v^4 counts as zero.
constexpr double kSlopeResolution = 1e-9;

constexpr roots::RootOptions kRootOptions{1e-12, 200};
constexpr double kBracketCap = 1e4;

double pow4(double x) {
  const double x2 = x * x;
  return x2 * x2;
}

double scaled_pressure(double v, Model model) {
  return model == Model::Exact ? thermo::pressure(v) : thermo::pressure_asymptotic(v);
}

double interior_v(double at, Model model) {
  return model == Model::Exact ? isentrope_v(at) : isentrope_v_asymptotic(at);
}

// G along the path of the problem, at plate distance scale * a_root.
double balance_on_path(const EquilibriumSolution& sol, const BalanceProblem& problem,
                       double scale) {
  const double x = sol.x_root * scale;
  const double v = problem.mode == Mode::Isothermal ? x : interior_v(x, sol.model);
  return g_balance(v, problem.kappa * x, sol.model);
}

void check_kappa(double kappa, const char* what) {
  if (!(kappa >= 0.0)) throw DomainError(std::string(what) + ": kappa must be >= 0");
}

EquilibriumSolution make_solution(Mode mode, const SolveOptions& opt, double kappa,
                                  double x_root, double v, double residual) {
  EquilibriumSolution sol;
  sol.mode = mode;
  sol.model = opt.model;
  sol.kappa = kappa;
  sol.x_root = x_root;
  sol.v = v;
  sol.kappa_at_a = kappa * x_root / v;
  sol.residual = residual;
  if (opt.reference_temperature) {
    // a = x / t with t = k_B T / (pi hbar c), for either mode
    sol.a_physical = x_root * opt.units.length_scale(*opt.reference_temperature);
  }
  return sol;
}

AdiabaticPeak compute_peak(Model model) {
  auto r = [model](double at) { return r_adiabatic(at, model); };
  // golden section only resolves a maximum to ~sqrt(eps); polish it as a
  // root of the difference quotient
  const double rough = roots::find_maximum(r, 0.3, 0.7, 1e-10).first;
  auto slope = [&](double at) {
    const double h = 1e-5 * at;
    return (r(at + h) - r(at - h)) / (2.0 * h);
  };
  const double at_m = roots::find_root(slope, rough - 1e-4, rough + 1e-4, {1e-14, 200});
  return {at_m, std::pow(r(at_m), 0.25)};
}

}  // namespace

std::string_view to_string(Mode mode) {
  return mode == Mode::Isothermal ? "isothermal" : "adiabatic";
}

std::string_view to_string(Stability stability) {
  switch (stability) {
    case Stability::Stable: return "stable";
    case Stability::Unstable: return "unstable";
    case Stability::Marginal: return "marginal";
  }
  return "?";
}

Isentrope Isentrope::from_temperature(double temperature_at_zero, const UnitContext& ctx) {
  ctx.validate();
  if (!(temperature_at_zero > 0.0)) throw DomainError("Isentrope: T(a=0) must be > 0");
  const double t = 1.0 / ctx.length_scale(temperature_at_zero);
  return {t, 1.5 * pi * kZeta3 * t * t};
}

Isentrope Isentrope::from_entropy(double sigma_int) {
  if (!(sigma_int > 0.0)) throw DomainError("Isentrope: entropy must be > 0");
  return {std::sqrt(sigma_int / (1.5 * pi * kZeta3)), sigma_int};
}

double Isentrope::v_at(double a) const {
  if (!(a >= 0.0)) throw DomainError("Isentrope::v_at: a must be >= 0");
  return isentrope_v(a * t);
}

void BalanceProblem::validate() const {
  if (!(kappa >= 0.0 && kappa < 1.0)) throw DomainError("BalanceProblem: kappa must lie in [0, 1)");
}

double g_balance(double v, double v_prime, Model model) {
  if (!(v_prime >= 0.0)) throw DomainError("g_balance: v' must be >= 0");
  return pow4(v) + k45OverPi4 * scaled_pressure(v, model) - pow4(v_prime);
}

double total_pressure(double a, double temperature, double temperature_prime,
                      const UnitContext& ctx) {
  const double v = thermo::reduced_temperature(a, temperature, ctx).v;
  const double v_prime = thermo::reduced_temperature(a, temperature_prime, ctx).v;
  return pi * pi * pi * pi * pi * pi * ctx.hbar_c / (45.0 * pow4(a)) * g_balance(v, v_prime);
}

double r_isothermal(double v, Model model) {
  if (!(v > 0.0)) throw DomainError("r_isothermal: v must be > 0");
  return (pow4(v) + k45OverPi4 * scaled_pressure(v, model)) / pow4(v);
}

EquilibriumSolution solve_isothermal(double kappa, const SolveOptions& opt) {
  check_kappa(kappa, "solve_isothermal");
  const double target = pow4(kappa);
  auto f = [&](double v) { return r_isothermal(v, opt.model) - target; };

  double lo = 0.2;
  double hi = 1.0;
  while (f(lo) > 0.0) {
    lo *= 0.5;
    if (lo < 1e-3) throw ConvergenceError("solve_isothermal: cannot bracket root from below");
  }
  while (f(hi) < 0.0) {
    hi *= 2.0;
    if (hi > kBracketCap)
      throw ConvergenceError("solve_isothermal: no root below v = 1e4 (kappa >= 1?)");
  }
  const double v = roots::find_root(f, lo, hi, kRootOptions);
  EquilibriumSolution sol =
      make_solution(Mode::Isothermal, opt, kappa, v, v, std::abs(f(v)));
  sol.stability = classify_stability(sol, {Mode::Isothermal, kappa});
  return sol;
}

double isentrope_v(double at) {
  if (!(at >= 0.0) || std::isinf(at)) throw DomainError("isentrope_v: at must be finite and >= 0");
  if (at == 0.0) return 0.0;
  const double target = at * at;
  auto f = [&](double v) {
    return kIsentropeScale * (thermo::entropy(v) + kFourPi4Over45 * v * v * v) - target;
  };
  double hi = at;
  while (f(hi) < 0.0) {
    hi *= 2.0;
    if (hi > 1e100) throw ConvergenceError("isentrope_v: cannot bracket root");
  }
  return roots::find_root(f, 0.0, hi, {4e-16 * hi, 400});
}

double isentrope_v_asymptotic(double at) {
  const double arg = 12.0 * pi * pi * at * at - 1.0;
  if (!(arg > 0.0)) throw DomainError("isentrope_v_asymptotic: requires 12 pi^2 (at)^2 > 1");
  return std::cbrt(kAsymptoticB * arg);
}

double r_adiabatic(double at, Model model) {
  if (!(at > 0.0)) throw DomainError("r_adiabatic: at must be > 0");
  const double v = interior_v(at, model);
  return (pow4(v) + k45OverPi4 * scaled_pressure(v, model)) / pow4(at);
}

double r_adiabatic_zero(Model model) {
  const AdiabaticPeak peak = r_adiabatic_peak(model);
  return roots::find_root([model](double at) { return r_adiabatic(at, model); }, 0.2, peak.at_m,
                          kRootOptions);
}

AdiabaticPeak r_adiabatic_peak(Model model) {
  static const AdiabaticPeak exact = compute_peak(Model::Exact);
  static const AdiabaticPeak asymptotic = compute_peak(Model::Asymptotic);
  return model == Model::Exact ? exact : asymptotic;
}

std::vector<EquilibriumSolution> solve_adiabatic(double kappa0, const SolveOptions& opt) {
  check_kappa(kappa0, "solve_adiabatic");
  if (kappa0 >= 1.0) throw DomainError("solve_adiabatic: kappa0 must be < 1");
  const AdiabaticPeak peak = r_adiabatic_peak(opt.model);
  const double target = pow4(kappa0);
  const double r_peak = pow4(peak.kappa_m);
  if (target > r_peak + 1e-12) return {};

  auto f = [&](double at) { return r_adiabatic(at, opt.model) - target; };
  const BalanceProblem problem{Mode::Adiabatic, kappa0};

  auto build = [&](double at, Stability fallback) {
    const double v = interior_v(at, opt.model);
    EquilibriumSolution sol =
        make_solution(Mode::Adiabatic, opt, kappa0, at, v, std::abs(f(at)));
    try {
      sol.stability = classify_stability(sol, problem);
    } catch (const DegenerateError&) {
      sol.stability = fallback;
    }
    return sol;
  };

  if (std::abs(target - r_peak) <= 1e-12) return {build(peak.at_m, Stability::Marginal)};

  const double lower = roots::find_root(f, r_adiabatic_zero(opt.model), peak.at_m, kRootOptions);
  double hi = 2.0 * peak.at_m;
  while (f(hi) > 0.0) {
    hi *= 2.0;
    if (hi > kBracketCap)
      throw ConvergenceError("solve_adiabatic: stable root lies beyond at = 1e4");
  }
  const double upper = roots::find_root(f, peak.at_m, hi, kRootOptions);
  return {build(lower, Stability::Marginal), build(upper, Stability::Marginal)};
}

double balance_slope(const EquilibriumSolution& sol, const BalanceProblem& problem) {
  problem.validate();
  const double up = balance_on_path(sol, problem, std::exp(kLogStep));
  const double down = balance_on_path(sol, problem, std::exp(-kLogStep));
  return (up - down) / (2.0 * kLogStep);
}

Stability classify_stability(const EquilibriumSolution& sol, const BalanceProblem& problem) {
  const double slope = balance_slope(sol, problem);
  if (std::abs(slope) < kSlopeResolution * pow4(sol.v)) {
    throw DegenerateError("classify_stability: dG/da vanishes at the root");
  }
  return slope < 0.0 ? Stability::Stable : Stability::Unstable;
}

OscillationEstimate oscillation_estimate(const EquilibriumSolution& sol,
                                         double temperature_at_zero, double areal_mass,
                                         const UnitContext& ctx) {
  if (sol.stability != Stability::Stable)
    throw DomainError("oscillation_estimate: root is not stable");
  if (!(areal_mass > 0.0)) throw DomainError("oscillation_estimate: mass must be > 0");
  const double length = ctx.length_scale(temperature_at_zero);
  const double a = sol.x_root * length;
  const BalanceProblem problem{sol.mode, sol.kappa};
  const double prefactor = pi * pi * pi * pi * pi * pi * ctx.hbar_c / 45.0;

  auto total = [&](double scale) {
    return prefactor / pow4(a * scale) * balance_on_path(sol, problem, scale);
  };
  const double up = std::exp(kLogStep);
  const double down = std::exp(-kLogStep);
  const double dp_da = (total(up) - total(down)) / (a * (up - down));

  OscillationEstimate est;
  est.stiffness = -dp_da;
  est.force_coeff = units::to_pn_per_cm2(a * est.stiffness);
  est.frequency_coeff =
      std::sqrt(est.stiffness / units::kKgPerM2PerGPerCm2) / (2.0 * pi);
  est.frequency = est.frequency_coeff / std::sqrt(areal_mass);
  return est;
}

}  // namespace casimir::equilibrium
