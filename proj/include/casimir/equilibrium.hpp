#pragma once

// Mechanical equilibrium between the interior photon gas (temperature T,
// between the plates) and the exterior one (temperature T').
//
// The total pressure is (pi^6 hbar c / 45 a^4) G(v, v') with
//   G(v, v') = v^4 + (45/pi^4) p(v) - v'^4,
// and roots are sought in the scaled form kappa^4 = R(x):
//   isothermal  x = v,   kappa  = T'/T,       R(v)  = (v^4 + 45/pi^4 p(v)) / v^4
//   adiabatic   x = a t, kappa0 = T'/T(a=0),  R(at) = (v^4 + 45/pi^4 p(v)) / (at)^4
// where along an isentrope v = v(at) solves
//   (at)^2 = (2 / 3 zeta(3)) (s(v) + 4 pi^4 v^3 / 45).
// A root is stable iff dG/da < 0 there.

#include <optional>
#include <string_view>
#include <vector>

#include "casimir/units.hpp"

namespace casimir::equilibrium {

enum class Mode { Isothermal, Adiabatic };
enum class Stability { Stable, Unstable, Marginal };

/// Exact uses the full p(v) and v(at). Asymptotic replaces them by the
/// high-temperature forms p_as = -v zeta(3)/(4 pi^2) and v_as(at).
enum class Model { Exact, Asymptotic };

std::string_view to_string(Mode mode);
std::string_view to_string(Stability stability);

/// Adiabatic family of constant interior entropy. t has units 1/m and
/// equals k_B T(a=0) / (pi hbar c).
struct Isentrope {
  double t = 0.0;
  double entropy_const = 0.0;  // sigma_int, 1/m^2

  static Isentrope from_temperature(double temperature_at_zero, const UnitContext& ctx = {});
  static Isentrope from_entropy(double sigma_int);

  /// Interior reduced temperature at plate distance a (m).
  double v_at(double a) const;
};

struct BalanceProblem {
  Mode mode = Mode::Isothermal;
  double kappa = 0.0;  // T'/T (isothermal) or T'/T(a=0) (adiabatic)

  void validate() const;
};

struct EquilibriumSolution {
  Mode mode = Mode::Isothermal;
  Model model = Model::Exact;
  double kappa = 0.0;       // input ratio
  double x_root = 0.0;      // v (isothermal) or a t (adiabatic)
  double v = 0.0;           // interior reduced temperature at the root
  Stability stability = Stability::Unstable;
  double kappa_at_a = 0.0;  // v'/v at the root
  double residual = 0.0;    // |kappa^4 - R(x_root)|
  std::optional<double> a_physical;  // m, when a reference temperature was given
};

struct OscillationEstimate {
  double stiffness = 0.0;        // -dP/da, Pa/m
  double force_coeff = 0.0;      // a * stiffness, pN/cm^2
  double frequency_coeff = 0.0;  // nu * sqrt(m), Hz sqrt(g/cm^2)
  double frequency = 0.0;        // Hz for the given areal mass
};

struct AdiabaticPeak {
  double at_m = 0.0;
  double kappa_m = 0.0;
};

struct SolveOptions {
  Model model = Model::Exact;
  /// T for isothermal roots, T(a=0) for adiabatic roots; enables a_physical.
  std::optional<double> reference_temperature;
  UnitContext units{};
};

double g_balance(double v, double v_prime, Model model = Model::Exact);

/// Total pressure on the plates in Pa.
double total_pressure(double a, double temperature, double temperature_prime,
                      const UnitContext& ctx = {});

double r_isothermal(double v, Model model = Model::Exact);

EquilibriumSolution solve_isothermal(double kappa, const SolveOptions& opt = {});

/// Inverts the isentrope equation for v >= 0.
double isentrope_v(double at);

/// (B (12 pi^2 (at)^2 - 1))^{1/3} with B = 45 zeta(3) / (32 pi^6).
double isentrope_v_asymptotic(double at);

double r_adiabatic(double at, Model model = Model::Exact);

/// The at > 0 where the adiabatic R crosses zero from below.
double r_adiabatic_zero(Model model = Model::Exact);

/// Location and height of the single maximum of the adiabatic R. Cached.
AdiabaticPeak r_adiabatic_peak(Model model = Model::Exact);

/// Zero roots when kappa0 exceeds kappa_M, one marginal root at the peak
/// when it equals kappa_M, otherwise the (unstable, stable) pair in
/// ascending at.
std::vector<EquilibriumSolution> solve_adiabatic(double kappa0, const SolveOptions& opt = {});

/// dG/d(ln a) at the root, following the path of the problem's mode.
double balance_slope(const EquilibriumSolution& sol, const BalanceProblem& problem);

/// Stable iff dG/da < 0. Throws DegenerateError when the slope is below
/// numerical resolution (a root at the peak of R).
Stability classify_stability(const EquilibriumSolution& sol, const BalanceProblem& problem);

/// Linear restoring force and oscillation frequency about a stable root.
/// areal_mass in g/cm^2; temperature_at_zero is T(a=0) in K.
OscillationEstimate oscillation_estimate(const EquilibriumSolution& sol,
                                         double temperature_at_zero, double areal_mass,
                                         const UnitContext& ctx = {});

}  // namespace casimir::equilibrium
