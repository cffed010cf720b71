#pragma once

// Scaled thermodynamic functions of the parallel-plate photon gas.
//
// With the reduced temperature v = a k_B T / (pi hbar c), the finite,
// non-extensive parts of free energy, entropy, pressure and internal energy
// per plate area are
//
//   phi = (pi^2 hbar c / a^3) f(v)     sigma = (pi / a^2) s(v)
//   P   = (pi^2 hbar c / a^4) p(v)     eps   = (pi^2 hbar c / a^3) e(v)
//
// Each of f, s, p, e has two exact representations. Form A sums k, h at
// argument 1/v and converges fast at low temperature; form B sums them at
// 4 pi^2 v and converges fast at high temperature.

#include <optional>
#include <string_view>

#include "casimir/specfun.hpp"
#include "casimir/units.hpp"

namespace casimir::thermo {

enum class Form { A, B, Auto, LowT, HighT };
enum class FormSelector { A, B, Auto };
enum class Regime { LowT, HighT };

std::string_view to_string(Form form);

/// Below this Auto picks form A, otherwise form B. Both series arguments
/// (1/v and 4 pi^2 v) equal 2 pi here.
inline constexpr double kAutoCrossover = 0.5 / std::numbers::pi;

/// Resolves Auto to A or B for the given v.
Form resolve(FormSelector form, double v);

struct ReducedState {
  double v = 0.0;
  std::optional<double> a;            // m
  std::optional<double> temperature;  // K
};

struct ThermoPoint {
  double v = 0.0;
  double f = 0.0;
  double s = 0.0;
  double p = 0.0;
  double e = 0.0;
  Form form = Form::Auto;
};

/// Finite parts of the dimensional quantities (SI).
struct DimensionalPoint {
  double v = 0.0;
  double pressure = 0.0;        // Pa
  double free_energy = 0.0;     // J/m^2
  double entropy = 0.0;         // 1/m^2 (entropy per area in units of k_B)
  double internal_energy = 0.0; // J/m^2
};

ReducedState reduced_temperature(double a, double temperature, const UnitContext& ctx = {});

/// g(v) entering the interior free energy; g(0) = 0.
double g_of_v(double v, FormSelector form = FormSelector::Auto);

ThermoPoint thermo_point(double v, FormSelector form = FormSelector::Auto);

/// Leading terms only: form A with k = h = 0 (LowT) or form B with k = h = 0 (HighT).
ThermoPoint thermo_point_approx(double v, Regime regime);

/// Scaled pressure alone; same value as thermo_point(v, form).p.
double pressure(double v, FormSelector form = FormSelector::Auto);

/// Scaled entropy alone; same value as thermo_point(v, form).s.
double entropy(double v, FormSelector form = FormSelector::Auto);

/// High-temperature pressure asymptote -v zeta(3) / (4 pi^2).
double pressure_asymptotic(double v);

/// Zero-temperature Casimir pressure magnitude pi^2 hbar c / (240 a^4), in N/cm^2.
double casimir_pressure_t0(double a, const UnitContext& ctx = {});

DimensionalPoint dimensional_point(double a, double temperature, const UnitContext& ctx = {});

/// s(v) as v -> infinity.
inline constexpr double kEntropyHighT =
    specfun::kZeta3 / (8.0 * std::numbers::pi * std::numbers::pi);

}  // namespace casimir::thermo
