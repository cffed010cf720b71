#include "casimir/thermo.hpp"

#include <cmath>
#include <string>

#include "casimir/errors.hpp"

namespace casimir {

void UnitContext::validate() const {
  if (!(hbar_c > 0.0)) throw DomainError("UnitContext: hbar_c must be > 0");
  if (!(k_B > 0.0)) throw DomainError("UnitContext: k_B must be > 0");
}

double UnitContext::length_scale(double temperature) const {
  validate();
  if (!(temperature > 0.0)) throw DomainError("length_scale: temperature must be > 0");
  return std::numbers::pi * hbar_c / (k_B * temperature);
}

namespace thermo {

namespace {

using std::numbers::pi;
using specfun::kZeta3;

constexpr double kPi4Over45 = pi * pi * pi * pi / 45.0;
constexpr double kInvFourPi2 = 1.0 / (4.0 * pi * pi);

void require_nonnegative_v(double v, const char* what) {
  if (!(v >= 0.0) || std::isinf(v))
    throw DomainError(std::string(what) + ": v must be finite and >= 0");
}

ThermoPoint zero_temperature_point(Form form) {
  return {0.0, -1.0 / 720.0, 0.0, -1.0 / 240.0, -1.0 / 720.0, form};
}

// k and h are passed in so the approximations can zero them.
ThermoPoint form_a(double v, double k, double h, Form tag) {
  const double v2 = v * v;
  const double v3 = v2 * v;
  ThermoPoint t;
  t.v = v;
  t.f = -1.0 / 720.0 - v3 * (0.5 * kZeta3 - kPi4Over45 * v + k);
  t.s = v2 * (1.5 * kZeta3 - 4.0 * kPi4Over45 * v + 3.0 * k - h);
  t.p = -1.0 / 240.0 - v3 * (kPi4Over45 * v + h);
  t.e = -1.0 / 720.0 + v3 * (kZeta3 - 3.0 * kPi4Over45 * v + 2.0 * k - h);
  t.form = tag;
  return t;
}

ThermoPoint form_b(double v, double k, double h, Form tag) {
  ThermoPoint t;
  t.v = v;
  t.f = -kInvFourPi2 * v * (0.5 * kZeta3 + k);
  t.s = kInvFourPi2 * (0.5 * kZeta3 + k + h);
  t.p = -kInvFourPi2 * v * (kZeta3 + 2.0 * k - h);
  t.e = kInvFourPi2 * v * h;
  t.form = tag;
  return t;
}

double form_a_argument(double v) { return 1.0 / v; }
double form_b_argument(double v) { return 4.0 * pi * pi * v; }

}  // namespace

std::string_view to_string(Form form) {
  switch (form) {
    case Form::A: return "A";
    case Form::B: return "B";
    case Form::Auto: return "Auto";
    case Form::LowT: return "LowT";
    case Form::HighT: return "HighT";
  }
  return "?";
}

Form resolve(FormSelector form, double v) {
  switch (form) {
    case FormSelector::A: return Form::A;
    case FormSelector::B: return Form::B;
    case FormSelector::Auto: break;
  }
  return v < kAutoCrossover ? Form::A : Form::B;
}

ReducedState reduced_temperature(double a, double temperature, const UnitContext& ctx) {
  ctx.validate();
  if (!(a > 0.0)) throw DomainError("reduced_temperature: a must be > 0");
  if (!(temperature >= 0.0)) throw DomainError("reduced_temperature: T must be >= 0");
  return {a * ctx.k_B * temperature / (pi * ctx.hbar_c), a, temperature};
}

double g_of_v(double v, FormSelector form) {
  require_nonnegative_v(v, "g_of_v");
  if (v == 0.0) return 0.0;
  if (resolve(form, v) == Form::A) {
    return -v * v * v * (0.5 * kZeta3 + specfun::kfun(form_a_argument(v)));
  }
  return 1.0 / 720.0 - kPi4Over45 * v * v * v * v -
         kInvFourPi2 * v * (0.5 * kZeta3 + specfun::kfun(form_b_argument(v)));
}

ThermoPoint thermo_point(double v, FormSelector form) {
  require_nonnegative_v(v, "thermo_point");
  const Form used = resolve(form, v);
  if (v == 0.0) return zero_temperature_point(used);
  if (used == Form::A) {
    const double x = form_a_argument(v);
    return form_a(v, specfun::kfun(x), specfun::hfun(x), Form::A);
  }
  const double x = form_b_argument(v);
  return form_b(v, specfun::kfun(x), specfun::hfun(x), Form::B);
}

ThermoPoint thermo_point_approx(double v, Regime regime) {
  require_nonnegative_v(v, "thermo_point_approx");
  if (regime == Regime::LowT) return form_a(v, 0.0, 0.0, Form::LowT);
  return form_b(v, 0.0, 0.0, Form::HighT);
}

double pressure(double v, FormSelector form) { return thermo_point(v, form).p; }

double entropy(double v, FormSelector form) { return thermo_point(v, form).s; }

double pressure_asymptotic(double v) {
  require_nonnegative_v(v, "pressure_asymptotic");
  return thermo_point_approx(v, Regime::HighT).p;
}

double casimir_pressure_t0(double a, const UnitContext& ctx) {
  ctx.validate();
  if (!(a > 0.0)) throw DomainError("casimir_pressure_t0: a must be > 0");
  const double a2 = a * a;
  return units::to_n_per_cm2(pi * pi * ctx.hbar_c / (240.0 * a2 * a2));
}

DimensionalPoint dimensional_point(double a, double temperature, const UnitContext& ctx) {
  const ReducedState state = reduced_temperature(a, temperature, ctx);
  const ThermoPoint t = thermo_point(state.v);
  const double energy_scale = pi * pi * ctx.hbar_c / (a * a * a);
  DimensionalPoint d;
  d.v = state.v;
  d.pressure = energy_scale / a * t.p;
  d.free_energy = energy_scale * t.f;
  d.entropy = pi / (a * a) * t.s;
  d.internal_energy = energy_scale * t.e;
  return d;
}

}  // namespace thermo
}  // namespace casimir
