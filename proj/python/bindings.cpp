#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "casimir/equilibrium.hpp"
#include "casimir/errors.hpp"
#include "casimir/specfun.hpp"
#include "casimir/thermo.hpp"

namespace py = pybind11;
using namespace pybind11::literals;

namespace sf = casimir::specfun;
namespace th = casimir::thermo;
namespace eq = casimir::equilibrium;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Finite-temperature Casimir thermodynamics for parallel plates";

  py::register_exception<casimir::DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<casimir::ConvergenceError>(m, "ConvergenceError", PyExc_RuntimeError);
  py::register_exception<casimir::NoSolutionError>(m, "NoSolutionError", PyExc_RuntimeError);
  py::register_exception<casimir::DegenerateError>(m, "DegenerateError", PyExc_RuntimeError);

  // special functions
  py::class_<sf::SeriesControl>(m, "SeriesControl")
      .def(py::init<>())
      .def(py::init([](double rel_tol, int max_terms) {
             sf::SeriesControl c{rel_tol, max_terms};
             c.validate();
             return c;
           }),
           "rel_tol"_a, "max_terms"_a)
      .def_readwrite("rel_tol", &sf::SeriesControl::rel_tol)
      .def_readwrite("max_terms", &sf::SeriesControl::max_terms);

  m.attr("ZETA3") = sf::kZeta3;
  m.def("zeta", &sf::zeta, "r"_a, "control"_a = sf::SeriesControl{});
  m.def("polylog", &sf::polylog, "r"_a, "y"_a, "control"_a = sf::SeriesControl{});
  m.def("bose_sum", &sf::bose_sum, "r"_a, "x"_a, "control"_a = sf::SeriesControl{});
  m.def("jfun", &sf::jfun, "x"_a, "control"_a = sf::SeriesControl{});
  m.def("kfun", &sf::kfun, "x"_a, "control"_a = sf::SeriesControl{});
  m.def("hfun", &sf::hfun, "x"_a, "control"_a = sf::SeriesControl{});
  m.def("polylog_moment_antiderivative", &sf::polylog_moment_antiderivative, "s"_a, "r"_a, "z"_a,
        "control"_a = sf::SeriesControl{});

  // scaled thermodynamics
  py::class_<casimir::UnitContext>(m, "UnitContext")
      .def(py::init<>())
      .def(py::init([](double hbar_c, double k_B) {
             casimir::UnitContext c{hbar_c, k_B};
             c.validate();
             return c;
           }),
           "hbar_c"_a, "k_B"_a)
      .def_readwrite("hbar_c", &casimir::UnitContext::hbar_c)
      .def_readwrite("k_B", &casimir::UnitContext::k_B)
      .def("length_scale", &casimir::UnitContext::length_scale, "temperature"_a);

  py::enum_<th::Form>(m, "Form")
      .value("A", th::Form::A)
      .value("B", th::Form::B)
      .value("Auto", th::Form::Auto)
      .value("LowT", th::Form::LowT)
      .value("HighT", th::Form::HighT);
  py::enum_<th::FormSelector>(m, "FormSelector")
      .value("A", th::FormSelector::A)
      .value("B", th::FormSelector::B)
      .value("Auto", th::FormSelector::Auto);
  py::enum_<th::Regime>(m, "Regime").value("LowT", th::Regime::LowT).value("HighT", th::Regime::HighT);

  py::class_<th::ReducedState>(m, "ReducedState")
      .def_readonly("v", &th::ReducedState::v)
      .def_readonly("a", &th::ReducedState::a)
      .def_readonly("temperature", &th::ReducedState::temperature);

  py::class_<th::ThermoPoint>(m, "ThermoPoint")
      .def_readonly("v", &th::ThermoPoint::v)
      .def_readonly("f", &th::ThermoPoint::f)
      .def_readonly("s", &th::ThermoPoint::s)
      .def_readonly("p", &th::ThermoPoint::p)
      .def_readonly("e", &th::ThermoPoint::e)
      .def_readonly("form", &th::ThermoPoint::form)
      .def("__repr__", [](const th::ThermoPoint& t) {
        return "ThermoPoint(v=" + std::to_string(t.v) + ", f=" + std::to_string(t.f) +
               ", s=" + std::to_string(t.s) + ", p=" + std::to_string(t.p) +
               ", e=" + std::to_string(t.e) + ")";
      });

  py::class_<th::DimensionalPoint>(m, "DimensionalPoint")
      .def_readonly("v", &th::DimensionalPoint::v)
      .def_readonly("pressure", &th::DimensionalPoint::pressure)
      .def_readonly("free_energy", &th::DimensionalPoint::free_energy)
      .def_readonly("entropy", &th::DimensionalPoint::entropy)
      .def_readonly("internal_energy", &th::DimensionalPoint::internal_energy);

  m.def("reduced_temperature", &th::reduced_temperature, "a"_a, "temperature"_a,
        "ctx"_a = casimir::UnitContext{});
  m.def("g_of_v", &th::g_of_v, "v"_a, "form"_a = th::FormSelector::Auto);
  m.def("thermo_point", &th::thermo_point, "v"_a, "form"_a = th::FormSelector::Auto);
  m.def("thermo_point_approx", &th::thermo_point_approx, "v"_a, "regime"_a);
  m.def("casimir_pressure_t0", &th::casimir_pressure_t0, "a"_a, "ctx"_a = casimir::UnitContext{});
  m.def("dimensional_point", &th::dimensional_point, "a"_a, "temperature"_a,
        "ctx"_a = casimir::UnitContext{});

  // equilibrium
  py::enum_<eq::Mode>(m, "Mode")
      .value("Isothermal", eq::Mode::Isothermal)
      .value("Adiabatic", eq::Mode::Adiabatic);
  py::enum_<eq::Stability>(m, "Stability")
      .value("Stable", eq::Stability::Stable)
      .value("Unstable", eq::Stability::Unstable)
      .value("Marginal", eq::Stability::Marginal);
  py::enum_<eq::Model>(m, "Model").value("Exact", eq::Model::Exact).value("Asymptotic", eq::Model::Asymptotic);

  py::class_<eq::BalanceProblem>(m, "BalanceProblem")
      .def(py::init([](eq::Mode mode, double kappa) {
             eq::BalanceProblem p{mode, kappa};
             p.validate();
             return p;
           }),
           "mode"_a, "kappa"_a)
      .def_readonly("mode", &eq::BalanceProblem::mode)
      .def_readonly("kappa", &eq::BalanceProblem::kappa);

  py::class_<eq::EquilibriumSolution>(m, "EquilibriumSolution")
      .def_readonly("mode", &eq::EquilibriumSolution::mode)
      .def_readonly("model", &eq::EquilibriumSolution::model)
      .def_readonly("kappa", &eq::EquilibriumSolution::kappa)
      .def_readonly("x_root", &eq::EquilibriumSolution::x_root)
      .def_readonly("v", &eq::EquilibriumSolution::v)
      .def_readonly("stability", &eq::EquilibriumSolution::stability)
      .def_readonly("kappa_at_a", &eq::EquilibriumSolution::kappa_at_a)
      .def_readonly("residual", &eq::EquilibriumSolution::residual)
      .def_readonly("a_physical", &eq::EquilibriumSolution::a_physical);

  py::class_<eq::OscillationEstimate>(m, "OscillationEstimate")
      .def_readonly("stiffness", &eq::OscillationEstimate::stiffness)
      .def_readonly("force_coeff", &eq::OscillationEstimate::force_coeff)
      .def_readonly("frequency_coeff", &eq::OscillationEstimate::frequency_coeff)
      .def_readonly("frequency", &eq::OscillationEstimate::frequency);

  py::class_<eq::AdiabaticPeak>(m, "AdiabaticPeak")
      .def_readonly("at_m", &eq::AdiabaticPeak::at_m)
      .def_readonly("kappa_m", &eq::AdiabaticPeak::kappa_m);

  auto make_options = [](eq::Model model, std::optional<double> reference_temperature,
                         const casimir::UnitContext& ctx) {
    eq::SolveOptions opt;
    opt.model = model;
    opt.reference_temperature = reference_temperature;
    opt.units = ctx;
    return opt;
  };

  m.def("g_balance", &eq::g_balance, "v"_a, "v_prime"_a, "model"_a = eq::Model::Exact);
  m.def("total_pressure", &eq::total_pressure, "a"_a, "temperature"_a, "temperature_prime"_a,
        "ctx"_a = casimir::UnitContext{});
  m.def("r_isothermal", &eq::r_isothermal, "v"_a, "model"_a = eq::Model::Exact);
  m.def(
      "solve_isothermal",
      [make_options](double kappa, eq::Model model, std::optional<double> reference_temperature,
                     const casimir::UnitContext& ctx) {
        return eq::solve_isothermal(kappa, make_options(model, reference_temperature, ctx));
      },
      "kappa"_a, "model"_a = eq::Model::Exact, "reference_temperature"_a = py::none(),
      "ctx"_a = casimir::UnitContext{});
  m.def("isentrope_v", &eq::isentrope_v, "at"_a);
  m.def("isentrope_v_asymptotic", &eq::isentrope_v_asymptotic, "at"_a);
  m.def("r_adiabatic", &eq::r_adiabatic, "at"_a, "model"_a = eq::Model::Exact);
  m.def("r_adiabatic_zero", &eq::r_adiabatic_zero, "model"_a = eq::Model::Exact);
  m.def("r_adiabatic_peak", &eq::r_adiabatic_peak, "model"_a = eq::Model::Exact);
  m.def(
      "solve_adiabatic",
      [make_options](double kappa0, eq::Model model, std::optional<double> reference_temperature,
                     const casimir::UnitContext& ctx) {
        return eq::solve_adiabatic(kappa0, make_options(model, reference_temperature, ctx));
      },
      "kappa0"_a, "model"_a = eq::Model::Exact, "reference_temperature"_a = py::none(),
      "ctx"_a = casimir::UnitContext{});
  m.def("classify_stability", &eq::classify_stability, "solution"_a, "problem"_a);
  m.def("oscillation_estimate", &eq::oscillation_estimate, "solution"_a, "temperature_at_zero"_a,
        "areal_mass"_a, "ctx"_a = casimir::UnitContext{});
}
