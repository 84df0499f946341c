#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "curvar/detector.hpp"
#include "curvar/oracles.hpp"
#include "curvar/presets.hpp"
#include "curvar/variance.hpp"

namespace py = pybind11;
using namespace curvar;

PYBIND11_MODULE(_curvar, m) {
  m.doc() = "Curvature corrections to Gaussian-smeared field variance";

  py::class_<GaussianSmearing>(m, "GaussianSmearing")
      .def(py::init([](double T, double sigma, double l0) {
             GaussianSmearing s{T, sigma, l0};
             s.validate();
             return s;
           }),
           py::arg("T"), py::arg("sigma"), py::arg("l0"))
      .def_readonly("T", &GaussianSmearing::T)
      .def_readonly("sigma", &GaussianSmearing::sigma)
      .def_readonly("l0", &GaussianSmearing::l0);

  py::class_<VarianceBreakdown>(m, "VarianceBreakdown")
      .def_readonly("minkowski", &VarianceBreakdown::minkowski)
      .def_readonly("ricci_term", &VarianceBreakdown::ricci_term)
      .def_readonly("riemann_term", &VarianceBreakdown::riemann_term)
      .def_readonly("log_term", &VarianceBreakdown::log_term)
      .def_readonly("state_term", &VarianceBreakdown::state_term)
      .def_readonly("total", &VarianceBreakdown::total)
      .def_readonly("validity_warning", &VarianceBreakdown::validity_warning);

  py::class_<CurvatureData>(m, "CurvatureData")
      .def_static("zero", &CurvatureData::zero);

  py::enum_<LogVariant>(m, "LogVariant")
      .value("SQ_L0", LogVariant::SqL0)
      .value("TWO_SQ_L0", LogVariant::TwoSqL0);

  m.def("minkowski_variance", &minkowski_variance, py::arg("T"), py::arg("sigma"));
  m.def("p_ln", &p_ln, py::arg("T"), py::arg("sigma"), py::arg("l0"),
        py::arg("rel_tol") = 1e-9, py::arg("variant") = kDefaultLogVariant);

  py::enum_<PresetSpec::Name>(m, "PresetName")
      .value("MINKOWSKI", PresetSpec::Name::minkowski)
      .value("DE_SITTER", PresetSpec::Name::de_sitter)
      .value("SCHWARZSCHILD", PresetSpec::Name::schwarzschild)
      .value("CONSTANT_CURVATURE", PresetSpec::Name::constant_curvature);

  m.def(
      "preset_curvature",
      [](PresetSpec::Name name, double hubble, double mass, double radius, double k) {
        PresetSpec p;
        p.name = name;
        p.hubble = hubble;
        p.mass = mass;
        p.radius = radius;
        p.k = k;
        p.validate();
        return preset_curvature(p);
      },
      py::arg("name"), py::arg("hubble") = 0.1, py::arg("mass") = 1.0,
      py::arg("radius") = 10.0, py::arg("k") = 0.0);

  m.def("variance_breakdown", &variance_breakdown, py::arg("curvature"),
        py::arg("smearing"), py::arg("state_term") = 0.0,
        py::arg("variant") = kDefaultLogVariant);

  py::class_<QubitState>(m, "QubitState")
      .def_static("ground", &QubitState::ground)
      .def_static("excited", &QubitState::excited)
      .def_static("plus", &QubitState::plus)
      .def_property_readonly("rho", [](const QubitState& s) { return s.rho; });

  m.def("gapless_channel", &gapless_channel, py::arg("state"), py::arg("xi"));
  m.def("gapped_probability_minkowski", &gapped_probability_minkowski,
        py::arg("coupling"), py::arg("gap"), py::arg("smearing"),
        py::arg("rel_tol") = 1e-10);
}
