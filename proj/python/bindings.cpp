// Python bindings for the core library.
#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>

#include "lvp/config.hpp"
#include "lvp/constant_case.hpp"
#include "lvp/criteria.hpp"
#include "lvp/errors.hpp"
#include "lvp/existence.hpp"
#include "lvp/jfunc.hpp"
#include "lvp/region.hpp"
#include "lvp/simulate.hpp"

namespace py = pybind11;
using namespace lvp;

namespace {

// Accepts 2, 2.5, "inf" or math.inf.
Exponent toExponent(const py::handle& obj) {
  if (py::isinstance<py::str>(obj)) return Exponent::parse(obj.cast<std::string>());
  const double v = obj.cast<double>();
  return std::isinf(v) && v > 0 ? Exponent::infinity() : Exponent::finite(v);
}

py::object fromExponent(const Exponent& p) {
  return py::float_(p.isInfinite() ? INFINITY : p.value());
}

py::dict resultDict(const TestResult& r) {
  py::dict d;
  d["name"] = r.name;
  d["p"] = r.p ? fromExponent(*r.p) : py::object(py::none());
  d["q"] = r.q ? fromExponent(*r.q) : py::object(py::none());
  d["lhs"] = r.lhs;
  d["rhs"] = r.rhs;
  d["margin"] = r.margin;
  d["passed"] = r.passed;
  d["diagnostics"] = r.diagnostics;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Stability tests for periodic predator-prey systems";

  py::register_exception<Error>(m, "LvpError", PyExc_ValueError);

  py::class_<Harmonic>(m, "Harmonic")
      .def(py::init<int, double, double>(), py::arg("k"), py::arg("cos") = 0.0,
           py::arg("sin") = 0.0)
      .def_readonly("k", &Harmonic::k)
      .def_readonly("cos", &Harmonic::cosCoeff)
      .def_readonly("sin", &Harmonic::sinCoeff);

  py::class_<PeriodicCoefficient>(m, "Coefficient")
      .def_static("constant", &PeriodicCoefficient::constant)
      .def_static(
          "trig",
          [](double c0, const std::vector<std::tuple<int, double, double>>& hs) {
            std::vector<Harmonic> list;
            for (const auto& [k, c, s] : hs) list.push_back({k, c, s});
            return PeriodicCoefficient::trigonometric(c0, list);
          },
          py::arg("c0"), py::arg("harmonics"))
      .def_property_readonly("mean", &PeriodicCoefficient::mean)
      .def("__call__", &PeriodicCoefficient::operator(), py::arg("t"),
           py::arg("T"))
      .def("stats",
           [](const PeriodicCoefficient& c, double T) {
             const CoeffStats s = stats(c, T);
             return py::make_tuple(s.phiL, s.phiM, s.phiBar);
           })
      .def("lp_average", [](const PeriodicCoefficient& c, double T,
                            const py::object& p) {
        return lpAverage(c, T, toExponent(p));
      });

  py::class_<SystemSpec>(m, "System")
      .def(py::init([](double T, PeriodicCoefficient a, PeriodicCoefficient b,
                       PeriodicCoefficient c, PeriodicCoefficient d,
                       PeriodicCoefficient e, PeriodicCoefficient f) {
             SystemSpec s{T, a, b, c, d, e, f};
             s.validate();
             return s;
           }),
           py::arg("T"), py::arg("a"), py::arg("b"), py::arg("c"),
           py::arg("d"), py::arg("e"), py::arg("f"))
      .def_static(
          "constant",
          [](double T, double a, double b, double c, double d, double e,
             double f) {
            SystemSpec s = constantSystem(T, a, b, c, d, e, f);
            s.validate();
            return s;
          },
          py::arg("T"), py::arg("a"), py::arg("b"), py::arg("c"),
          py::arg("d"), py::arg("e"), py::arg("f"))
      .def_readonly("T", &SystemSpec::T)
      .def("__eq__", [](const SystemSpec& l, const SystemSpec& r) { return l == r; });

  m.def("example_one", []() { return exampleOneSystem().toSpec(); });
  m.def("parse_config", [](const std::string& text) { return parseConfig(text); });
  m.def("load_config", &loadConfig);
  m.def("format_config", &formatConfig);

  m.def("J", [](const py::object& q) { return J(toExponent(q)); });
  m.def("F", [](const py::object& q) { return F(toExponent(q)); });
  m.def("scriptF", [](const py::object& p) { return scriptF(toExponent(p)); });

  m.def("coexistence_exists", [](const SystemSpec& s) {
    const CoexistenceVerdict v = coexistenceExists(s);
    return py::make_tuple(v.exists, v.margins);
  });
  m.def("compute_uv", [](const SystemSpec& s) {
    const RegionBounds b = computeUV(s);
    return py::make_tuple(b.U, b.V);
  });
  m.def("cp_contains", [](const SystemSpec& s, const py::object& p, double x,
                          double y) {
    return cpContains(makeRegion(s, toExponent(p)), x, y);
  });
  m.def("sup_xy", [](const SystemSpec& s, const py::object& p) {
    const RegionMaximum r = supXY(makeRegion(s, toExponent(p)));
    return py::make_tuple(r.value, py::make_tuple(r.argmax.x, r.argmax.y), r.empty);
  });
  m.def("boundary_points", [](const SystemSpec& s, const py::object& p,
                              std::size_t n) {
    py::list out;
    for (const BoundaryPoint& b : boundaryPoints(makeRegion(s, toExponent(p)), n).points) {
      out.append(py::make_tuple(b.label, b.x, b.y));
    }
    return out;
  });

  m.def("condition18", [](const SystemSpec& s) { return resultDict(testCondition18(s)); });
  m.def("condition19", [](const SystemSpec& s) { return resultDict(testCondition19(s)); });
  m.def("unified_test", [](const SystemSpec& s, const py::object& p) {
    return resultDict(unifiedLpTest(s, toExponent(p)));
  });
  m.def("intertwined_test", [](const SystemSpec& s, const py::object& p) {
    return resultDict(intertwinedTest(s, toExponent(p)));
  });
  m.def("weak_intertwined_test", [](const SystemSpec& s, const py::object& p) {
    return resultDict(weakIntertwinedTest(s, toExponent(p)));
  });
  m.def("scan_p", [](const SystemSpec& s, const py::list& grid) {
    std::vector<Exponent> ps;
    for (const py::handle& h : grid) ps.push_back(toExponent(h));
    const StabilityReport r = scanP(s, ps);
    py::dict d;
    d["conclusion"] = toString(r.conclusion);
    d["best_p"] = r.bestP ? fromExponent(*r.bestP) : py::object(py::none());
    py::list results;
    for (const TestResult& t : r.results) results.append(resultDict(t));
    d["results"] = results;
    return d;
  });

  m.def("g_of_p", [](const SystemSpec& s, double p) {
    return gOfP(ConstantSystem::fromSpec(s), p);
  });
  m.def("h_of_p", [](const SystemSpec& s, double p) {
    const HValue h = hOfP(ConstantSystem::fromSpec(s), p);
    return py::make_tuple(h.h, h.signOK);
  });

  py::class_<PeriodicOrbit2D>(m, "Orbit")
      .def_readonly("T", &PeriodicOrbit2D::T)
      .def_readonly("t", &PeriodicOrbit2D::t)
      .def_readonly("u", &PeriodicOrbit2D::u)
      .def_readonly("v", &PeriodicOrbit2D::v)
      .def_readonly("newton_residual", &PeriodicOrbit2D::newtonResidual)
      .def_property_readonly("start", &PeriodicOrbit2D::start);

  m.def("find_coexistence", [](const SystemSpec& s, std::array<double, 2> guess) {
    py::gil_scoped_release release;
    return findCoexistence(s, guess);
  });
  m.def("floquet", [](const SystemSpec& s, const PeriodicOrbit2D& o) {
    const FloquetData f = floquet(s, o);
    return py::make_tuple(f.multipliers, toString(f.classification));
  });
  m.def("verify_predictions", [](const SystemSpec& s, const PeriodicOrbit2D& o) {
    const VerificationReport r = verifyPredictions(s, o);
    py::list checks;
    for (const PredictionCheck& c : r.checks) {
      checks.append(py::make_tuple(c.name, c.slack, c.passed));
    }
    return py::make_tuple(r.allPassed, checks);
  });
}
