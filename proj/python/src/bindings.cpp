#include "orlicz/battery.hpp"
#include "orlicz/bounds.hpp"
#include "orlicz/errors.hpp"
#include "orlicz/format.hpp"
#include "orlicz/norms.hpp"
#include "orlicz/phi.hpp"
#include "orlicz/rv_models.hpp"

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <span>
#include <vector>

namespace py = pybind11;
using namespace orlicz;

namespace {

// p arrives as a float; math.inf selects the phi_inf / psi_inf members
Exponent exponent(double p) { return Exponent::of(p); }

py::dict estimate_dict(const NormEstimate& e) {
  py::dict d;
  d["value"] = e.value;
  d["kind"] = to_string(e.kind);
  d["p"] = e.p.p();
  d["rel_tol"] = e.rel_tol;
  d["check_value"] = e.check_value;
  d["witness"] = e.witness;
  d["certificate"] = e.certificate;
  return d;
}

template <class F>
py::dict with_grid(const std::optional<std::vector<double>>& grid, F f) {
  if (grid) return estimate_dict(f(std::optional<std::span<const double>>(*grid)));
  return estimate_dict(f(std::nullopt));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Orlicz norms of random variables and sub-gaussian tail bounds";

  static py::exception<Error> error(m, "OrliczError", PyExc_ValueError);
  static py::exception<CenteringRequired> centering(m, "CenteringRequired", error.ptr());
  py::register_exception_translator([](std::exception_ptr ep) {
    try {
      if (ep) std::rethrow_exception(ep);
    } catch (const CenteringRequired& e) {
      py::set_error(centering, e.what());
    } catch (const Error& e) {
      py::set_error(error, e.what());
    }
  });

  py::class_<RandomVariable>(m, "RandomVariable")
      .def_static("point_mass", &RandomVariable::point_mass, py::arg("c"))
      .def_static("rademacher", &RandomVariable::rademacher)
      .def_static("uniform", &RandomVariable::uniform, py::arg("a"))
      .def_static("bounded", &RandomVariable::bounded, py::arg("values"), py::arg("weights"))
      .def_static("gaussian", &RandomVariable::gaussian, py::arg("sigma"))
      .def_static("laplace", &RandomVariable::laplace, py::arg("b"))
      .def_static("weibull", &RandomVariable::weibull, py::arg("p_tail"), py::arg("scale"))
      .def_static("empirical", &RandomVariable::empirical, py::arg("samples"))
      .def_static("parse", [](const std::string& s) { return parse_model(s); }, py::arg("spec"))
      .def_property_readonly("name", &RandomVariable::name)
      .def_property_readonly("mean", &RandomVariable::mean)
      .def_property_readonly("essential_sup", &RandomVariable::essential_sup)
      .def("scaled", [](const RandomVariable& r, double c) { return scaled(r, c); }, py::arg("c"))
      .def("tail", [](const RandomVariable& r, double t) { return tail(r, t); }, py::arg("t"))
      .def("log_mgf", [](const RandomVariable& r, double t) { return log_mgf(r, t); }, py::arg("t"))
      .def("__repr__", [](const RandomVariable& r) { return "RandomVariable('" + r.name() + "')"; });

  m.def("sum_of_independent",
        [](const std::vector<RandomVariable>& ms) { return sum_of_independent(ms); },
        py::arg("models"));

  m.def("conjugate_exponent", [](double p) { return Exponent::of(p).q(); }, py::arg("p"));
  m.def("phi", py::overload_cast<double, double>(&phi), py::arg("p"), py::arg("x"));
  m.def("psi", py::overload_cast<double, double>(&psi), py::arg("p"), py::arg("x"));
  m.def("legendre_phi",
        [](double p, double y) { return legendre_numeric(PhiFunction::phi_p(exponent(p)), y); },
        py::arg("p"), py::arg("y"), "Numerical conjugate of phi_p at y.");

  m.def("luxemburg_norm",
        [](const RandomVariable& r, double p, double rel_tol) {
          return estimate_dict(luxemburg_norm(r, exponent(p), rel_tol));
        },
        py::arg("model"), py::arg("p"), py::arg("rel_tol") = 1e-9);
  m.def("tail_norm",
        [](const RandomVariable& r, double p, std::optional<std::vector<double>> grid) {
          return with_grid(grid, [&](auto g) { return tail_norm(r, exponent(p), g); });
        },
        py::arg("model"), py::arg("p"), py::arg("t_grid") = py::none());
  m.def("moment_norm",
        [](const RandomVariable& r, double p, std::optional<std::vector<double>> grid) {
          return with_grid(grid, [&](auto g) { return moment_norm(r, exponent(p), g); });
        },
        py::arg("model"), py::arg("p"), py::arg("alpha_grid") = py::none());
  m.def("tau_norm",
        [](const RandomVariable& r, double p, double rel_tol, int t_points) {
          return estimate_dict(tau_norm(r, exponent(p), rel_tol, t_points));
        },
        py::arg("model"), py::arg("p"), py::arg("rel_tol") = 1e-9, py::arg("t_points") = 512);

  m.def("tau_upper_const", py::overload_cast<double>(&tau_upper_const), py::arg("p"));
  m.def("luxemburg_upper_const", py::overload_cast<double>(&luxemburg_upper_const), py::arg("p"));

  py::class_<BoundCurve>(m, "BoundCurve")
      .def_readonly("name", &BoundCurve::name)
      .def_readonly("params", &BoundCurve::params)
      .def_readonly("provenance", &BoundCurve::provenance)
      .def("__call__", &BoundCurve::operator(), py::arg("t"))
      .def("table", [](const BoundCurve& c, const std::vector<double>& ts) { return c.table(ts); });

  m.def("tail_from_tau", [](double p, double K) { return tail_from_tau(exponent(p), K); },
        py::arg("p"), py::arg("K"));
  m.def("lemma1_tail_curve", [](double p, double L) { return lemma1_tail_curve(exponent(p), L); },
        py::arg("p"), py::arg("L"));
  m.def("hoeffding_classic", &hoeffding_classic, py::arg("a"));
  m.def("hoeffding_complementary", &hoeffding_complementary, py::arg("a"));
  m.def("hoeffding_sum_params",
        [](const std::vector<double>& a) {
          const HoeffdingSumParams s = hoeffding_sum_params(a);
          return py::make_tuple(s.a_l2, s.a_l1);
        },
        py::arg("a_list"), "Returns (a_l2, a_l1).");
  m.def("linear_grid", &linear_grid, py::arg("lo"), py::arg("hi"), py::arg("step"));

  m.def("verify_bound",
        [](const RandomVariable& r, const BoundCurve& c, const std::vector<double>& grid, double tol) {
          const VerificationReport rep = verify_bound(r, c, grid, tol);
          py::list bad;
          for (const Violation& v : rep.violations) bad.append(py::make_tuple(v.t, v.truth, v.bound));
          py::dict d;
          d["ok"] = rep.ok();
          d["max_gap"] = rep.max_gap;
          d["violations"] = bad;
          d["truth"] = rep.truth;
          d["bound"] = rep.bound;
          return d;
        },
        py::arg("model"), py::arg("curve"), py::arg("t_grid"), py::arg("tol") = kVerifyTol);

  m.def("run_battery",
        [](std::vector<double> ps, std::uint64_t seed) {
          BatteryOptions o;
          o.p_values = std::move(ps);
          o.seed = seed;
          const BatteryReport rep = run_battery(o);
          py::list out;
          for (const CheckResult& c : rep.checks)
            out.append(py::make_tuple(c.name, c.passed, c.worst_margin, c.detail));
          return out;
        },
        py::arg("p_values") = std::vector<double>{1.0, 1.5, 2.0, 3.0},
        py::arg("seed") = BatteryOptions{}.seed,
        "List of (name, passed, worst_margin, detail).");
}
