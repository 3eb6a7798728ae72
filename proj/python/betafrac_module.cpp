// Python bindings for the core operations.

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "betafrac/gamma.hpp"
#include "betafrac/harness.hpp"
#include "betafrac/oracle.hpp"
#include "betafrac/taylor.hpp"

namespace py = pybind11;
using namespace betafrac;

namespace {

py::dict report_to_dict(const InequalityReport& r) {
  py::dict d;
  d["name"] = r.name;
  d["lhs"] = r.lhs;
  d["mid"] = r.mid;
  d["rhs"] = r.rhs;
  d["margin_left"] = r.margin_left;
  d["margin_right"] = r.margin_right;
  d["verdict"] = to_string(r.verdict);
  if (r.l_value) d["l"] = *r.l_value;
  return d;
}

FunctionModel corpus_model(const std::string& name, double beta) {
  for (const CorpusEntry& e : default_corpus())
    if (e.name == name) return e.make(BetaParam(beta));
  throw std::invalid_argument("unknown corpus function: " + name);
}

}  // namespace

PYBIND11_MODULE(_betafrac, m) {
  m.doc() = "beta-fractional calculus: derivative, integral, Taylor remainders, "
            "inequality checks";

  m.def("gamma", &betafrac::gamma, py::arg("x"));
  m.def("ln_gamma", &betafrac::ln_gamma, py::arg("x"));

  py::class_<BetaParam>(m, "BetaParam")
      .def(py::init<double>(), py::arg("beta"))
      .def_property_readonly("beta", &BetaParam::beta)
      .def_property_readonly("shift", &BetaParam::shift)
      .def("u", &BetaParam::u, py::arg("t"));

  py::class_<Interval>(m, "Interval")
      .def(py::init<double, double>(), py::arg("a"), py::arg("b"))
      .def_property_readonly("a", &Interval::a)
      .def_property_readonly("b", &Interval::b);

  py::class_<FunctionModel>(m, "FunctionModel")
      .def_property_readonly("name", &FunctionModel::name)
      .def("__call__", &FunctionModel::operator(), py::arg("x"));

  m.def("corpus_function", &corpus_model, py::arg("name"), py::arg("beta"),
        "Instantiate a corpus function for the given beta.");
  m.def("corpus_names", []() {
    std::vector<std::string> names;
    for (const CorpusEntry& e : default_corpus()) names.push_back(e.name);
    return names;
  });

  m.def("weight", &weight, py::arg("p"), py::arg("t"));
  m.def(
      "beta_derivative",
      [](const BetaParam& p, const FunctionModel& f, int k, double x) {
        return beta_derivative(p, f, k, x);
      },
      py::arg("p"), py::arg("f"), py::arg("k"), py::arg("x"));
  m.def(
      "beta_integral",
      [](const BetaParam& p, const FunctionModel& f, const Interval& iv,
         double tol) {
        QuadratureResult q = beta_integral(p, f, iv, tol);
        return py::make_tuple(q.value, q.error_estimate, q.evaluations);
      },
      py::arg("p"), py::arg("f"), py::arg("iv"), py::arg("tol") = 1e-10);
  m.def("weighted_integral_of_power", &weighted_integral_of_power, py::arg("p"),
        py::arg("t_ref"), py::arg("iv"), py::arg("n"));

  m.def("taylor_polynomial", &taylor_polynomial, py::arg("p"), py::arg("f"),
        py::arg("s"), py::arg("n"), py::arg("t"));
  m.def("integral_remainder", &integral_remainder, py::arg("p"), py::arg("f"),
        py::arg("s"), py::arg("n"), py::arg("t"), py::arg("tol") = 1e-10);
  m.def(
      "lagrange_remainder",
      [](const BetaParam& p, const FunctionModel& f, double s, int n, double t,
         double tol) {
        RemainderValue r = lagrange_remainder(p, f, s, n, t, tol);
        py::dict d;
        d["integral_form"] = r.integral_form;
        d["lagrange_point"] = r.lagrange_point ? py::cast(*r.lagrange_point)
                                               : py::none();
        d["lagrange_form"] =
            r.lagrange_form ? py::cast(*r.lagrange_form) : py::none();
        return d;
      },
      py::arg("p"), py::arg("f"), py::arg("s"), py::arg("n"), py::arg("t"),
      py::arg("tol") = 1e-10);
  m.def("mean_value_point", &mean_value_point, py::arg("p"), py::arg("f"),
        py::arg("g"), py::arg("iv"), py::arg("tol") = 1e-10);

  m.def("steffensen_l", &steffensen_l, py::arg("p"), py::arg("g"), py::arg("iv"),
        py::arg("M"), py::arg("tol") = 1e-10);
  m.def(
      "check_steffensen",
      [](const BetaParam& p, const FunctionModel& f, const FunctionModel& g,
         const Interval& iv, double M) {
        return report_to_dict(check_steffensen(p, f, g, iv, M));
      },
      py::arg("p"), py::arg("f"), py::arg("g"), py::arg("iv"), py::arg("M"));
  m.def(
      "check_hermite_hadamard",
      [](const BetaParam& p, const FunctionModel& f, const Interval& iv) {
        return report_to_dict(check_hermite_hadamard(p, f, iv));
      },
      py::arg("p"), py::arg("f"), py::arg("iv"));
  m.def(
      "check_taylor_steffensen",
      [](const BetaParam& p, const FunctionModel& f, const Interval& iv, int n) {
        return report_to_dict(check_taylor_steffensen(p, f, iv, n));
      },
      py::arg("p"), py::arg("f"), py::arg("iv"), py::arg("n"));

  m.def(
      "run_default_suite",
      [](const std::string& out_path, int parallel) {
        RunConfig cfg = default_config();
        if (parallel > 0) cfg.parallel = parallel;
        if (!out_path.empty()) cfg.output_path = out_path;
        RunReport r = run_suite(cfg, default_corpus());
        if (!out_path.empty()) emit_report(r, "json", out_path);
        py::dict d;
        d["holds"] = r.summary.holds;
        d["violated"] = r.summary.violated;
        d["hypothesis_not_met"] = r.summary.hypothesis_not_met;
        d["error"] = r.summary.error;
        d["records"] = r.records.size();
        return d;
      },
      py::arg("out_path") = std::string(), py::arg("parallel") = 0);
}
