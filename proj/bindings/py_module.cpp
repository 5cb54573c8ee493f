#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>

#include "hyppow/bench.hpp"
#include "hyppow/coefficient_table.hpp"
#include "hyppow/identities.hpp"
#include "hyppow/power_series.hpp"
#include "hyppow/special_functions.hpp"

namespace py = pybind11;
using namespace hyppow;

namespace {

ConvergenceControl ctrl_or_default(const std::optional<ConvergenceControl>& c,
                                   IdentityId id) {
  return c ? *c : recommended_control(id);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Integer powers of 2F1(1, a; a+1; x) via a coefficient-table series, "
      "with numeric verification of the related finite and digamma-sum "
      "identities";

  // exception hierarchy, translated most-derived-first
  static py::exception<Error> exc_error(m, "Error");
  static py::exception<ConvergenceError> exc_conv(m, "ConvergenceError",
                                                  exc_error.ptr());
  static py::exception<TableSizeError> exc_table(m, "TableSizeError",
                                                 exc_error.ptr());
  static py::exception<DomainError> exc_domain(m, "DomainError",
                                               exc_error.ptr());
  static py::exception<PoleError> exc_pole(m, "PoleError", exc_domain.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const PoleError& e) {
      PyErr_SetString(exc_pole.ptr(), e.what());
    } catch (const TableSizeError& e) {
      PyErr_SetString(exc_table.ptr(), e.what());
    } catch (const ConvergenceError& e) {
      PyErr_SetString(exc_conv.ptr(), e.what());
    } catch (const DomainError& e) {
      PyErr_SetString(exc_domain.ptr(), e.what());
    } catch (const Error& e) {
      PyErr_SetString(exc_error.ptr(), e.what());
    }
  });

  py::enum_<MinusOnePolicy>(m, "MinusOnePolicy")
      .value("reject", MinusOnePolicy::reject)
      .value("alternating_pairing", MinusOnePolicy::alternating_pairing);

  py::class_<ConvergenceControl>(m, "ConvergenceControl")
      .def(py::init<>())
      .def(py::init([](double tolerance, long long max_terms,
                       MinusOnePolicy policy) {
             ConvergenceControl c;
             c.tolerance = tolerance;
             c.max_terms = max_terms;
             c.minus_one_policy = policy;
             return c;
           }),
           py::arg("tolerance") = 1e-12, py::arg("max_terms") = 100000,
           py::arg("minus_one_policy") = MinusOnePolicy::alternating_pairing)
      .def_readwrite("tolerance", &ConvergenceControl::tolerance)
      .def_readwrite("max_terms", &ConvergenceControl::max_terms)
      .def_readwrite("minus_one_policy", &ConvergenceControl::minus_one_policy);

  py::class_<SeriesResult>(m, "SeriesResult")
      .def_readonly("value", &SeriesResult::value)
      .def_readonly("terms_used", &SeriesResult::terms_used)
      .def_readonly("tail_estimate", &SeriesResult::tail_estimate)
      .def_readonly("converged", &SeriesResult::converged)
      .def("__repr__", [](const SeriesResult& r) {
        std::ostringstream os;
        os << "SeriesResult(value=" << r.value << ", terms_used="
           << r.terms_used << ", tail_estimate=" << r.tail_estimate
           << ", converged=" << (r.converged ? "True" : "False") << ")";
        return os.str();
      });

  py::class_<CoefficientTable>(m, "CoefficientTable")
      .def_property_readonly("alpha", &CoefficientTable::alpha)
      .def_property_readonly("n_max", &CoefficientTable::n_max)
      .def_property_readonly("m_max", &CoefficientTable::m_max)
      .def("get", &CoefficientTable::get, py::arg("n"), py::arg("m"));

  py::class_<IdentityReport>(m, "IdentityReport")
      .def_property_readonly(
          "identity",
          [](const IdentityReport& r) { return std::string(to_string(r.identity)); })
      .def_property_readonly("params",
                             [](const IdentityReport& r) {
                               py::dict d;
                               for (const auto& [name, value] : r.parameters) {
                                 d[name.c_str()] = value;
                               }
                               return d;
                             })
      .def_readonly("lhs", &IdentityReport::lhs)
      .def_readonly("rhs", &IdentityReport::rhs)
      .def_readonly("abs_residual", &IdentityReport::abs_residual)
      .def_readonly("rel_residual", &IdentityReport::rel_residual)
      .def_readonly("terms_used", &IdentityReport::terms_used)
      .def_readonly("pass_", &IdentityReport::pass)
      .def_readonly("notes", &IdentityReport::notes)
      .def("to_dict",
           [](const IdentityReport& r) {
             py::dict d;
             d["identity"] = std::string(to_string(r.identity));
             py::dict params;
             for (const auto& [name, value] : r.parameters) {
               params[name.c_str()] = value;
             }
             d["params"] = params;
             d["lhs"] = r.lhs;
             d["rhs"] = r.rhs;
             d["abs_residual"] = r.abs_residual;
             d["rel_residual"] = r.rel_residual;
             d["terms_used"] = r.terms_used;
             d["pass"] = r.pass;
             d["notes"] = r.notes;
             return d;
           })
      .def("__repr__", [](const IdentityReport& r) {
        std::ostringstream os;
        os << "IdentityReport(" << to_string(r.identity)
           << (r.pass ? ", PASS" : ", FAIL") << ", rel_residual="
           << r.rel_residual << ")";
        return os.str();
      });

  py::class_<BenchRecord>(m, "BenchRecord")
      .def_property_readonly(
          "strategy",
          [](const BenchRecord& r) { return std::string(to_string(r.strategy)); })
      .def_readonly("n", &BenchRecord::n)
      .def_readonly("terms", &BenchRecord::terms)
      .def_readonly("multiply_add_count", &BenchRecord::multiply_add_count)
      .def_readonly("wall_nanoseconds", &BenchRecord::wall_nanoseconds)
      .def_readonly("value", &BenchRecord::value);

  m.def("digamma", &digamma, py::arg("x"),
        "Digamma function psi(x); raises PoleError at nonpositive integers");
  m.def("cot_pi", &cot_pi, py::arg("q"),
        "cot(pi q) from the reduced fractional part of q");
  m.def(
      "pfq",
      [](const std::vector<double>& numerator,
         const std::vector<double>& denominator, double x,
         const ConvergenceControl& ctrl) {
        return pfq_truncated({numerator, denominator, x}, ctrl);
      },
      py::arg("numerator"), py::arg("denominator"), py::arg("x"),
      py::arg("ctrl") = ConvergenceControl{},
      "Truncated generalized hypergeometric series pFq");

  m.def(
      "build_table",
      [](double alpha, int n_max, int m_max) {
        return build_table(ParameterPoint(alpha), n_max, m_max);
      },
      py::arg("alpha"), py::arg("n_max"), py::arg("m_max"),
      "Build the triangular coefficient table t_m^n(alpha)");
  m.def("required_terms", &required_terms, py::arg("x"), py::arg("tolerance"));

  m.def(
      "eval_base",
      [](double alpha, double x, const ConvergenceControl& ctrl) {
        return eval_base(ParameterPoint(alpha), EvaluationPoint{x}, ctrl);
      },
      py::arg("alpha"), py::arg("x"), py::arg("ctrl") = ConvergenceControl{},
      "2F1(1, a; a+1; x) = a sum_m x^m/(a+m)");
  m.def(
      "eval_power",
      [](double alpha, int n, double x, const CoefficientTable& table,
         const ConvergenceControl& ctrl) {
        return eval_power(ParameterPoint(alpha), n, EvaluationPoint{x}, table,
                          ctrl);
      },
      py::arg("alpha"), py::arg("n"), py::arg("x"), py::arg("table"),
      py::arg("ctrl") = ConvergenceControl{},
      "(2F1(1, a; a+1; x))^n through the coefficient-table series");
  m.def(
      "cauchy_power_oracle",
      [](double alpha, int n, double x, long long truncation) {
        return cauchy_power_oracle(ParameterPoint(alpha), n,
                                   EvaluationPoint{x}, truncation);
      },
      py::arg("alpha"), py::arg("n"), py::arg("x"), py::arg("truncation"),
      "Naive n-th power by iterated Cauchy convolution (oracle)");

  m.def(
      "verify_eq1",
      [](double alpha, int k) { return verify_eq1(ParameterPoint(alpha), k); },
      py::arg("alpha"), py::arg("k"));
  m.def(
      "verify_eq2",
      [](double alpha, int k, int n) {
        return verify_eq2(ParameterPoint(alpha), k, n);
      },
      py::arg("alpha"), py::arg("k"), py::arg("n"));
  m.def(
      "verify_eq5",
      [](double alpha, int k, int n) {
        return verify_eq5(ParameterPoint(alpha), k, n);
      },
      py::arg("alpha"), py::arg("k"), py::arg("n"));
  m.def(
      "verify_eq8",
      [](double alpha, double x, int l_cap,
         const std::optional<ConvergenceControl>& ctrl) {
        return verify_eq8(ParameterPoint(alpha), EvaluationPoint{x}, l_cap,
                          ctrl_or_default(ctrl, IdentityId::eq8));
      },
      py::arg("alpha"), py::arg("x"), py::arg("l_cap") = kDefaultOuterCap,
      py::arg("ctrl") = py::none());
  m.def(
      "verify_eq9",
      [](double alpha, const std::optional<ConvergenceControl>& ctrl) {
        return verify_eq9(ParameterPoint(alpha),
                          ctrl_or_default(ctrl, IdentityId::eq9));
      },
      py::arg("alpha"), py::arg("ctrl") = py::none());
  m.def(
      "verify_eq10",
      [](double q, const std::optional<ConvergenceControl>& ctrl) {
        return verify_eq10(ParameterPoint(q),
                           ctrl_or_default(ctrl, IdentityId::eq10));
      },
      py::arg("q"), py::arg("ctrl") = py::none());
  m.def(
      "verify_eq11",
      [](double alpha, double x, int l_cap,
         const std::optional<ConvergenceControl>& ctrl) {
        return verify_eq11(ParameterPoint(alpha), EvaluationPoint{x}, l_cap,
                           ctrl_or_default(ctrl, IdentityId::eq11));
      },
      py::arg("alpha"), py::arg("x"), py::arg("l_cap") = kDefaultOuterCap,
      py::arg("ctrl") = py::none());
  m.def(
      "verify_eq12",
      [](double q, const std::optional<ConvergenceControl>& ctrl) {
        return verify_eq12(ParameterPoint(q),
                           ctrl_or_default(ctrl, IdentityId::eq12));
      },
      py::arg("q"), py::arg("ctrl") = py::none());

  m.def("run_bench", &run_bench, py::arg("alpha"), py::arg("n_lo"),
        py::arg("n_hi"), py::arg("x"), py::arg("terms"),
        "Instrumented cost comparison of the three evaluation strategies");

  m.attr("__version__") = "0.1.0";
}
