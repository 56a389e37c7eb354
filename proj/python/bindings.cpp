#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "slowsum/bernoulli.hpp"
#include "slowsum/engines.hpp"
#include "slowsum/report.hpp"

namespace py = pybind11;
using namespace slowsum;

namespace {

// (numerator, denominator) as decimal strings; the Python layer builds a Fraction.
std::pair<std::string, std::string> rational_parts(const Rational& q) {
  return {q.numerator().get_str(), q.denominator().get_str()};
}

PrecisionContext context(int precision) {
  PrecisionContext ctx{precision, 10};
  ctx.validate();
  return ctx;
}

py::dict evaluate_record(const std::string& family, int alpha, const std::string& engine, std::optional<long> n,
                  std::optional<int> s_max, std::optional<long> k_hat, int digits, int precision) {
  const SeriesSpec spec{parse_family(family), alpha};
  const Engine which = parse_engine(engine);
  if (!n) throw ConfigError("n is required; use evaluate_constant for the converged limit");
  EngineConfig cfg;
  cfg.n = *n;
  cfg.s_max = s_max.value_or(which == Engine::Romberg ? 3 : 5);
  cfg.k_hat = k_hat;
  cfg.precision = context(precision);
  const OutputRecord record = OutputRecord::from_report(run_engine(which, spec, cfg), digits);
  py::dict out;
  out["series"] = spec.name();
  out["engine"] = engine_name(which);
  out["n"] = record.n;
  out["s_max"] = record.s_max;
  out["k_hat"] = record.k_hat;
  out["value"] = record.value;
  out["corrections"] = record.corrections;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "High-precision evaluation of slowly convergent log-power series";

  py::register_exception<ConvergenceError>(m, "ConvergenceError", PyExc_ArithmeticError);
  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);

  m.def("bernoulli_even", [](int index) { return rational_parts(bernoulli_even(index)); }, py::arg("m"));
  m.def("beta", [](int s) { return rational_parts(beta(s)); }, py::arg("s"));
  m.def("beta_via_compositions", [](int s) { return rational_parts(beta_via_compositions(s)); }, py::arg("s"));

  m.def(
      "derivative",
      [](const std::string& family, int alpha, int order) {
        const AtomExpression& expr = cached_derivative(SeriesSpec{parse_family(family), alpha}, order);
        std::vector<std::pair<std::tuple<int, int, int>, std::pair<std::string, std::string>>> terms;
        for (const auto& [atom, coefficient] : expr) {
          terms.push_back({{atom.x_power, atom.log_power, atom.loglog_power}, rational_parts(coefficient)});
        }
        return std::make_pair(to_string(expr), terms);
      },
      py::arg("family"), py::arg("alpha"), py::arg("order"));

  m.def(
      "term",
      [](const std::string& family, int alpha, long k, int digits, int precision) {
        return to_significant(term(SeriesSpec{parse_family(family), alpha}, k, context(precision)), digits);
      },
      py::arg("family"), py::arg("alpha"), py::arg("k"), py::arg("digits") = 30, py::arg("precision") = 50);

  m.def(
      "partial_sum",
      [](const std::string& family, int alpha, long n, int digits, int precision) {
        return to_significant(partial_sum(SeriesSpec{parse_family(family), alpha}, n, context(precision)), digits);
      },
      py::arg("family"), py::arg("alpha"), py::arg("n"), py::arg("digits") = 30, py::arg("precision") = 50);

  m.def(
      "tail_integral",
      [](const std::string& family, int alpha, long n, int digits, int precision) {
        return to_significant(tail_integral(SeriesSpec{parse_family(family), alpha}, n, context(precision)), digits);
      },
      py::arg("family"), py::arg("alpha"), py::arg("n"), py::arg("digits") = 30, py::arg("precision") = 50);

  m.def("evaluate", &evaluate_record, py::arg("family"), py::arg("alpha"), py::arg("engine") = "em",
        py::arg("n") = py::none(), py::arg("s_max") = py::none(), py::arg("k_hat") = py::none(),
        py::arg("digits") = 15, py::arg("precision") = 50);

  m.def(
      "evaluate_constant",
      [](const std::string& family, int alpha, int digits, int precision) {
        const PrecisionContext ctx = context(precision);
        const int target = std::min(digits + 2, ctx.working_digits - 10);
        return to_significant(evaluate_constant(SeriesSpec{parse_family(family), alpha}, target, ctx), digits);
      },
      py::arg("family"), py::arg("alpha"), py::arg("digits") = 15, py::arg("precision") = 50);

  m.def(
      "table",
      [](int which, const std::string& format, int precision) {
        const TableFormat fmt = parse_table_format(format);
        const PrecisionContext ctx = context(precision);
        if (which == 1) return render_table1(compute_table1(ctx), fmt);
        if (which == 2) return render_table2(compute_table2(ctx), fmt);
        throw std::invalid_argument("table must be 1 or 2");
      },
      py::arg("which"), py::arg("format") = "plain", py::arg("precision") = 50);

  m.def(
      "estimate_direct_terms",
      [](const std::string& delta, int digits) {
        const PrecisionContext ctx;
        const DirectTermEstimate e = estimate_direct_terms(Real(delta, ctx), ctx);
        return std::make_pair(to_significant(e.log10_terms, digits), e.render());
      },
      py::arg("delta"), py::arg("digits") = 15);
}
