#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <variant>

#include "hadafrac/errors.hpp"
#include "hadafrac/expression.hpp"
#include "hadafrac/fuzz.hpp"
#include "hadafrac/inequalities.hpp"
#include "hadafrac/operators.hpp"
#include "hadafrac/quadrature.hpp"
#include "hadafrac/special_functions.hpp"

namespace py = pybind11;
using namespace hadafrac;

namespace {

// Functions arrive either as expression text in `x` or as Python callables.
using FunctionArg = std::variant<std::string, std::function<double(double)>>;

RealFunction to_real_function(const FunctionArg& arg) {
  if (const auto* text = std::get_if<std::string>(&arg)) {
    return parse_function(*text);
  }
  return RealFunction(std::get<std::function<double(double)>>(arg), "python");
}

py::dict report_to_dict(const InequalityReport& r) {
  py::dict d;
  d["theorem"] = std::string(to_string(r.theorem));
  d["lhs"] = r.lhs;
  d["bound"] = r.bound;
  d["ratio"] = r.ratio;
  d["margin"] = r.margin;
  d["pass"] = r.pass;
  d["alpha"] = r.params.alpha;
  d["beta"] = r.params.beta;
  d["t"] = r.params.t;
  d["p"] = r.params.p;
  d["q"] = r.params.q;
  return d;
}

TheoremId theorem_from(const std::string& name) {
  const auto id = parse_theorem_id(name);
  if (!id) {
    throw py::value_error("unknown theorem: " + name);
  }
  return *id;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Hadamard fractional integrals, derivatives and inequality checks";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<EvaluationError>(m, "EvaluationError", PyExc_ArithmeticError);
  py::register_exception<ConvergenceError>(m, "ConvergenceError", PyExc_RuntimeError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);

  m.attr("DEFAULT_NODES") = kDefaultNodes;

  m.def("gamma", [](double z) { return gamma_function(z); }, py::arg("z"),
        "Gamma function on (0, 170].");

  m.def(
      "hadamard_integral",
      [](const FunctionArg& f, double alpha, double t, int nodes) {
        const OperatorResult r =
            hadamard_integral(to_real_function(f), PositiveReal(alpha), EvalPoint(t), nodes);
        return py::make_tuple(r.value, r.estimated_error);
      },
      py::arg("f"), py::arg("alpha"), py::arg("t"), py::arg("nodes") = kDefaultNodes,
      "Hadamard integral of order alpha on [1, t]; returns (value, estimated_error).");

  m.def(
      "hadamard_integral_graded",
      [](const FunctionArg& f, double alpha, double t, int n) {
        const OperatorResult r =
            hadamard_integral_graded(to_real_function(f), PositiveReal(alpha), EvalPoint(t), n);
        return py::make_tuple(r.value, r.estimated_error);
      },
      py::arg("f"), py::arg("alpha"), py::arg("t"), py::arg("n") = 4096);

  m.def(
      "hadamard_derivative",
      [](const FunctionArg& f, double alpha, double t, int nodes) {
        const OperatorResult r = hadamard_derivative(to_real_function(f), alpha, EvalPoint(t), nodes);
        return py::make_tuple(r.value, r.estimated_error);
      },
      py::arg("f"), py::arg("alpha"), py::arg("t"), py::arg("nodes") = kDefaultNodes,
      "Hadamard derivative of order alpha in (0, 1); returns (value, estimated_error).");

  m.def(
      "semigroup_residual",
      [](const FunctionArg& f, double alpha, double beta, double t, int nodes) {
        return semigroup_residual(to_real_function(f), PositiveReal(alpha), PositiveReal(beta),
                                  EvalPoint(t), nodes);
      },
      py::arg("f"), py::arg("alpha"), py::arg("beta"), py::arg("t"),
      py::arg("nodes") = kDefaultNodes);

  m.def(
      "power_rule_integral",
      [](double beta, double alpha, double t) {
        return power_rule_integral(PositiveReal(beta), PositiveReal(alpha), EvalPoint(t));
      },
      py::arg("beta"), py::arg("alpha"), py::arg("t"));

  m.def(
      "power_rule_derivative",
      [](double beta, double alpha, double t) {
        return power_rule_derivative(PositiveReal(beta), alpha, EvalPoint(t));
      },
      py::arg("beta"), py::arg("alpha"), py::arg("t"));

  m.def(
      "hadamard_rule",
      [](double alpha, int n) {
        const QuadratureRule rule = build_hadamard_rule(alpha, n);
        return py::make_tuple(std::vector<double>(rule.nodes().begin(), rule.nodes().end()),
                              std::vector<double>(rule.weights().begin(), rule.weights().end()));
      },
      py::arg("alpha"), py::arg("n") = kDefaultNodes,
      "Nodes s_i in (0, 1) and weights w_i for integrals of s^(alpha-1) g(s) over [0, 1].");

  m.def(
      "parse_expr", [](const std::string& text) { return serialize(parse_expr(text)); },
      py::arg("text"), "Parses an expression and returns its canonical fully parenthesised form.");

  m.def(
      "eval_expr", [](const std::string& text, double tau) { return eval_expr(parse_expr(text), tau); },
      py::arg("text"), py::arg("tau"));

  m.def(
      "constant_polya_szego",
      [](const FunctionArg& x, const FunctionArg& y, double m_, double M, double n, double N,
         double alpha, double t) {
        return report_to_dict(constant_polya_szego(to_real_function(x), to_real_function(y),
                                                   ConstantBounds(m_, M, n, N),
                                                   PositiveReal(alpha), EvalPoint(t)));
      },
      py::arg("x"), py::arg("y"), py::arg("m"), py::arg("M"), py::arg("n"), py::arg("N"),
      py::arg("alpha"), py::arg("t"));

  m.def(
      "minkowsky_related",
      [](const FunctionArg& x, const FunctionArg& y, double p, double m_, double M, double alpha,
         double t) {
        return report_to_dict(minkowsky_related(to_real_function(x), to_real_function(y),
                                                HolderPair::from_p(p), m_, M, PositiveReal(alpha),
                                                EvalPoint(t)));
      },
      py::arg("x"), py::arg("y"), py::arg("p"), py::arg("m"), py::arg("M"), py::arg("alpha"),
      py::arg("t"));

  m.def(
      "power_mean_check",
      [](const FunctionArg& x, const FunctionArg& y, double r, double alpha, double t) {
        return report_to_dict(power_mean_check(to_real_function(x), to_real_function(y), r,
                                               PositiveReal(alpha), EvalPoint(t)));
      },
      py::arg("x"), py::arg("y"), py::arg("r"), py::arg("alpha"), py::arg("t"));

  m.def(
      "fuzz",
      [](const std::string& theorem, std::int64_t trials, std::uint64_t seed, int nodes,
         double rel_tol, unsigned threads) {
        FuzzConfig config;
        config.theorem = theorem_from(theorem);
        config.trials = trials;
        config.master_seed = seed;
        config.nodes = nodes;
        config.rel_tol = rel_tol;
        config.threads = threads;
        std::ostringstream csv;
        RunSummary summary;
        {
          py::gil_scoped_release release;
          summary = run_fuzz(config, csv);
        }
        py::dict d;
        d["trials_run"] = summary.trials_run;
        d["passes"] = summary.passes;
        d["failures"] = summary.failures;
        d["worst_ratio"] = summary.worst_ratio;
        d["worst_seed"] = summary.worst_seed;
        d["wall_time"] = summary.wall_time.count();
        return py::make_tuple(d, csv.str());
      },
      py::arg("theorem"), py::arg("trials") = 1000, py::arg("seed") = 0,
      py::arg("nodes") = kDefaultNodes, py::arg("rel_tol") = 1e-9, py::arg("threads") = 0,
      "Runs the fuzzer; returns (summary dict, CSV text).");
}
