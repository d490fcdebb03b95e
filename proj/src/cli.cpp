#include "hadafrac/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>

#include "hadafrac/errors.hpp"
#include "hadafrac/expression.hpp"
#include "hadafrac/fuzz.hpp"
#include "hadafrac/operators.hpp"

namespace hadafrac {

namespace {

constexpr double kPowercheckTolerance = 1e-10;
constexpr double kSemigroupTolerance = 1e-5;

struct GlobalOptions {
  int nodes = kDefaultNodes;
  double rel_tol = 1e-9;
  std::uint64_t seed = 0;
  std::string out_path;
};

struct OperatorArgs {
  std::string expr;
  double alpha = 0.0;
  double beta = 0.0;
  double t = 0.0;
};

struct PowercheckArgs {
  double max_beta = 3.0;
  double max_alpha = 1.5;
};

struct FuzzArgs {
  std::string theorem = "T31";
  std::int64_t trials = 1000;
  std::vector<double> alpha_range{0.1, 3.0};
  std::vector<double> beta_range{0.1, 3.0};
  std::vector<double> t_range{1.1, 10.0};
  double abs_tol = 1e-12;
  unsigned threads = 0;
  std::optional<std::uint64_t> replay;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

int cmd_integrate(const OperatorArgs& a, const GlobalOptions& g, std::ostream& out) {
  const RealFunction f = parse_function(a.expr);
  const OperatorResult r = hadamard_integral(f, PositiveReal(a.alpha), EvalPoint(a.t), g.nodes);
  out << format_human(r.value) << '\n';
  out << "estimated error " << format_human(r.estimated_error) << '\n';
  return kExitOk;
}

int cmd_derive(const OperatorArgs& a, const GlobalOptions& g, std::ostream& out,
               std::ostream& err) {
  const RealFunction f = parse_function(a.expr);
  const OperatorResult r = hadamard_derivative(f, a.alpha, EvalPoint(a.t), g.nodes);
  out << format_human(r.value) << '\n';
  out << "estimated error " << format_human(r.estimated_error) << '\n';
  if (r.roughness_warning) {
    err << "warning: one-sided differences disagree; the function may not be smooth near t\n";
  }
  return kExitOk;
}

int cmd_powercheck(const PowercheckArgs& a, const GlobalOptions& g, std::ostream& out) {
  if (!(a.max_beta > 0.0) || !(a.max_alpha > 0.0)) {
    throw UsageError("--max-beta and --max-alpha must be positive");
  }
  constexpr double kBetas[] = {1.0, 1.5, 2.0, 3.0};
  constexpr double kAlphas[] = {0.25, 0.5, 0.75, 1.0, 1.5};
  constexpr double kTs[] = {1.5, std::numbers::e, 10.0};
  int points = 0;
  int breaches = 0;
  double worst = 0.0;
  for (double alpha : kAlphas) {
    if (alpha > a.max_alpha) {
      continue;
    }
    const RulePair rules = RulePair::build(alpha, g.nodes);
    for (double beta : kBetas) {
      if (beta > a.max_beta) {
        continue;
      }
      const RealFunction f = RealFunction::log_power(beta - 1.0);
      for (double tv : kTs) {
        const EvalPoint t(tv);
        const double exact = power_rule_integral(PositiveReal(beta), PositiveReal(alpha), t);
        const double got = hadamard_integral(f, PositiveReal(alpha), t, rules).value;
        const double rel = std::abs(got - exact) / std::abs(exact);
        ++points;
        worst = std::max(worst, rel);
        if (!(rel < kPowercheckTolerance)) {
          ++breaches;
          out << "breach beta=" << format_human(beta) << " alpha=" << format_human(alpha)
              << " t=" << format_human(tv) << " rel_err=" << format_human(rel) << '\n';
        }
      }
    }
  }
  if (points == 0) {
    throw UsageError("no grid points lie within --max-beta and --max-alpha");
  }
  out << "grid points " << points << ", passed " << points - breaches << ", failed " << breaches
      << '\n';
  out << "max relative error " << format_human(worst) << '\n';
  return breaches == 0 ? kExitOk : kExitCheckFailed;
}

int cmd_semigroup(const OperatorArgs& a, const GlobalOptions& g, std::ostream& out) {
  const RealFunction f = parse_function(a.expr);
  const double residual =
      semigroup_residual(f, PositiveReal(a.alpha), PositiveReal(a.beta), EvalPoint(a.t), g.nodes);
  out << "residual " << format_human(residual) << '\n';
  return residual < kSemigroupTolerance ? kExitOk : kExitCheckFailed;
}

Interval to_interval(const std::vector<double>& v) { return Interval{v.at(0), v.at(1)}; }

int cmd_fuzz(const FuzzArgs& a, const GlobalOptions& g, std::ostream& out, std::ostream& err) {
  const auto theorem = parse_theorem_id(a.theorem);
  if (!theorem) {
    throw UsageError("unknown theorem '" + a.theorem +
                     "' (expected T31, T32, T33, P31, P32, P33, T34, YOUNG or POWMEAN)");
  }
  FuzzConfig config;
  config.theorem = *theorem;
  config.trials = a.trials;
  config.master_seed = g.seed;
  config.alpha_range = to_interval(a.alpha_range);
  config.beta_range = to_interval(a.beta_range);
  config.t_range = to_interval(a.t_range);
  config.nodes = g.nodes;
  config.rel_tol = g.rel_tol;
  config.abs_tol = a.abs_tol;
  config.threads = a.threads;
  config.validate();

  const RunSummary summary =
      a.replay ? replay_trial(config, *a.replay, out) : run_fuzz(config, out);
  err << format_summary(config, summary);
  return summary.failures == 0 ? kExitOk : kExitCheckFailed;
}

void report_parse_error(const ParseError& e, const std::string& text, std::ostream& err) {
  err << "error: " << e.what() << '\n';
  if (text.size() <= 200 && text.find('\n') == std::string::npos) {
    err << "  " << text << '\n' << "  " << std::string(std::min(e.offset(), text.size()), ' ')
        << "^\n";
  }
}

}  // namespace

std::string format_human(double value) {
  char buffer[64];
  const double magnitude = std::abs(value);
  if (value == 0.0 || (magnitude >= 1e-4 && magnitude < 1e15)) {
    std::snprintf(buffer, sizeof buffer, "%.15f", value);
  } else {
    std::snprintf(buffer, sizeof buffer, "%.14e", value);
  }
  return buffer;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hadamard fractional integrals, derivatives and inequality checks", "hadafrac"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions g;
  app.add_option("--nodes", g.nodes, "Quadrature nodes")->capture_default_str()
      ->check(CLI::Range(2, 4096));
  app.add_option("--rel-tol", g.rel_tol, "Relative tolerance of inequality checks")
      ->capture_default_str()->check(CLI::NonNegativeNumber);
  app.add_option("--seed", g.seed, "Master seed for fuzzing")->envname("HADAFRAC_SEED");
  app.add_option("--out", g.out_path, "Write output to this file instead of stdout");

  OperatorArgs op;
  auto add_expr = [&](CLI::App* sub) {
    sub->add_option("expr", op.expr, "Expression in x, e.g. \"ln(x)^2 + 1\"")->required();
  };

  auto* integrate = app.add_subcommand("integrate", "Hadamard fractional integral of order alpha");
  add_expr(integrate);
  integrate->add_option("--alpha", op.alpha, "Order, > 0")->required();
  integrate->add_option("--t", op.t, "Upper limit, > 1")->required();

  auto* derive = app.add_subcommand("derive", "Hadamard fractional derivative, alpha in (0, 1)");
  add_expr(derive);
  derive->add_option("--alpha", op.alpha, "Order in (0, 1)")->required();
  derive->add_option("--t", op.t, "Evaluation point, > 1")->required();

  PowercheckArgs pc;
  auto* powercheck = app.add_subcommand("powercheck", "Sweep the power-rule oracle grid");
  powercheck->add_option("--max-beta", pc.max_beta, "Largest beta in the grid")->capture_default_str();
  powercheck->add_option("--max-alpha", pc.max_alpha, "Largest alpha in the grid")->capture_default_str();

  auto* semigroup = app.add_subcommand("semigroup", "Residual of the semigroup identity");
  add_expr(semigroup);
  semigroup->add_option("--alpha", op.alpha, "First order, > 0")->required();
  semigroup->add_option("--beta", op.beta, "Second order, > 0")->required();
  semigroup->add_option("--t", op.t, "Upper limit, > 1")->required();

  FuzzArgs fz;
  auto* fuzz = app.add_subcommand("fuzz", "Fuzz one inequality check; CSV rows to stdout or --out");
  fuzz->add_option("--theorem", fz.theorem, "T31 T32 T33 P31 P32 P33 T34 YOUNG POWMEAN")
      ->capture_default_str();
  fuzz->add_option("--trials", fz.trials, "Number of trials")->capture_default_str()
      ->check(CLI::PositiveNumber);
  fuzz->add_option("--alpha-range", fz.alpha_range, "lo,hi")->expected(2)->delimiter(',')
      ->capture_default_str();
  fuzz->add_option("--beta-range", fz.beta_range, "lo,hi")->expected(2)->delimiter(',')
      ->capture_default_str();
  fuzz->add_option("--t-range", fz.t_range, "lo,hi (lo > 1)")->expected(2)->delimiter(',')
      ->capture_default_str();
  fuzz->add_option("--abs-tol", fz.abs_tol, "Absolute tolerance")->capture_default_str();
  fuzz->add_option("--threads", fz.threads, "Worker threads (0 = all cores)");
  fuzz->add_option("--replay", fz.replay, "Run only the trial with this trial seed");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << "run with --help for usage\n";
    return kExitUsage;
  }

  std::ofstream file;
  if (!g.out_path.empty()) {
    file.open(g.out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot open " << g.out_path << " for writing\n";
      return kExitUsage;
    }
  }
  std::ostream& sink = g.out_path.empty() ? out : file;

  try {
    if (*integrate) return cmd_integrate(op, g, sink);
    if (*derive) return cmd_derive(op, g, sink, err);
    if (*powercheck) return cmd_powercheck(pc, g, sink);
    if (*semigroup) return cmd_semigroup(op, g, sink);
    if (*fuzz) return cmd_fuzz(fz, g, sink, err);
  } catch (const ParseError& e) {
    report_parse_error(e, op.expr, err);
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const EvaluationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const ConvergenceError& e) {
    err << "error: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitNumerical;
  }
  return kExitUsage;
}

}  // namespace hadafrac
