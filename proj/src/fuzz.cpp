#include "hadafrac/fuzz.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <exception>
#include <ostream>
#include <sstream>
#include <thread>
#include <vector>

#include "hadafrac/errors.hpp"
#include "hadafrac/random_function.hpp"

namespace hadafrac {

namespace {

enum Stream : std::uint64_t { kFunctionX = 1, kFunctionY = 2 };

bool uses_beta(TheoremId id) {
  switch (id) {
    case TheoremId::T32:
    case TheoremId::T33:
    case TheoremId::P32:
    case TheoremId::P33:
      return true;
    default:
      return false;
  }
}

std::string format_number(double value) {
  char buffer[64];
  const auto result =
      std::to_chars(buffer, buffer + sizeof buffer, value, std::chars_format::general, 17);
  return std::string(buffer, result.ptr);
}

std::string format_optional(const std::optional<double>& value) {
  return value ? format_number(*value) : std::string();
}

struct DrawnFunction {
  RealFunction function;
  double lo;
  double hi;
};

// A random function in [lo, hi], or a constant in the equality case (then lo = hi).
DrawnFunction draw_function(SplitMix64& rng, std::uint64_t stream_seed, double log_t,
                            bool constant) {
  const double lo = rng.uniform(0.2, 2.0);
  const double hi = lo * (1.0 + rng.uniform(0.05, 3.0));
  const int pieces = rng.uniform_int(1, 4);
  const int degree = rng.uniform_int(0, 4);
  if (constant) {
    const double c = rng.uniform(lo, hi);
    return {RealFunction::constant(c), c, c};
  }
  const BoundedFunction drawn = random_bounded_function(stream_seed, lo, hi, pieces, degree);
  return {drawn.function.as_function(log_t), lo, hi};
}

// Lower or upper envelope: the constant bound itself, or a blend of it with f. The blend is
// clamped against f so rounding never lets it cross f.
RealFunction draw_envelope(SplitMix64& rng, const DrawnFunction& f, bool lower, bool tight) {
  if (tight) {
    return f.function;
  }
  const double bound = lower ? f.lo : f.hi;
  if (rng.uniform() < 0.5) {
    return RealFunction::constant(bound);
  }
  const double lambda = rng.uniform();
  const RealFunction fn = f.function;
  return RealFunction(
      [fn, bound, lambda, lower](double tau) {
        const double value = fn(tau);
        const double blend = lambda * bound + (1.0 - lambda) * value;
        return lower ? std::min(value, blend) : std::max(value, blend);
      },
      lower ? "lower-blend" : "upper-blend", f.function.smooth());
}

bool within(double small, double large, const CheckOptions& opts) {
  return small <= large * (1.0 + opts.rel_tol) + opts.abs_tol;
}

}  // namespace

void FuzzConfig::validate() const {
  auto check_range = [](const Interval& r, const char* name) {
    if (!(r.lo > 0.0) || !(r.lo <= r.hi) || !std::isfinite(r.hi)) {
      throw DomainError(std::string(name) + " must be a nonempty positive interval");
    }
  };
  if (trials < 1) {
    throw DomainError("trials must be at least 1");
  }
  check_range(alpha_range, "alpha range");
  check_range(beta_range, "beta range");
  check_range(t_range, "t range");
  if (!(t_range.lo > 1.0)) {
    throw DomainError("t range must lie above 1");
  }
  if (nodes < 2) {
    throw DomainError("nodes must be at least 2");
  }
  if (!(rel_tol >= 0.0) || !(abs_tol >= 0.0) || !(kinked_rel_tol >= 0.0)) {
    throw DomainError("tolerances must be nonnegative");
  }
}

std::uint64_t trial_seed(std::uint64_t master_seed, std::uint64_t index) noexcept {
  return derive_seed(master_seed, index);
}

TrialResult run_trial(const FuzzConfig& config, std::uint64_t seed, std::uint64_t index) {
  SplitMix64 rng(seed);
  const TheoremId id = config.theorem;
  const double alpha = rng.uniform(config.alpha_range.lo, config.alpha_range.hi);
  const double beta = rng.uniform(config.beta_range.lo, config.beta_range.hi);
  const EvalPoint t(rng.uniform(config.t_range.lo, config.t_range.hi));
  const bool equality_case = rng.uniform_int(0, 15) == 0;

  const bool constant_functions = equality_case && id != TheoremId::POWMEAN;
  const DrawnFunction x =
      draw_function(rng, derive_seed(seed, kFunctionX), t.log(), constant_functions);
  const DrawnFunction y = (equality_case && id == TheoremId::POWMEAN)
                              ? x
                              : draw_function(rng, derive_seed(seed, kFunctionY), t.log(),
                                              constant_functions);
  // Exponents are drawn for every theorem so the stream layout does not depend on it.
  const double p = rng.uniform(1.1, 5.0);
  const double r = 1.0 + 4.0 * (1.0 - rng.uniform());

  TrialResult result;
  result.index = index;
  result.kinked = !x.function.smooth() || !y.function.smooth();
  result.equality_case = equality_case;
  CheckOptions opts;
  opts.nodes = config.nodes;
  opts.rel_tol = result.kinked ? std::max(config.rel_tol, config.kinked_rel_tol) : config.rel_tol;
  opts.abs_tol = config.abs_tol;

  const PositiveReal a(alpha);
  const PositiveReal b(beta);
  auto envelopes = [&] {
    const bool tight = equality_case;
    BoundingQuadruple env{draw_envelope(rng, x, true, tight), draw_envelope(rng, x, false, tight),
                          draw_envelope(rng, y, true, tight), draw_envelope(rng, y, false, tight)};
    return env;
  };
  auto bounds = [&] { return ConstantBounds(x.lo, x.hi, y.lo, y.hi); };

  switch (id) {
    case TheoremId::T31:
      result.report = polya_szego_single(x.function, y.function, envelopes(), a, t, opts);
      break;
    case TheoremId::T32:
      result.report = polya_szego_double(x.function, y.function, envelopes(), a, b, t, opts);
      break;
    case TheoremId::T33:
      result.report = product_bound(x.function, y.function, envelopes(), a, b, t, opts);
      break;
    case TheoremId::P31:
      result.report = constant_polya_szego(x.function, y.function, bounds(), a, t, opts);
      break;
    case TheoremId::P32:
      result.report = constant_polya_szego_two_order(x.function, y.function, bounds(), a, b, t, opts);
      break;
    case TheoremId::P33:
      result.report = ratio_bound_constant(x.function, y.function, bounds(), a, b, t, opts);
      break;
    case TheoremId::T34: {
      const HolderPair hp = HolderPair::from_p(p);
      const double m = x.lo / y.hi * (1.0 - 1e-3);
      const double M = x.hi / y.lo * (1.0 + 1e-3);
      const MinkowskyChain chain = minkowsky_chain(x.function, y.function, hp, m, M, a, t, opts);
      result.report = minkowsky_related(x.function, y.function, hp, m, M, a, t, opts);
      result.chain_ordered = within(chain.lhs, chain.young_bound, opts) &&
                             within(chain.young_bound, chain.ratio_bound, opts) &&
                             within(chain.ratio_bound, chain.final_bound, opts);
      result.report.pass = result.report.pass && result.chain_ordered;
      break;
    }
    case TheoremId::YOUNG:
      result.report = young_pointwise_check(x.function, y.function, HolderPair::from_p(p), a, t, opts);
      break;
    case TheoremId::POWMEAN:
      result.report = power_mean_check(x.function, y.function, r, a, t, opts);
      break;
  }
  if (!uses_beta(id)) {
    result.report.params.beta.reset();
  }
  result.report.seed = seed;
  return result;
}

namespace {

void fold(RunSummary& summary, const TrialResult& result) {
  const InequalityReport& report = result.report;
  ++summary.trials_run;
  if (report.pass) {
    ++summary.passes;
  } else {
    ++summary.failures;
    if (!summary.first_failure_seed) {
      summary.first_failure_seed = report.seed;
    }
  }
  if (result.kinked) {
    ++summary.kinked_trials;
  }
  if (summary.trials_run == 1 || report.ratio > summary.worst_ratio) {
    summary.worst_ratio = report.ratio;
    summary.worst_seed = report.seed.value_or(0);
  }
}

}  // namespace

RunSummary run_fuzz(const FuzzConfig& config, std::ostream& csv) {
  config.validate();
  const auto start = std::chrono::steady_clock::now();
  const auto trials = static_cast<std::size_t>(config.trials);
  std::vector<std::optional<TrialResult>> results(trials);
  std::vector<std::exception_ptr> errors(trials);

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < trials; i = next++) {
      try {
        results[i] = run_trial(config, trial_seed(config.master_seed, i), i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  unsigned threads = config.threads != 0 ? config.threads : std::thread::hardware_concurrency();
  threads = std::clamp<unsigned>(threads, 1, static_cast<unsigned>(std::min<std::size_t>(trials, 256)));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned k = 0; k < threads; ++k) {
      pool.emplace_back(worker);
    }
  }

  RunSummary summary;
  csv << csv_header() << '\n';
  for (std::size_t i = 0; i < trials; ++i) {
    if (errors[i]) {
      csv.flush();
      std::rethrow_exception(errors[i]);
    }
    csv << csv_row(results[i]->report) << '\n';
    fold(summary, *results[i]);
  }
  csv.flush();
  summary.wall_time = std::chrono::steady_clock::now() - start;
  return summary;
}

RunSummary replay_trial(const FuzzConfig& config, std::uint64_t seed, std::ostream& csv) {
  config.validate();
  const auto start = std::chrono::steady_clock::now();
  const TrialResult result = run_trial(config, seed);
  csv << csv_header() << '\n' << csv_row(result.report) << '\n';
  csv.flush();
  RunSummary summary;
  fold(summary, result);
  summary.wall_time = std::chrono::steady_clock::now() - start;
  return summary;
}

std::string csv_header() { return "theorem,alpha,beta,t,p,q,seed,lhs,bound,ratio,margin,pass"; }

std::string csv_row(const InequalityReport& report) {
  std::string row;
  row += to_string(report.theorem);
  for (const auto* field : {&report.params.alpha, &report.params.beta, &report.params.t,
                            &report.params.p, &report.params.q}) {
    row += ',';
    row += format_optional(*field);
  }
  row += ',';
  if (report.seed) {
    row += std::to_string(*report.seed);
  }
  for (double value : {report.lhs, report.bound, report.ratio, report.margin}) {
    row += ',';
    row += format_number(value);
  }
  row += report.pass ? ",true" : ",false";
  return row;
}

std::string reproducer_command(const FuzzConfig& config, std::uint64_t seed) {
  std::ostringstream out;
  auto range = [](const Interval& r) { return format_number(r.lo) + "," + format_number(r.hi); };
  out << "hadafrac --nodes " << config.nodes << " --rel-tol " << format_number(config.rel_tol)
      << " fuzz --theorem " << to_string(config.theorem) << " --replay " << seed
      << " --alpha-range " << range(config.alpha_range) << " --beta-range "
      << range(config.beta_range) << " --t-range " << range(config.t_range) << " --abs-tol "
      << format_number(config.abs_tol);
  return out.str();
}

std::string format_summary(const FuzzConfig& config, const RunSummary& summary) {
  std::ostringstream out;
  out.precision(15);
  out << "theorem " << to_string(config.theorem) << ": " << summary.trials_run << " trials, "
      << summary.passes << " passed, " << summary.failures << " failed\n";
  out << "kinked trials (rel_tol " << std::max(config.rel_tol, config.kinked_rel_tol)
      << "): " << summary.kinked_trials << "\n";
  out << "worst ratio " << summary.worst_ratio << " (seed " << summary.worst_seed << ")\n";
  out << "wall time " << summary.wall_time.count() << " s\n";
  if (summary.first_failure_seed) {
    out << "reproduce: " << reproducer_command(config, *summary.first_failure_seed) << "\n";
  }
  return out.str();
}

}  // namespace hadafrac
