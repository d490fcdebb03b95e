#pragma once

#include <chrono>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "hadafrac/inequalities.hpp"

namespace hadafrac {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

struct FuzzConfig {
  TheoremId theorem = TheoremId::T31;
  std::int64_t trials = 1000;
  std::uint64_t master_seed = 0;
  Interval alpha_range{0.1, 3.0};
  Interval beta_range{0.1, 3.0};
  Interval t_range{1.1, 10.0};
  int nodes = kDefaultNodes;
  double rel_tol = 1e-9;
  double abs_tol = 1e-12;
  /// Relative tolerance for trials whose functions have kinks (clipping or piece joins).
  double kinked_rel_tol = 1e-7;
  /// Worker threads; 0 picks the hardware concurrency.
  unsigned threads = 0;

  /// Throws DomainError unless trials >= 1, ranges are nonempty and positive, t_range.lo > 1,
  /// nodes >= 2 and tolerances are nonnegative.
  void validate() const;
};

struct TrialResult {
  std::uint64_t index = 0;
  InequalityReport report;  // report.seed holds the trial seed
  bool kinked = false;
  /// Constant functions with tight bounds (y = x for POWMEAN): the bound is attained.
  bool equality_case = false;
  /// T34 only: lhs <= Young bound <= ratio bound <= final bound, each within tolerance.
  bool chain_ordered = true;
};

struct RunSummary {
  std::int64_t trials_run = 0;
  std::int64_t passes = 0;
  std::int64_t failures = 0;
  std::int64_t kinked_trials = 0;
  double worst_ratio = 0.0;
  std::uint64_t worst_seed = 0;
  std::chrono::duration<double> wall_time{0.0};
  /// Seed of the first failing trial (lowest index), if any.
  std::optional<std::uint64_t> first_failure_seed;
};

/// Seed of trial `index`; trial k never depends on trials before it.
std::uint64_t trial_seed(std::uint64_t master_seed, std::uint64_t index) noexcept;

/// Draws the trial's orders, t, exponents, functions and envelopes from `seed` and runs the
/// configured check. Roughly one trial in sixteen draws an equality case (constant functions
/// with tight bounds; y = x for POWMEAN). A failed T34 chain ordering fails the trial.
TrialResult run_trial(const FuzzConfig& config, std::uint64_t seed, std::uint64_t index = 0);

/// Runs config.trials trials, writing the CSV header and one row per trial in index order.
/// ConvergenceError and PreconditionError from a trial propagate.
RunSummary run_fuzz(const FuzzConfig& config, std::ostream& csv);

/// Runs only the trial with the given seed, writing the CSV header and its row.
RunSummary replay_trial(const FuzzConfig& config, std::uint64_t seed, std::ostream& csv);

std::string csv_header();
std::string csv_row(const InequalityReport& report);

/// Command line that reruns the trial with `seed` in isolation.
std::string reproducer_command(const FuzzConfig& config, std::uint64_t seed);

/// Human-readable multi-line summary; includes a reproducer when there were failures.
std::string format_summary(const FuzzConfig& config, const RunSummary& summary);

}  // namespace hadafrac
