#pragma once

#include <cstdint>
#include <vector>

#include "hadafrac/real_function.hpp"

namespace hadafrac {

/// SplitMix64 finaliser; a bijective 64-bit mix.
std::uint64_t mix64(std::uint64_t x) noexcept;

/// Seed for substream `stream` of `parent`. Depends only on its arguments, so trial k of a
/// run is reproducible without replaying trials 0..k-1.
std::uint64_t derive_seed(std::uint64_t parent, std::uint64_t stream) noexcept;

/// Counter-based SplitMix64 stream. Value-type; no global state.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next() noexcept;
  /// Uniform in [0, 1) with 53 random bits.
  double uniform() noexcept;
  double uniform(double lo, double hi) noexcept { return lo + (hi - lo) * uniform(); }
  /// Uniform integer in [lo, hi].
  int uniform_int(int lo, int hi) noexcept;

 private:
  std::uint64_t state_;
};

/// Piecewise polynomial in ln tau, clipped into [clip_lo, clip_hi].
///
/// Piece j covers ln tau in [breakpoints[j], breakpoints[j+1]) (the last piece is
/// unbounded) and is a polynomial in the local offset ln tau - breakpoints[j], lowest
/// degree first. Pieces join continuously before clipping.
class PiecewiseLogPoly {
 public:
  PiecewiseLogPoly(std::vector<double> breakpoints, std::vector<std::vector<double>> coefficients,
                   double clip_lo, double clip_hi);

  double raw_at_log(double log_tau) const;
  double at_log(double log_tau) const;
  double operator()(double tau) const;

  /// True when the raw polynomial leaves [clip_lo, clip_hi] somewhere on ln tau in [0, log_t]
  /// (checked at `samples` uniform points plus the breakpoints).
  bool clipped_on(double log_t, int samples = 1024) const;
  /// No breakpoint inside (0, log_t) and no clipping there.
  bool smooth_on(double log_t) const;

  /// RealFunction view; `smooth()` reports smooth_on(log_t).
  RealFunction as_function(double log_t) const;

  const std::vector<double>& breakpoints() const noexcept { return breakpoints_; }
  const std::vector<std::vector<double>>& coefficients() const noexcept { return coefficients_; }
  double clip_lo() const noexcept { return clip_lo_; }
  double clip_hi() const noexcept { return clip_hi_; }

 private:
  std::vector<double> breakpoints_;
  std::vector<std::vector<double>> coefficients_;
  double clip_lo_;
  double clip_hi_;
};

struct BoundedFunction {
  PiecewiseLogPoly function;
  RealFunction lo_envelope;  // constant lo
  RealFunction hi_envelope;  // constant hi
};

/// Breakpoints of generated functions fall in ln tau in (0, kBreakpointSpan), i.e. tau < e^3.
inline constexpr double kBreakpointSpan = 3.0;

/// Random function clipped into [lo, hi] together with its constant envelopes.
/// Requires 0 < lo < hi, 1 <= pieces <= 16, 0 <= degree <= 4. Bit-identical for equal seeds.
BoundedFunction random_bounded_function(std::uint64_t seed, double lo, double hi, int pieces,
                                        int degree);

}  // namespace hadafrac
