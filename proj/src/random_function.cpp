#include "hadafrac/random_function.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "hadafrac/errors.hpp"

namespace hadafrac {

namespace {
constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;
}

std::uint64_t mix64(std::uint64_t x) noexcept {
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t parent, std::uint64_t stream) noexcept {
  return mix64(parent + kGolden * (stream + 1));
}

std::uint64_t SplitMix64::next() noexcept {
  state_ += kGolden;
  return mix64(state_);
}

double SplitMix64::uniform() noexcept {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

int SplitMix64::uniform_int(int lo, int hi) noexcept {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(next() % span);
}

PiecewiseLogPoly::PiecewiseLogPoly(std::vector<double> breakpoints,
                                   std::vector<std::vector<double>> coefficients, double clip_lo,
                                   double clip_hi)
    : breakpoints_(std::move(breakpoints)),
      coefficients_(std::move(coefficients)),
      clip_lo_(clip_lo),
      clip_hi_(clip_hi) {
  if (breakpoints_.empty() || breakpoints_.front() != 0.0) {
    throw DomainError("piecewise function breakpoints must start at 0");
  }
  if (coefficients_.size() != breakpoints_.size()) {
    throw DomainError("piecewise function needs one coefficient list per piece");
  }
  if (!(clip_lo_ <= clip_hi_)) {
    throw DomainError("piecewise function clip range is empty");
  }
  for (std::size_t j = 0; j < coefficients_.size(); ++j) {
    if (coefficients_[j].empty()) {
      throw DomainError("piecewise function piece has no coefficients");
    }
    if (j > 0 && !(breakpoints_[j] > breakpoints_[j - 1])) {
      throw DomainError("piecewise function breakpoints must increase strictly");
    }
  }
}

double PiecewiseLogPoly::raw_at_log(double log_tau) const {
  const auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), log_tau);
  const std::size_t piece = (it == breakpoints_.begin()) ? 0 : static_cast<std::size_t>(it - breakpoints_.begin()) - 1;
  const double local = log_tau - breakpoints_[piece];
  const auto& c = coefficients_[piece];
  double value = 0.0;
  for (auto k = c.rbegin(); k != c.rend(); ++k) {
    value = value * local + *k;
  }
  return value;
}

double PiecewiseLogPoly::at_log(double log_tau) const {
  return std::clamp(raw_at_log(log_tau), clip_lo_, clip_hi_);
}

double PiecewiseLogPoly::operator()(double tau) const { return at_log(std::log(tau)); }

bool PiecewiseLogPoly::clipped_on(double log_t, int samples) const {
  auto outside = [&](double l) {
    const double raw = raw_at_log(l);
    return raw < clip_lo_ || raw > clip_hi_;
  };
  for (int i = 0; i <= samples; ++i) {
    if (outside(log_t * i / samples)) {
      return true;
    }
  }
  return std::any_of(breakpoints_.begin(), breakpoints_.end(),
                     [&](double b) { return b <= log_t && outside(b); });
}

bool PiecewiseLogPoly::smooth_on(double log_t) const {
  const bool joins = std::any_of(breakpoints_.begin() + 1, breakpoints_.end(),
                                 [&](double b) { return b < log_t; });
  return !joins && !clipped_on(log_t);
}

RealFunction PiecewiseLogPoly::as_function(double log_t) const {
  std::ostringstream label;
  label << "piecewise(" << coefficients_.size() << " pieces, [" << clip_lo_ << ", " << clip_hi_
        << "])";
  return RealFunction([self = *this](double tau) { return self(tau); }, label.str(),
                      smooth_on(log_t));
}

BoundedFunction random_bounded_function(std::uint64_t seed, double lo, double hi, int pieces,
                                        int degree) {
  if (!(lo > 0.0) || !(lo < hi) || !std::isfinite(hi)) {
    throw DomainError("random function needs 0 < lo < hi");
  }
  if (pieces < 1 || pieces > 16) {
    throw DomainError("random function needs 1 <= pieces <= 16");
  }
  if (degree < 0 || degree > 4) {
    throw DomainError("random function needs 0 <= degree <= 4");
  }
  SplitMix64 rng(seed);
  std::vector<double> breakpoints{0.0};
  for (int j = 1; j < pieces; ++j) {
    breakpoints.push_back(rng.uniform(0.0, kBreakpointSpan));
  }
  std::sort(breakpoints.begin(), breakpoints.end());
  breakpoints.erase(std::unique(breakpoints.begin(), breakpoints.end()), breakpoints.end());

  // Coefficient k has scale (hi - lo) / k!, so the raw curve wanders about one range width
  // per unit of ln tau and is clipped in a fair share of draws.
  const double width = hi - lo;
  std::vector<std::vector<double>> coefficients;
  double start = rng.uniform(lo, hi);
  for (std::size_t j = 0; j < breakpoints.size(); ++j) {
    std::vector<double> c(static_cast<std::size_t>(degree) + 1);
    c[0] = start;
    double factorial = 1.0;
    for (int k = 1; k <= degree; ++k) {
      factorial *= k;
      c[k] = width * rng.uniform(-1.0, 1.0) / factorial;
    }
    coefficients.push_back(std::move(c));
    if (j + 1 < breakpoints.size()) {
      const double local = breakpoints[j + 1] - breakpoints[j];
      const auto& prev = coefficients.back();
      start = 0.0;
      for (auto k = prev.rbegin(); k != prev.rend(); ++k) {
        start = start * local + *k;
      }
    }
  }
  PiecewiseLogPoly function(std::move(breakpoints), std::move(coefficients), lo, hi);
  return BoundedFunction{std::move(function), RealFunction::constant(lo), RealFunction::constant(hi)};
}

}  // namespace hadafrac
