#pragma once

#include <functional>
#include <memory>
#include <string>
#include <utility>

namespace hadafrac {

/// Real function of one real variable tau, evaluated on [1, t].
///
/// Cheap to copy; the callable is shared and never mutated. Evaluation may throw
/// EvaluationError (parsed expressions report domain faults that way).
class RealFunction {
 public:
  using Callable = std::function<double(double)>;

  RealFunction(Callable fn, std::string label = "f", bool smooth = true);

  static RealFunction constant(double value);
  /// tau -> (ln tau)^(exponent)
  static RealFunction log_power(double exponent);

  double operator()(double tau) const { return (*fn_)(tau); }

  const std::string& label() const noexcept { return label_; }
  /// False when the function is known to have kinks (clipping, piecewise joins).
  bool smooth() const noexcept { return smooth_; }

 private:
  std::shared_ptr<const Callable> fn_;
  std::string label_;
  bool smooth_;
};

}  // namespace hadafrac
