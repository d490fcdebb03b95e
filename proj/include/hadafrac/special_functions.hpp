#pragma once

namespace hadafrac {

/// Strictly positive real; used for operator orders and Gamma arguments.
class PositiveReal {
 public:
  /// Throws DomainError unless value > 0 and finite.
  explicit PositiveReal(double value);

  double value() const noexcept { return value_; }
  operator double() const noexcept { return value_; }

 private:
  double value_;
};

/// Largest argument accepted by gamma(); Gamma(171.7) overflows a double.
inline constexpr double kGammaMaxArgument = 170.0;

/// Gamma function on (0, 170] via the Lanczos approximation (g = 7, 9 terms).
/// Arguments below 0.5 are shifted up with Gamma(z) = Gamma(z + 1) / z.
double gamma_function(double z);

}  // namespace hadafrac
