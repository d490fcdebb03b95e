#include "hadafrac/special_functions.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "hadafrac/errors.hpp"

namespace hadafrac {

PositiveReal::PositiveReal(double value) : value_(value) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw DomainError("expected a positive real, got " + std::to_string(value));
  }
}

namespace {

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczosCoefficients = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

double lanczos(double z) {
  z -= 1.0;
  double series = kLanczosCoefficients[0];
  for (std::size_t i = 1; i < kLanczosCoefficients.size(); ++i) {
    series += kLanczosCoefficients[i] / (z + static_cast<double>(i));
  }
  const double base = z + kLanczosG + 0.5;
  // base^(z + 0.5) overflows near z = 143 even though the product does not; split the power.
  const double half_power = std::pow(base, 0.5 * (z + 0.5));
  const double sqrt_two_pi = std::sqrt(2.0 * std::numbers::pi);
  return sqrt_two_pi * half_power * (half_power * std::exp(-base)) * series;
}

}  // namespace

double gamma_function(double z) {
  if (!(z > 0.0) || !(z <= kGammaMaxArgument)) {
    throw DomainError("gamma: argument must lie in (0, 170], got " + std::to_string(z));
  }
  if (z < 0.5) {
    return lanczos(z + 1.0) / z;
  }
  return lanczos(z);
}

}  // namespace hadafrac
