#include "hadafrac/real_function.hpp"

#include <cmath>
#include <sstream>

namespace hadafrac {

RealFunction::RealFunction(Callable fn, std::string label, bool smooth)
    : fn_(std::make_shared<const Callable>(std::move(fn))), label_(std::move(label)), smooth_(smooth) {}

RealFunction RealFunction::constant(double value) {
  std::ostringstream label;
  label << value;
  return RealFunction([value](double) { return value; }, label.str());
}

RealFunction RealFunction::log_power(double exponent) {
  std::ostringstream label;
  label << "ln(x)^" << exponent;
  if (exponent == 0.0) {
    return RealFunction([](double) { return 1.0; }, label.str());
  }
  return RealFunction([exponent](double tau) { return std::pow(std::log(tau), exponent); },
                      label.str());
}

}  // namespace hadafrac
