#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace hadafrac {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Iterative node computation failed to converge, or a result came out nonfinite.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Expression text could not be parsed.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t offset, std::vector<std::string> expected);

  std::size_t offset() const noexcept { return offset_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

/// A function evaluation hit a domain fault (ln of a nonpositive value, division by zero, ...).
class EvaluationError : public std::runtime_error {
 public:
  EvaluationError(const std::string& what, std::string subexpression, double tau);

  const std::string& subexpression() const noexcept { return subexpression_; }
  double tau() const noexcept { return tau_; }

 private:
  std::string subexpression_;
  double tau_;
};

/// A hypothesis of an inequality (envelope, bound, sign) does not hold at a sampled point.
class PreconditionError : public std::invalid_argument {
 public:
  PreconditionError(const std::string& what, double tau);

  double tau() const noexcept { return tau_; }

 private:
  double tau_;
};

}  // namespace hadafrac
