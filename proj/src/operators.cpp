#include "hadafrac/operators.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hadafrac/errors.hpp"

namespace hadafrac {

namespace {

constexpr double kDerivativeStep = 1e-5;
constexpr double kRoughnessThreshold = 1e-3;

// Hadamard integral of order rule.alpha() with upper limit exp(log_t). Works in log
// space so nested evaluations never round tau back to exactly 1.
double integral_at_log(const RealFunction& f, const QuadratureRule& rule, double log_t) {
  const auto complements = rule.complements();
  const auto weights = rule.weights();
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.size(); ++i) {
    sum += weights[i] * f(std::exp(complements[i] * log_t));
  }
  const double alpha = rule.alpha();
  const double value = std::pow(log_t, alpha) / gamma_function(alpha) * sum;
  if (!std::isfinite(value)) {
    throw ConvergenceError("Hadamard integral of " + f.label() + " is not finite");
  }
  return value;
}

void require_matching_order(const QuadratureRule& rule, double alpha) {
  if (std::abs(rule.alpha() - alpha) > 1e-15 * alpha) {
    throw DomainError("quadrature rule built for order " + std::to_string(rule.alpha()) +
                      " used with order " + std::to_string(alpha));
  }
}

}  // namespace

EvalPoint::EvalPoint(double t) : t_(t), log_t_(std::log(t)) {
  if (!(t > 1.0) || !std::isfinite(t)) {
    throw DomainError("evaluation point must satisfy t > 1, got " + std::to_string(t));
  }
}

RulePair RulePair::build(double alpha, int n) {
  return RulePair{build_hadamard_rule(alpha, n), build_hadamard_rule(alpha, 2 * n)};
}

double hadamard_sum(const RealFunction& f, const QuadratureRule& rule, const EvalPoint& t) {
  return integral_at_log(f, rule, t.log());
}

OperatorResult hadamard_integral(const RealFunction& f, PositiveReal alpha, const EvalPoint& t,
                                 const RulePair& rules) {
  require_matching_order(rules.rule, alpha);
  require_matching_order(rules.refined, alpha);
  OperatorResult result;
  result.value = integral_at_log(f, rules.rule, t.log());
  const double refined = integral_at_log(f, rules.refined, t.log());
  result.estimated_error = std::abs(refined - result.value);
  result.nodes_used = static_cast<int>(rules.rule.size());
  return result;
}

OperatorResult hadamard_integral(const RealFunction& f, PositiveReal alpha, const EvalPoint& t,
                                 int nodes) {
  return hadamard_integral(f, alpha, t, RulePair::build(alpha, nodes));
}

OperatorResult hadamard_integral_graded(const RealFunction& f, PositiveReal alpha,
                                        const EvalPoint& t, int n) {
  if (n < 8) {
    throw DomainError("graded trapezoid needs n >= 8, got " + std::to_string(n));
  }
  // With u = L sigma^(2/alpha): u^(alpha-1) du = L^alpha (2/alpha) sigma dsigma, so a
  // uniform trapezoid in sigma is the graded-mesh trapezoid in u with a bounded integrand.
  const double log_t = t.log();
  const double grading = 2.0 / alpha;
  const double h = 1.0 / n;
  double even_sum = 0.0;
  double odd_sum = 0.0;
  for (int j = 1; j <= n; ++j) {
    const double sigma = static_cast<double>(j) / n;
    const double log_tau = log_t * (1.0 - std::pow(sigma, grading));
    const double tau = (j == n) ? 1.0 : std::exp(log_tau);
    const double term = sigma * f(tau) * ((j == n) ? 0.5 : 1.0);
    (j % 2 == 0 ? even_sum : odd_sum) += term;
  }
  const double scale = std::pow(log_t, alpha) * grading / gamma_function(alpha);
  const double fine = scale * h * (even_sum + odd_sum);
  // Same trapezoid on every other point; the endpoint halves carry over since n is even or
  // the last point has weight 1/2 in both sums.
  const double coarse = (n % 2 == 0) ? scale * 2.0 * h * even_sum : fine;
  OperatorResult result;
  result.value = fine;
  result.estimated_error = std::abs(fine - coarse) / 3.0;
  result.nodes_used = n + 1;
  if (!std::isfinite(result.value)) {
    throw ConvergenceError("graded Hadamard integral of " + f.label() + " is not finite");
  }
  return result;
}

double power_rule_integral(PositiveReal beta, PositiveReal alpha, const EvalPoint& t) {
  return gamma_function(beta) / gamma_function(beta + alpha) *
         std::pow(t.log(), beta + alpha - 1.0);
}

double power_rule_derivative(PositiveReal beta, double alpha, const EvalPoint& t) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw DomainError("derivative power rule needs 0 < alpha < 1, got " + std::to_string(alpha));
  }
  if (!(beta - alpha > 0.0)) {
    throw DomainError("derivative power rule needs beta > alpha");
  }
  return gamma_function(beta) / gamma_function(beta - alpha) *
         std::pow(t.log(), beta - alpha - 1.0);
}

OperatorResult hadamard_derivative(const RealFunction& f, double alpha, const EvalPoint& t,
                                   const RulePair& rules) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw DomainError("Hadamard derivative is implemented for 0 < alpha < 1, got " +
                      std::to_string(alpha));
  }
  const double order = 1.0 - alpha;
  require_matching_order(rules.rule, order);
  require_matching_order(rules.refined, order);

  const double h = kDerivativeStep * t.value();
  const double t_lo = t.value() - h;
  if (!(t_lo > 1.0)) {
    throw DomainError("Hadamard derivative needs t - h > 1, t = " + std::to_string(t.value()));
  }
  const EvalPoint below(t_lo);
  const EvalPoint above(t.value() + h);

  auto central = [&](const QuadratureRule& rule, double* forward, double* backward) {
    const double lo = hadamard_sum(f, rule, below);
    const double hi = hadamard_sum(f, rule, above);
    if (forward != nullptr) {
      const double mid = hadamard_sum(f, rule, t);
      *forward = (hi - mid) / h;
      *backward = (mid - lo) / h;
    }
    return t.value() * (hi - lo) / (2.0 * h);
  };

  double forward = 0.0;
  double backward = 0.0;
  OperatorResult result;
  result.value = central(rules.rule, &forward, &backward);
  result.estimated_error = std::abs(central(rules.refined, nullptr, nullptr) - result.value);
  result.nodes_used = static_cast<int>(rules.rule.size());
  const double scale = std::max(std::abs(forward), std::abs(backward));
  result.roughness_warning = std::abs(forward - backward) > kRoughnessThreshold * scale;
  if (!std::isfinite(result.value)) {
    throw ConvergenceError("Hadamard derivative of " + f.label() + " is not finite");
  }
  return result;
}

OperatorResult hadamard_derivative(const RealFunction& f, double alpha, const EvalPoint& t,
                                   int nodes) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw DomainError("Hadamard derivative is implemented for 0 < alpha < 1, got " +
                      std::to_string(alpha));
  }
  return hadamard_derivative(f, alpha, t, RulePair::build(1.0 - alpha, nodes));
}

double semigroup_residual(const RealFunction& f, PositiveReal alpha, PositiveReal beta,
                          const EvalPoint& t, int n) {
  if (n < 16) {
    throw DomainError("semigroup check needs n >= 16, got " + std::to_string(n));
  }
  const QuadratureRule outer = build_hadamard_rule(alpha, n);
  const QuadratureRule inner = build_hadamard_rule(beta, n);
  const QuadratureRule combined = build_hadamard_rule(alpha + beta, 2 * n);

  const double log_t = t.log();
  const auto complements = outer.complements();
  const auto weights = outer.weights();
  double sum = 0.0;
  for (std::size_t i = 0; i < outer.size(); ++i) {
    sum += weights[i] * integral_at_log(f, inner, complements[i] * log_t);
  }
  const double nested = std::pow(log_t, alpha) / gamma_function(alpha) * sum;
  const double single = integral_at_log(f, combined, log_t);
  if (!std::isfinite(nested)) {
    throw ConvergenceError("nested Hadamard integral of " + f.label() + " is not finite");
  }
  return std::abs(nested - single) / std::max(1.0, std::abs(single));
}

}  // namespace hadafrac
