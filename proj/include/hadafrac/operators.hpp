#pragma once

#include "hadafrac/quadrature.hpp"
#include "hadafrac/real_function.hpp"
#include "hadafrac/special_functions.hpp"

namespace hadafrac {

/// Upper limit t of a Hadamard integral over [1, t]; requires t > 1.
class EvalPoint {
 public:
  explicit EvalPoint(double t);

  double value() const noexcept { return t_; }
  double log() const noexcept { return log_t_; }
  operator double() const noexcept { return t_; }

 private:
  double t_;
  double log_t_;
};

struct OperatorResult {
  double value = 0.0;
  double estimated_error = 0.0;
  int nodes_used = 0;
  /// Set by hadamard_derivative when forward and backward differences disagree by > 1e-3.
  bool roughness_warning = false;
};

/// An n-node rule together with its 2n-node refinement, used for error estimates.
struct RulePair {
  QuadratureRule rule;
  QuadratureRule refined;

  static RulePair build(double alpha, int n = kDefaultNodes);
};

/// (ln t)^alpha / Gamma(alpha) * sum_i w_i f(t^(1 - s_i)): the Hadamard integral of
/// order rule.alpha() on [1, t], without an error estimate.
double hadamard_sum(const RealFunction& f, const QuadratureRule& rule, const EvalPoint& t);

/// Hadamard fractional integral D^(-alpha) f (t). The value uses rules.rule; the
/// estimated error is |I_n - I_2n| from rules.refined. Throws ConvergenceError on a
/// nonfinite result and lets EvaluationError from f propagate.
OperatorResult hadamard_integral(const RealFunction& f, PositiveReal alpha, const EvalPoint& t,
                                 const RulePair& rules);
OperatorResult hadamard_integral(const RealFunction& f, PositiveReal alpha, const EvalPoint& t,
                                 int nodes = kDefaultNodes);

/// Independent check of hadamard_integral: composite trapezoid in u = ln(t/tau) on the
/// graded mesh u_j = ln t (j/n)^(2/alpha). Second order in n; requires n >= 8.
OperatorResult hadamard_integral_graded(const RealFunction& f, PositiveReal alpha,
                                        const EvalPoint& t, int n);

/// Gamma(beta) / Gamma(beta + alpha) (ln t)^(beta + alpha - 1), the exact integral of (ln x)^(beta-1).
double power_rule_integral(PositiveReal beta, PositiveReal alpha, const EvalPoint& t);

/// Gamma(beta) / Gamma(beta - alpha) (ln t)^(beta - alpha - 1) for 0 < alpha < 1 and beta > alpha.
double power_rule_derivative(PositiveReal beta, double alpha, const EvalPoint& t);

/// Hadamard derivative of order alpha in (0, 1): t d/dt D^(-(1-alpha)) f (t), by central
/// differencing with step h = 1e-5 t. `rules` must be built for order 1 - alpha.
OperatorResult hadamard_derivative(const RealFunction& f, double alpha, const EvalPoint& t,
                                   const RulePair& rules);
OperatorResult hadamard_derivative(const RealFunction& f, double alpha, const EvalPoint& t,
                                   int nodes = kDefaultNodes);

/// |D^(-alpha)[D^(-beta) f](t) - D^(-(alpha+beta)) f(t)| / max(1, |D^(-(alpha+beta)) f(t)|).
/// The composition is evaluated by nested n-node quadrature; the single-order reference
/// uses a 2n-node rule.
double semigroup_residual(const RealFunction& f, PositiveReal alpha, PositiveReal beta,
                          const EvalPoint& t, int n = kDefaultNodes);

}  // namespace hadafrac
