#include "hadafrac/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <string>

#include "hadafrac/errors.hpp"

namespace hadafrac {

namespace {

constexpr int kMaxNewtonIterations = 100;
constexpr double kSplitPoint = 0.5;
constexpr double kGradingExponent = 4.0;

// Monic recurrence p_{k+1}(s) = (s - a_k) p_k(s) - b_k p_{k-1}(s) for s^(alpha-1) on [0, 1].
struct Recurrence {
  std::vector<double> a;
  std::vector<double> sqrt_b;  // sqrt_b[k] = sqrt(b_k), k >= 1
  double mu0;
};

Recurrence shifted_jacobi_recurrence(double alpha, int n) {
  // Jacobi parameters (0, beta) on [-1, 1], beta = alpha - 1 > -1.
  const double beta = alpha - 1.0;
  Recurrence rec;
  rec.a.resize(n);
  rec.sqrt_b.resize(n + 1);
  rec.mu0 = 1.0 / alpha;
  for (int k = 0; k < n; ++k) {
    const double two_k_b = 2.0 * k + beta;
    const double a_sym = (k == 0) ? beta / (beta + 2.0) : beta * beta / (two_k_b * (two_k_b + 2.0));
    rec.a[k] = 0.5 * (1.0 + a_sym);
  }
  rec.sqrt_b[0] = 0.0;
  for (int k = 1; k <= n; ++k) {
    const double kk = k;
    const double two_k_b = 2.0 * kk + beta;
    const double b_sym = 4.0 * kk * kk * (kk + beta) * (kk + beta) /
                         (two_k_b * two_k_b * (two_k_b + 1.0) * (two_k_b - 1.0));
    rec.sqrt_b[k] = std::sqrt(0.25 * b_sym);
  }
  return rec;
}

struct PolyValue {
  double value;
  double derivative;
};

// Orthonormal polynomial of degree n and its derivative at s.
PolyValue orthonormal(const Recurrence& rec, int n, double s) {
  double prev = 0.0;
  double prev_d = 0.0;
  double cur = 1.0 / std::sqrt(rec.mu0);
  double cur_d = 0.0;
  for (int k = 0; k < n; ++k) {
    const double next = ((s - rec.a[k]) * cur - rec.sqrt_b[k] * prev) / rec.sqrt_b[k + 1];
    const double next_d = (cur + (s - rec.a[k]) * cur_d - rec.sqrt_b[k] * prev_d) / rec.sqrt_b[k + 1];
    prev = cur;
    prev_d = cur_d;
    cur = next;
    cur_d = next_d;
  }
  return {cur, cur_d};
}

double christoffel_weight(const Recurrence& rec, int n, double s) {
  double prev = 0.0;
  double cur = 1.0 / std::sqrt(rec.mu0);
  double sum = cur * cur;
  for (int k = 0; k + 1 < n; ++k) {
    const double next = ((s - rec.a[k]) * cur - rec.sqrt_b[k] * prev) / rec.sqrt_b[k + 1];
    prev = cur;
    cur = next;
    sum += cur * cur;
  }
  return 1.0 / sum;
}

struct RawRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

RawRule gauss_jacobi_unit(double alpha, int n) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw DomainError("quadrature order must be positive, got " + std::to_string(alpha));
  }
  if (n < 1) {
    throw DomainError("quadrature needs at least one node");
  }
  const Recurrence rec = shifted_jacobi_recurrence(alpha, n);
  RawRule rule;
  rule.nodes.reserve(n);
  for (int i = 0; i < n; ++i) {
    double s = 0.5 * (1.0 - std::cos((2.0 * i + 1.0) * std::numbers::pi / (2.0 * n)));
    bool converged = false;
    for (int iter = 0; iter < kMaxNewtonIterations; ++iter) {
      const PolyValue p = orthonormal(rec, n, s);
      double deflation = 0.0;
      for (double root : rule.nodes) {
        deflation += 1.0 / (s - root);
      }
      const double step = p.value / (p.derivative - p.value * deflation);
      double next = s - step;
      if (next <= 0.0) {
        next = 0.5 * s;
      } else if (next >= 1.0) {
        next = 0.5 * (1.0 + s);
      }
      const double change = std::abs(next - s);
      s = next;
      // The recurrence works at unit scale, so tiny nodes are only accurate to an absolute
      // few ulps of 1; accept either a relative or an absolute stall.
      if (change <= 1e-14 * s || change <= 1e-16) {
        converged = true;
        break;
      }
    }
    if (!converged || !std::isfinite(s)) {
      throw ConvergenceError("Gauss-Jacobi node " + std::to_string(i) + " of " +
                             std::to_string(n) + " for alpha=" + std::to_string(alpha) +
                             " did not converge");
    }
    rule.nodes.push_back(s);
  }
  std::sort(rule.nodes.begin(), rule.nodes.end());
  rule.weights.reserve(n);
  for (double s : rule.nodes) {
    rule.weights.push_back(christoffel_weight(rec, n, s));
  }
  return rule;
}

void require_node_count(int n) {
  if (n < 2) {
    throw DomainError("quadrature rule needs n >= 2, got " + std::to_string(n));
  }
}

}  // namespace

QuadratureRule::QuadratureRule(double alpha, std::vector<double> nodes,
                               std::vector<double> complements, std::vector<double> weights)
    : alpha_(alpha),
      nodes_(std::move(nodes)),
      complements_(std::move(complements)),
      weights_(std::move(weights)) {
  if (!(alpha_ > 0.0)) {
    throw DomainError("rule order must be positive");
  }
  if (nodes_.empty() || nodes_.size() != weights_.size() || nodes_.size() != complements_.size()) {
    throw DomainError("rule nodes, complements and weights must be nonempty and equally sized");
  }
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (!(nodes_[i] > 0.0 && nodes_[i] < 1.0) || !(complements_[i] > 0.0) ||
        !(weights_[i] > 0.0) || !std::isfinite(weights_[i])) {
      throw ConvergenceError("rule node " + std::to_string(i) + " outside (0,1) or nonpositive weight");
    }
    if (i > 0 && !(nodes_[i] > nodes_[i - 1])) {
      throw ConvergenceError("rule nodes are not strictly increasing");
    }
  }
  const double expected = 1.0 / alpha_;
  if (std::abs(weight_sum() - expected) > 1e-12 * expected) {
    throw ConvergenceError("rule weights do not integrate s^(alpha-1) to 1/alpha");
  }
}

double QuadratureRule::weight_sum() const noexcept {
  return std::accumulate(weights_.begin(), weights_.end(), 0.0);
}

QuadratureRule build_jacobi_rule(double alpha, int n) {
  require_node_count(n);
  RawRule raw = gauss_jacobi_unit(alpha, n);
  std::vector<double> complements(raw.nodes.size());
  std::transform(raw.nodes.begin(), raw.nodes.end(), complements.begin(),
                 [](double s) { return 1.0 - s; });
  return QuadratureRule(alpha, std::move(raw.nodes), std::move(complements), std::move(raw.weights));
}

QuadratureRule build_hadamard_rule(double alpha, int n) {
  require_node_count(n);
  const int near_count = (n + 1) / 2;
  const int far_count = n - near_count;

  const RawRule near = gauss_jacobi_unit(alpha, near_count);
  const RawRule far = gauss_jacobi_unit(1.0, far_count);

  std::vector<double> nodes;
  std::vector<double> complements;
  std::vector<double> weights;
  nodes.reserve(n);
  complements.reserve(n);
  weights.reserve(n);

  // Near half: exact mass c^alpha / alpha, restored after scaling to absorb the rounding of
  // the Christoffel sums.
  const double near_mass = std::pow(kSplitPoint, alpha) / alpha;
  double near_sum = 0.0;
  for (int i = 0; i < near_count; ++i) {
    const double s = kSplitPoint * near.nodes[i];
    nodes.push_back(s);
    complements.push_back(1.0 - s);
    weights.push_back(near.weights[i]);
    near_sum += weights.back();
  }
  for (int i = 0; i < near_count; ++i) {
    weights[i] *= near_mass / near_sum;
  }
  // s = 1 - (1 - c) v^m, ds = (1 - c) m v^(m-1) dv; walk v downwards so s increases.
  const double far_width = 1.0 - kSplitPoint;
  double far_sum = 0.0;
  for (int i = far_count - 1; i >= 0; --i) {
    const double v = far.nodes[i];
    const double complement = far_width * std::pow(v, kGradingExponent);
    const double s = 1.0 - complement;
    const double jacobian = far_width * kGradingExponent * std::pow(v, kGradingExponent - 1.0);
    nodes.push_back(s);
    complements.push_back(complement);
    weights.push_back(far.weights[i] * jacobian * std::pow(s, alpha - 1.0));
    far_sum += weights.back();
  }
  // Renormalise the graded half to its exact mass (1 - c^alpha) / alpha; the correction is
  // at rounding level for n >= 32 and keeps the weight-sum invariant for coarse rules.
  const double far_mass = -std::expm1(alpha * std::log(kSplitPoint)) / alpha;
  const double correction = far_mass / far_sum;
  for (int i = near_count; i < n; ++i) {
    weights[i] *= correction;
  }
  return QuadratureRule(alpha, std::move(nodes), std::move(complements), std::move(weights));
}

}  // namespace hadafrac
