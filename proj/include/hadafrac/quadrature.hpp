#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace hadafrac {

inline constexpr int kDefaultNodes = 64;

/// Positive-weight quadrature rule for the weight s^(alpha-1) on (0, 1).
///
/// Nodes are stored together with their complements 1 - s, which are computed
/// directly by the builders so that nodes crowding s = 1 keep full relative accuracy.
class QuadratureRule {
 public:
  /// Validates the invariants: matching sizes, nodes strictly increasing inside (0, 1),
  /// positive weights, weight sum equal to 1/alpha within 1e-12 relative.
  QuadratureRule(double alpha, std::vector<double> nodes, std::vector<double> complements,
                 std::vector<double> weights);

  double alpha() const noexcept { return alpha_; }
  std::size_t size() const noexcept { return nodes_.size(); }
  std::span<const double> nodes() const noexcept { return nodes_; }
  std::span<const double> complements() const noexcept { return complements_; }
  std::span<const double> weights() const noexcept { return weights_; }

  double weight_sum() const noexcept;

 private:
  double alpha_;
  std::vector<double> nodes_;
  std::vector<double> complements_;
  std::vector<double> weights_;
};

/// n-point Gauss-Jacobi rule for s^(alpha-1) on [0, 1] (Jacobi parameters (0, alpha-1)
/// mapped from [-1, 1]). Exact for polynomials of degree <= 2n - 1.
///
/// Nodes come from Newton iteration on the orthonormal three-term recurrence, started
/// from Chebyshev points with already-found roots deflated; weights from the
/// Christoffel sum. Throws ConvergenceError past 100 iterations for any node.
QuadratureRule build_jacobi_rule(double alpha, int n);

/// Rule used by the Hadamard operators.
///
/// A plain Gauss-Jacobi rule only resolves the s = 0 end of the substituted integral;
/// integrands such as (ln tau)^(beta-1) are also singular at s = 1 (tau = 1). This rule
/// splits (0, 1) at 1/2: ceil(n/2) Gauss-Jacobi nodes on (0, 1/2], and Gauss-Legendre
/// nodes on [1/2, 1) after the grading s = 1 - v^4 / 2, which turns (1 - s)^gamma into
/// the much smoother v^(4 gamma + 3).
QuadratureRule build_hadamard_rule(double alpha, int n);

}  // namespace hadafrac
