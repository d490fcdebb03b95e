#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

#include "hadafrac/operators.hpp"
#include "hadafrac/real_function.hpp"

namespace hadafrac {

/// The nine checks: four theorems, three constant-bound corollaries, and the two
/// auxiliary steps (Young, power mean) of the Minkowski-type bound.
enum class TheoremId { T31, T32, T33, P31, P32, P33, T34, YOUNG, POWMEAN };

inline constexpr TheoremId kAllTheorems[] = {TheoremId::T31, TheoremId::T32, TheoremId::T33,
                                             TheoremId::P31, TheoremId::P32, TheoremId::P33,
                                             TheoremId::T34, TheoremId::YOUNG, TheoremId::POWMEAN};

std::string_view to_string(TheoremId id) noexcept;
std::optional<TheoremId> parse_theorem_id(std::string_view text) noexcept;

/// Envelopes u1 <= x <= u2 and v1 <= y <= v2, all strictly positive.
struct BoundingQuadruple {
  RealFunction u1;
  RealFunction u2;
  RealFunction v1;
  RealFunction v2;
};

/// Constant bounds 0 < x_lo <= x <= x_hi and 0 < y_lo <= y <= y_hi.
class ConstantBounds {
 public:
  ConstantBounds(double x_lo, double x_hi, double y_lo, double y_hi);

  double x_lo() const noexcept { return x_lo_; }
  double x_hi() const noexcept { return x_hi_; }
  double y_lo() const noexcept { return y_lo_; }
  double y_hi() const noexcept { return y_hi_; }

 private:
  double x_lo_, x_hi_, y_lo_, y_hi_;
};

/// Conjugate exponents, 1/p + 1/q = 1 within 1e-12, p, q > 1.
class HolderPair {
 public:
  HolderPair(double p, double q);
  static HolderPair from_p(double p);

  double p() const noexcept { return p_; }
  double q() const noexcept { return q_; }

 private:
  double p_, q_;
};

struct InequalityParams {
  std::optional<double> alpha = std::nullopt;
  std::optional<double> beta = std::nullopt;
  std::optional<double> t = std::nullopt;
  std::optional<double> p = std::nullopt;  // the power-mean exponent r is reported here
  std::optional<double> q = std::nullopt;
};

struct InequalityReport {
  TheoremId theorem = TheoremId::T31;
  double lhs = 0.0;
  double bound = 0.0;
  double ratio = 0.0;   // lhs / bound
  double margin = 0.0;  // bound - lhs
  bool pass = false;    // lhs <= bound (1 + rel_tol) + abs_tol
  InequalityParams params;
  std::optional<std::uint64_t> seed;
  double rel_tol = 0.0;
  double abs_tol = 0.0;
};

struct CheckOptions {
  int nodes = kDefaultNodes;
  double rel_tol = 1e-9;
  double abs_tol = 1e-12;
  /// Geometric sample count for hypothesis checks, in addition to every quadrature node.
  int envelope_samples = 256;
};

/// True iff lo(tau) <= f(tau) <= hi(tau) and lo(tau) > 0 at `samples` points geometrically
/// spaced in [1, t] and at every tau in `extra_points`. Requires samples >= 2.
bool verify_envelope(const RealFunction& f, const RealFunction& lo, const RealFunction& hi,
                     const EvalPoint& t, int samples, std::span<const double> extra_points = {});

/// First tau at which verify_envelope would fail, if any.
std::optional<double> find_envelope_violation(const RealFunction& f, const RealFunction& lo,
                                              const RealFunction& hi, const EvalPoint& t,
                                              int samples,
                                              std::span<const double> extra_points = {});

/// D{v1 v2 x^2} D{u1 u2 y^2} <= (1/4) (D{(u1 v1 + u2 v2) x y})^2, all of order alpha.
InequalityReport polya_szego_single(const RealFunction& x, const RealFunction& y,
                                    const BoundingQuadruple& env, PositiveReal alpha,
                                    const EvalPoint& t, const CheckOptions& opts = {});

/// Two-order form: x-side integrals of order alpha, y-side of order beta.
InequalityReport polya_szego_double(const RealFunction& x, const RealFunction& y,
                                    const BoundingQuadruple& env, PositiveReal alpha,
                                    PositiveReal beta, const EvalPoint& t,
                                    const CheckOptions& opts = {});

/// D^a{x^2} D^b{y^2} <= D^a{u2 x y / v1} D^b{v2 x y / u1}.
InequalityReport product_bound(const RealFunction& x, const RealFunction& y,
                               const BoundingQuadruple& env, PositiveReal alpha,
                               PositiveReal beta, const EvalPoint& t,
                               const CheckOptions& opts = {});

InequalityReport constant_polya_szego(const RealFunction& x, const RealFunction& y,
                                      const ConstantBounds& cb, PositiveReal alpha,
                                      const EvalPoint& t, const CheckOptions& opts = {});

InequalityReport constant_polya_szego_two_order(const RealFunction& x, const RealFunction& y,
                                                const ConstantBounds& cb, PositiveReal alpha,
                                                PositiveReal beta, const EvalPoint& t,
                                                const CheckOptions& opts = {});

/// Bound (x_hi y_hi / (x_lo y_lo)) D^a{x y} D^b{x y}: the product bound with constant envelopes.
InequalityReport ratio_bound_constant(const RealFunction& x, const RealFunction& y,
                                      const ConstantBounds& cb, PositiveReal alpha,
                                      PositiveReal beta, const EvalPoint& t,
                                      const CheckOptions& opts = {});

/// Requires 0 < m < x/y < M on [1, t].
InequalityReport minkowsky_related(const RealFunction& x, const RealFunction& y,
                                   const HolderPair& hp, double m, double M, PositiveReal alpha,
                                   const EvalPoint& t, const CheckOptions& opts = {});

/// The three successively weaker bounds on D{x y} from which minkowsky_related is built:
/// Young's inequality, then the ratio bounds, then the power-mean step.
struct MinkowskyChain {
  double lhs = 0.0;
  double young_bound = 0.0;
  double ratio_bound = 0.0;
  double final_bound = 0.0;
};

MinkowskyChain minkowsky_chain(const RealFunction& x, const RealFunction& y, const HolderPair& hp,
                               double m, double M, PositiveReal alpha, const EvalPoint& t,
                               const CheckOptions& opts = {});

/// D{x y} <= D{x^p}/p + D{y^q}/q for x, y >= 0.
InequalityReport young_pointwise_check(const RealFunction& x, const RealFunction& y,
                                       const HolderPair& hp, PositiveReal alpha,
                                       const EvalPoint& t, const CheckOptions& opts = {});

/// D{(x + y)^r} <= 2^(r-1) D{x^r + y^r} for r > 1, x, y >= 0.
InequalityReport power_mean_check(const RealFunction& x, const RealFunction& y, double r,
                                  PositiveReal alpha, const EvalPoint& t,
                                  const CheckOptions& opts = {});

/// (ln t)^(alpha+beta) / (Gamma(alpha+1) Gamma(beta+1)).
double two_order_prefactor_explicit(PositiveReal alpha, PositiveReal beta, const EvalPoint& t);
/// D^(-alpha){1}(t) D^(-beta){1}(t) through the quadrature used by the checks.
double two_order_prefactor(PositiveReal alpha, PositiveReal beta, const EvalPoint& t,
                           int nodes = kDefaultNodes);

}  // namespace hadafrac
