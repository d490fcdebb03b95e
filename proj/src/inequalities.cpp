#include "hadafrac/inequalities.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "hadafrac/errors.hpp"

namespace hadafrac {

namespace {

constexpr std::array<std::string_view, 9> kTheoremNames = {"T31", "T32", "T33", "P31", "P32",
                                                           "P33", "T34", "YOUNG", "POWMEAN"};

// Quadrature of one order at a fixed t, with the node abscissae tau_i exposed so that
// integrands can be tabulated once and combined pointwise.
class OrderQuadrature {
 public:
  OrderQuadrature(double alpha, const EvalPoint& t, int nodes)
      : rule_(build_hadamard_rule(alpha, nodes)),
        scale_(std::pow(t.log(), alpha) / gamma_function(alpha)) {
    taus_.reserve(rule_.size());
    for (double c : rule_.complements()) {
      taus_.push_back(std::exp(c * t.log()));
    }
  }

  const std::vector<double>& taus() const noexcept { return taus_; }

  std::vector<double> sample(const RealFunction& f) const {
    std::vector<double> values;
    values.reserve(taus_.size());
    for (double tau : taus_) {
      values.push_back(f(tau));
    }
    return values;
  }

  template <typename Integrand>
  double integrate(Integrand&& integrand) const {
    const auto weights = rule_.weights();
    double sum = 0.0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
      sum += weights[i] * integrand(i);
    }
    const double value = scale_ * sum;
    if (!std::isfinite(value)) {
      throw ConvergenceError("inequality integrand produced a nonfinite integral");
    }
    return value;
  }

 private:
  QuadratureRule rule_;
  double scale_;
  std::vector<double> taus_;
};

std::vector<double> geometric_samples(const EvalPoint& t, int samples) {
  std::vector<double> taus;
  taus.reserve(samples);
  for (int k = 0; k < samples; ++k) {
    taus.push_back(k == 0 ? 1.0 : std::exp(t.log() * k / (samples - 1)));
  }
  taus.back() = t.value();
  return taus;
}

std::vector<double> hypothesis_points(const EvalPoint& t, int samples,
                                      std::initializer_list<const OrderQuadrature*> quadratures) {
  std::vector<double> taus = geometric_samples(t, samples);
  for (const OrderQuadrature* q : quadratures) {
    taus.insert(taus.end(), q->taus().begin(), q->taus().end());
  }
  return taus;
}

std::string describe(const char* what, const std::string& name, double tau) {
  std::ostringstream out;
  out.precision(17);
  out << what << " (" << name << ") violated at tau = " << tau;
  return out.str();
}

void require_envelope(const RealFunction& f, const RealFunction& lo, const RealFunction& hi,
                      std::span<const double> taus, const char* name) {
  for (double tau : taus) {
    const double low = lo(tau);
    const double value = f(tau);
    if (!(low > 0.0 && low <= value && value <= hi(tau))) {
      throw PreconditionError(describe("envelope 0 < lo <= f <= hi", name, tau), tau);
    }
  }
}

void require_bounds(const RealFunction& f, double lo, double hi, std::span<const double> taus,
                    const char* name) {
  for (double tau : taus) {
    const double value = f(tau);
    if (!(lo <= value && value <= hi)) {
      throw PreconditionError(describe("constant bound lo <= f <= hi", name, tau), tau);
    }
  }
}

void require_nonnegative(const RealFunction& f, std::span<const double> taus, const char* name) {
  for (double tau : taus) {
    if (!(f(tau) >= 0.0)) {
      throw PreconditionError(describe("nonnegativity", name, tau), tau);
    }
  }
}

void require_positive_order(double value, const char* name) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw DomainError(std::string(name) + " must be positive and finite");
  }
}

InequalityReport make_report(TheoremId id, double lhs, double bound, InequalityParams params,
                             const CheckOptions& opts) {
  InequalityReport report;
  report.theorem = id;
  report.lhs = lhs;
  report.bound = bound;
  report.margin = bound - lhs;
  if (bound != 0.0) {
    report.ratio = lhs / bound;
  } else {
    report.ratio = (lhs == 0.0) ? 1.0 : std::numeric_limits<double>::infinity();
  }
  report.pass = lhs <= bound * (1.0 + opts.rel_tol) + opts.abs_tol;
  report.params = params;
  report.rel_tol = opts.rel_tol;
  report.abs_tol = opts.abs_tol;
  return report;
}

double constant_polya_szego_bound(const ConstantBounds& cb) {
  const double r = std::sqrt(cb.x_lo() * cb.y_lo() / (cb.x_hi() * cb.y_hi()));
  const double s = r + 1.0 / r;
  return 0.25 * s * s;
}

}  // namespace

std::string_view to_string(TheoremId id) noexcept {
  return kTheoremNames[static_cast<std::size_t>(id)];
}

std::optional<TheoremId> parse_theorem_id(std::string_view text) noexcept {
  for (std::size_t i = 0; i < kTheoremNames.size(); ++i) {
    if (kTheoremNames[i] == text) {
      return static_cast<TheoremId>(i);
    }
  }
  return std::nullopt;
}

ConstantBounds::ConstantBounds(double x_lo, double x_hi, double y_lo, double y_hi)
    : x_lo_(x_lo), x_hi_(x_hi), y_lo_(y_lo), y_hi_(y_hi) {
  if (!(x_lo > 0.0 && x_lo <= x_hi && std::isfinite(x_hi)) ||
      !(y_lo > 0.0 && y_lo <= y_hi && std::isfinite(y_hi))) {
    throw DomainError("constant bounds need 0 < lo <= hi < infinity for both functions");
  }
}

HolderPair::HolderPair(double p, double q) : p_(p), q_(q) {
  if (!(p > 1.0) || !(q > 1.0) || !std::isfinite(p) || !std::isfinite(q)) {
    throw DomainError("Holder exponents must satisfy p, q > 1");
  }
  if (std::abs(1.0 / p + 1.0 / q - 1.0) > 1e-12) {
    throw DomainError("Holder exponents must satisfy 1/p + 1/q = 1");
  }
}

HolderPair HolderPair::from_p(double p) {
  if (!(p > 1.0) || !std::isfinite(p)) {
    throw DomainError("Holder exponent p must exceed 1");
  }
  return HolderPair(p, p / (p - 1.0));
}

std::optional<double> find_envelope_violation(const RealFunction& f, const RealFunction& lo,
                                              const RealFunction& hi, const EvalPoint& t,
                                              int samples, std::span<const double> extra_points) {
  if (samples < 2) {
    throw DomainError("envelope verification needs at least 2 samples");
  }
  auto violated = [&](double tau) {
    const double low = lo(tau);
    const double value = f(tau);
    return !(low > 0.0 && low <= value && value <= hi(tau));
  };
  for (double tau : geometric_samples(t, samples)) {
    if (violated(tau)) {
      return tau;
    }
  }
  for (double tau : extra_points) {
    if (violated(tau)) {
      return tau;
    }
  }
  return std::nullopt;
}

bool verify_envelope(const RealFunction& f, const RealFunction& lo, const RealFunction& hi,
                     const EvalPoint& t, int samples, std::span<const double> extra_points) {
  return !find_envelope_violation(f, lo, hi, t, samples, extra_points).has_value();
}

InequalityReport polya_szego_single(const RealFunction& x, const RealFunction& y,
                                    const BoundingQuadruple& env, PositiveReal alpha,
                                    const EvalPoint& t, const CheckOptions& opts) {
  const OrderQuadrature qa(alpha, t, opts.nodes);
  const auto points = hypothesis_points(t, opts.envelope_samples, {&qa});
  require_envelope(x, env.u1, env.u2, points, "u1 <= x <= u2");
  require_envelope(y, env.v1, env.v2, points, "v1 <= y <= v2");

  const auto xs = qa.sample(x), ys = qa.sample(y);
  const auto u1 = qa.sample(env.u1), u2 = qa.sample(env.u2);
  const auto v1 = qa.sample(env.v1), v2 = qa.sample(env.v2);
  const double a = qa.integrate([&](std::size_t i) { return v1[i] * v2[i] * xs[i] * xs[i]; });
  const double b = qa.integrate([&](std::size_t i) { return u1[i] * u2[i] * ys[i] * ys[i]; });
  const double c = qa.integrate(
      [&](std::size_t i) { return (v1[i] * u1[i] + v2[i] * u2[i]) * xs[i] * ys[i]; });
  return make_report(TheoremId::T31, a * b, 0.25 * c * c,
                     {.alpha = alpha.value(), .t = t.value()}, opts);
}

InequalityReport polya_szego_double(const RealFunction& x, const RealFunction& y,
                                    const BoundingQuadruple& env, PositiveReal alpha,
                                    PositiveReal beta, const EvalPoint& t,
                                    const CheckOptions& opts) {
  const OrderQuadrature qa(alpha, t, opts.nodes);
  const OrderQuadrature qb(beta, t, opts.nodes);
  const auto points = hypothesis_points(t, opts.envelope_samples, {&qa, &qb});
  require_envelope(x, env.u1, env.u2, points, "u1 <= x <= u2");
  require_envelope(y, env.v1, env.v2, points, "v1 <= y <= v2");

  const auto xs = qa.sample(x), u1 = qa.sample(env.u1), u2 = qa.sample(env.u2);
  const auto ys = qb.sample(y), v1 = qb.sample(env.v1), v2 = qb.sample(env.v2);
  const double uu = qa.integrate([&](std::size_t i) { return u1[i] * u2[i]; });
  const double vv = qb.integrate([&](std::size_t i) { return v1[i] * v2[i]; });
  const double xx = qa.integrate([&](std::size_t i) { return xs[i] * xs[i]; });
  const double yy = qb.integrate([&](std::size_t i) { return ys[i] * ys[i]; });
  const double u1x = qa.integrate([&](std::size_t i) { return u1[i] * xs[i]; });
  const double u2x = qa.integrate([&](std::size_t i) { return u2[i] * xs[i]; });
  const double v1y = qb.integrate([&](std::size_t i) { return v1[i] * ys[i]; });
  const double v2y = qb.integrate([&](std::size_t i) { return v2[i] * ys[i]; });
  const double s = u1x * v1y + u2x * v2y;
  return make_report(TheoremId::T32, uu * vv * xx * yy, 0.25 * s * s,
                     {.alpha = alpha.value(), .beta = beta.value(), .t = t.value()}, opts);
}

InequalityReport product_bound(const RealFunction& x, const RealFunction& y,
                               const BoundingQuadruple& env, PositiveReal alpha,
                               PositiveReal beta, const EvalPoint& t, const CheckOptions& opts) {
  const OrderQuadrature qa(alpha, t, opts.nodes);
  const OrderQuadrature qb(beta, t, opts.nodes);
  const auto points = hypothesis_points(t, opts.envelope_samples, {&qa, &qb});
  require_envelope(x, env.u1, env.u2, points, "u1 <= x <= u2");
  require_envelope(y, env.v1, env.v2, points, "v1 <= y <= v2");

  const auto xa = qa.sample(x), ya = qa.sample(y), u2a = qa.sample(env.u2), v1a = qa.sample(env.v1);
  const auto xb = qb.sample(x), yb = qb.sample(y), v2b = qb.sample(env.v2), u1b = qb.sample(env.u1);
  const double xx = qa.integrate([&](std::size_t i) { return xa[i] * xa[i]; });
  const double yy = qb.integrate([&](std::size_t i) { return yb[i] * yb[i]; });
  const double first = qa.integrate([&](std::size_t i) { return u2a[i] * xa[i] * ya[i] / v1a[i]; });
  const double second = qb.integrate([&](std::size_t i) { return v2b[i] * xb[i] * yb[i] / u1b[i]; });
  return make_report(TheoremId::T33, xx * yy, first * second,
                     {.alpha = alpha.value(), .beta = beta.value(), .t = t.value()}, opts);
}

InequalityReport constant_polya_szego(const RealFunction& x, const RealFunction& y,
                                      const ConstantBounds& cb, PositiveReal alpha,
                                      const EvalPoint& t, const CheckOptions& opts) {
  const OrderQuadrature qa(alpha, t, opts.nodes);
  const auto points = hypothesis_points(t, opts.envelope_samples, {&qa});
  require_bounds(x, cb.x_lo(), cb.x_hi(), points, "m <= x <= M");
  require_bounds(y, cb.y_lo(), cb.y_hi(), points, "n <= y <= N");

  const auto xs = qa.sample(x), ys = qa.sample(y);
  const double xx = qa.integrate([&](std::size_t i) { return xs[i] * xs[i]; });
  const double yy = qa.integrate([&](std::size_t i) { return ys[i] * ys[i]; });
  const double xy = qa.integrate([&](std::size_t i) { return xs[i] * ys[i]; });
  return make_report(TheoremId::P31, xx * yy / (xy * xy), constant_polya_szego_bound(cb),
                     {.alpha = alpha.value(), .t = t.value()}, opts);
}

InequalityReport constant_polya_szego_two_order(const RealFunction& x, const RealFunction& y,
                                                const ConstantBounds& cb, PositiveReal alpha,
                                                PositiveReal beta, const EvalPoint& t,
                                                const CheckOptions& opts) {
  const OrderQuadrature qa(alpha, t, opts.nodes);
  const OrderQuadrature qb(beta, t, opts.nodes);
  const auto points = hypothesis_points(t, opts.envelope_samples, {&qa, &qb});
  require_bounds(x, cb.x_lo(), cb.x_hi(), points, "m <= x <= M");
  require_bounds(y, cb.y_lo(), cb.y_hi(), points, "n <= y <= N");

  const auto xs = qa.sample(x), ys = qb.sample(y);
  const double one_a = qa.integrate([](std::size_t) { return 1.0; });
  const double one_b = qb.integrate([](std::size_t) { return 1.0; });
  const double xx = qa.integrate([&](std::size_t i) { return xs[i] * xs[i]; });
  const double yy = qb.integrate([&](std::size_t i) { return ys[i] * ys[i]; });
  const double x1 = qa.integrate([&](std::size_t i) { return xs[i]; });
  const double y1 = qb.integrate([&](std::size_t i) { return ys[i]; });
  const double denom = x1 * y1;
  return make_report(TheoremId::P32, one_a * one_b * xx * yy / (denom * denom),
                     constant_polya_szego_bound(cb),
                     {.alpha = alpha.value(), .beta = beta.value(), .t = t.value()}, opts);
}

InequalityReport ratio_bound_constant(const RealFunction& x, const RealFunction& y,
                                      const ConstantBounds& cb, PositiveReal alpha,
                                      PositiveReal beta, const EvalPoint& t,
                                      const CheckOptions& opts) {
  const OrderQuadrature qa(alpha, t, opts.nodes);
  const OrderQuadrature qb(beta, t, opts.nodes);
  const auto points = hypothesis_points(t, opts.envelope_samples, {&qa, &qb});
  require_bounds(x, cb.x_lo(), cb.x_hi(), points, "m <= x <= M");
  require_bounds(y, cb.y_lo(), cb.y_hi(), points, "n <= y <= N");

  const auto xa = qa.sample(x), ya = qa.sample(y);
  const auto xb = qb.sample(x), yb = qb.sample(y);
  const double xx = qa.integrate([&](std::size_t i) { return xa[i] * xa[i]; });
  const double yy = qb.integrate([&](std::size_t i) { return yb[i] * yb[i]; });
  const double xy_a = qa.integrate([&](std::size_t i) { return xa[i] * ya[i]; });
  const double xy_b = qb.integrate([&](std::size_t i) { return xb[i] * yb[i]; });
  const double factor = cb.x_hi() * cb.y_hi() / (cb.x_lo() * cb.y_lo());
  return make_report(TheoremId::P33, xx * yy, factor * xy_a * xy_b,
                     {.alpha = alpha.value(), .beta = beta.value(), .t = t.value()}, opts);
}

MinkowskyChain minkowsky_chain(const RealFunction& x, const RealFunction& y, const HolderPair& hp,
                               double m, double M, PositiveReal alpha, const EvalPoint& t,
                               const CheckOptions& opts) {
  require_positive_order(m, "lower ratio bound m");
  if (!(m < M) || !std::isfinite(M)) {
    throw DomainError("ratio bounds need 0 < m < M < infinity");
  }
  const OrderQuadrature qa(alpha, t, opts.nodes);
  for (double tau : hypothesis_points(t, opts.envelope_samples, {&qa})) {
    const double xv = x(tau);
    const double yv = y(tau);
    if (!(yv > 0.0 && xv > 0.0) || !(m < xv / yv && xv / yv < M)) {
      throw PreconditionError(describe("ratio bound 0 < m < x/y < M", "x/y", tau), tau);
    }
  }
  const double p = hp.p();
  const double q = hp.q();
  const auto xs = qa.sample(x), ys = qa.sample(y);
  MinkowskyChain chain;
  chain.lhs = qa.integrate([&](std::size_t i) { return xs[i] * ys[i]; });
  const double xp = qa.integrate([&](std::size_t i) { return std::pow(xs[i], p); });
  const double yq = qa.integrate([&](std::size_t i) { return std::pow(ys[i], q); });
  chain.young_bound = xp / p + yq / q;
  const double sum_p = qa.integrate([&](std::size_t i) { return std::pow(xs[i] + ys[i], p); });
  const double sum_q = qa.integrate([&](std::size_t i) { return std::pow(xs[i] + ys[i], q); });
  const double coef_p = std::pow(M / (M + 1.0), p) / p;
  const double coef_q = 1.0 / (q * std::pow(m + 1.0, q));
  chain.ratio_bound = coef_p * sum_p + coef_q * sum_q;
  const double split_p = qa.integrate(
      [&](std::size_t i) { return std::pow(xs[i], p) + std::pow(ys[i], p); });
  const double split_q = qa.integrate(
      [&](std::size_t i) { return std::pow(xs[i], q) + std::pow(ys[i], q); });
  chain.final_bound = std::pow(2.0, p - 1.0) * coef_p * split_p +
                      std::pow(2.0, q - 1.0) * coef_q * split_q;
  return chain;
}

InequalityReport minkowsky_related(const RealFunction& x, const RealFunction& y,
                                   const HolderPair& hp, double m, double M, PositiveReal alpha,
                                   const EvalPoint& t, const CheckOptions& opts) {
  const MinkowskyChain chain = minkowsky_chain(x, y, hp, m, M, alpha, t, opts);
  return make_report(TheoremId::T34, chain.lhs, chain.final_bound,
                     {.alpha = alpha.value(), .t = t.value(), .p = hp.p(), .q = hp.q()}, opts);
}

InequalityReport young_pointwise_check(const RealFunction& x, const RealFunction& y,
                                       const HolderPair& hp, PositiveReal alpha,
                                       const EvalPoint& t, const CheckOptions& opts) {
  const OrderQuadrature qa(alpha, t, opts.nodes);
  const auto points = hypothesis_points(t, opts.envelope_samples, {&qa});
  require_nonnegative(x, points, "x >= 0");
  require_nonnegative(y, points, "y >= 0");

  const double p = hp.p();
  const double q = hp.q();
  const auto xs = qa.sample(x), ys = qa.sample(y);
  const double xy = qa.integrate([&](std::size_t i) { return xs[i] * ys[i]; });
  const double xp = qa.integrate([&](std::size_t i) { return std::pow(xs[i], p); });
  const double yq = qa.integrate([&](std::size_t i) { return std::pow(ys[i], q); });
  return make_report(TheoremId::YOUNG, xy, xp / p + yq / q,
                     {.alpha = alpha.value(), .t = t.value(), .p = p, .q = q}, opts);
}

InequalityReport power_mean_check(const RealFunction& x, const RealFunction& y, double r,
                                  PositiveReal alpha, const EvalPoint& t,
                                  const CheckOptions& opts) {
  if (!(r > 1.0) || !std::isfinite(r)) {
    throw DomainError("power-mean exponent must exceed 1");
  }
  const OrderQuadrature qa(alpha, t, opts.nodes);
  const auto points = hypothesis_points(t, opts.envelope_samples, {&qa});
  require_nonnegative(x, points, "x >= 0");
  require_nonnegative(y, points, "y >= 0");

  const auto xs = qa.sample(x), ys = qa.sample(y);
  const double lhs = qa.integrate([&](std::size_t i) { return std::pow(xs[i] + ys[i], r); });
  const double split = qa.integrate(
      [&](std::size_t i) { return std::pow(xs[i], r) + std::pow(ys[i], r); });
  return make_report(TheoremId::POWMEAN, lhs, std::pow(2.0, r - 1.0) * split,
                     {.alpha = alpha.value(), .t = t.value(), .p = r}, opts);
}

double two_order_prefactor_explicit(PositiveReal alpha, PositiveReal beta, const EvalPoint& t) {
  return std::pow(t.log(), alpha + beta) /
         (gamma_function(alpha + 1.0) * gamma_function(beta + 1.0));
}

double two_order_prefactor(PositiveReal alpha, PositiveReal beta, const EvalPoint& t, int nodes) {
  const OrderQuadrature qa(alpha, t, nodes);
  const OrderQuadrature qb(beta, t, nodes);
  return qa.integrate([](std::size_t) { return 1.0; }) *
         qb.integrate([](std::size_t) { return 1.0; });
}

}  // namespace hadafrac
