#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "hadafrac/errors.hpp"
#include "hadafrac/quadrature.hpp"

using namespace hadafrac;

namespace {

double apply(const QuadratureRule& rule, auto&& g) {
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.size(); ++i) {
    sum += rule.weights()[i] * g(rule.nodes()[i], rule.complements()[i]);
  }
  return sum;
}

void expect_well_formed(const QuadratureRule& rule) {
  const auto nodes = rule.nodes();
  const auto complements = rule.complements();
  const auto weights = rule.weights();
  for (std::size_t i = 0; i < rule.size(); ++i) {
    EXPECT_GT(nodes[i], 0.0);
    EXPECT_LT(nodes[i], 1.0);
    EXPECT_GT(weights[i], 0.0);
    EXPECT_NEAR(complements[i], 1.0 - nodes[i], 1e-15);
    if (i > 0) {
      EXPECT_GT(nodes[i], nodes[i - 1]);
    }
  }
  EXPECT_NEAR(rule.weight_sum() * rule.alpha(), 1.0, 1e-12);
}

}  // namespace

TEST(JacobiRule, WeightSums) {
  EXPECT_NEAR(build_jacobi_rule(1.0, 4).weight_sum(), 1.0, 1e-14);
  EXPECT_NEAR(build_jacobi_rule(0.5, 8).weight_sum(), 2.0, 1e-13);
}

TEST(JacobiRule, ExactForPolynomialsUpToDegree2nMinus1) {
  for (double alpha : {0.1, 0.25, 0.5, 1.0, 1.7, 3.0}) {
    for (int n : {2, 5, 12}) {
      const QuadratureRule rule = build_jacobi_rule(alpha, n);
      expect_well_formed(rule);
      for (int k = 0; k <= 2 * n - 1; ++k) {
        const double got = apply(rule, [k](double s, double) { return std::pow(s, k); });
        EXPECT_NEAR(got * (alpha + k), 1.0, 1e-12) << "alpha " << alpha << " n " << n << " k " << k;
      }
    }
  }
}

TEST(JacobiRule, LegendreCase) {
  // alpha = 1 is Gauss-Legendre on [0, 1]: two nodes at (1 -+ 1/sqrt 3) / 2, weights 1/2.
  const QuadratureRule rule = build_jacobi_rule(1.0, 2);
  EXPECT_NEAR(rule.nodes()[0], (1.0 - 1.0 / std::sqrt(3.0)) / 2.0, 1e-15);
  EXPECT_NEAR(rule.nodes()[1], (1.0 + 1.0 / std::sqrt(3.0)) / 2.0, 1e-15);
  EXPECT_NEAR(rule.weights()[0], 0.5, 1e-15);
  EXPECT_NEAR(rule.weights()[1], 0.5, 1e-15);
}

TEST(JacobiRule, LargeRulesConverge) {
  for (double alpha : {0.02, 0.5, 2.5, 20.0}) {
    expect_well_formed(build_jacobi_rule(alpha, 160));
  }
}

TEST(HadamardRule, WellFormedAcrossOrdersAndSizes) {
  for (double alpha : {0.05, 0.25, 0.5, 1.0, 1.5, 3.0, 10.0, 40.0}) {
    for (int n : {2, 3, 8, 17, 64, 128}) {
      SCOPED_TRACE(testing::Message() << "alpha " << alpha << " n " << n);
      const QuadratureRule rule = build_hadamard_rule(alpha, n);
      EXPECT_EQ(rule.size(), static_cast<std::size_t>(n));
      expect_well_formed(rule);
    }
  }
}

TEST(HadamardRule, ResolvesSingularityAtBothEnds) {
  // Integral of s^(alpha-1) (1-s)^(b-1) over (0,1) is the Beta function B(alpha, b).
  for (double alpha : {0.25, 0.5, 1.0, 1.5}) {
    const QuadratureRule rule = build_hadamard_rule(alpha, 64);
    for (double b : {0.5, 1.0, 2.0, 3.0}) {
      const double got = apply(rule, [b](double, double c) { return std::pow(c, b - 1.0); });
      const double beta = std::tgamma(alpha) * std::tgamma(b) / std::tgamma(alpha + b);
      EXPECT_LT(std::abs(got - beta) / beta, 1e-12) << "alpha " << alpha << " b " << b;
    }
  }
}

TEST(HadamardRule, ComplementsKeepRelativeAccuracyNearOne) {
  const QuadratureRule rule = build_hadamard_rule(0.5, 128);
  const double smallest = *std::min_element(rule.complements().begin(), rule.complements().end());
  EXPECT_GT(smallest, 0.0);
  EXPECT_LT(smallest, 1e-8);
}

TEST(QuadratureRuleErrors, RejectsBadArguments) {
  EXPECT_THROW(build_jacobi_rule(0.0, 8), DomainError);
  EXPECT_THROW(build_jacobi_rule(-1.0, 8), DomainError);
  EXPECT_THROW(build_jacobi_rule(1.0, 1), DomainError);
  EXPECT_THROW(build_hadamard_rule(1.0, 0), DomainError);
  EXPECT_THROW(build_hadamard_rule(std::nan(""), 8), DomainError);
}

TEST(QuadratureRuleErrors, ValidatesInvariants) {
  EXPECT_NO_THROW(QuadratureRule(1.0, {0.25, 0.75}, {0.75, 0.25}, {0.5, 0.5}));
  EXPECT_THROW(QuadratureRule(1.0, {0.25, 0.75}, {0.75, 0.25}, {0.5, 0.6}), ConvergenceError);
  EXPECT_THROW(QuadratureRule(1.0, {0.75, 0.25}, {0.25, 0.75}, {0.5, 0.5}), ConvergenceError);
  EXPECT_THROW(QuadratureRule(1.0, {0.0, 0.75}, {1.0, 0.25}, {0.5, 0.5}), ConvergenceError);
  EXPECT_THROW(QuadratureRule(1.0, {0.25, 0.75}, {0.75, 0.25}, {1.5, -0.5}), ConvergenceError);
  EXPECT_THROW(QuadratureRule(1.0, {0.25}, {0.75, 0.25}, {1.0}), DomainError);
}
