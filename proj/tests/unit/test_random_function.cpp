#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "hadafrac/errors.hpp"
#include "hadafrac/random_function.hpp"

using namespace hadafrac;

TEST(SplitMix64, MatchesReferenceStream) {
  // First outputs of the reference SplitMix64 generator seeded with 0.
  SplitMix64 rng(0);
  EXPECT_EQ(rng.next(), 0xe220a8397b1dcdafULL);
  EXPECT_EQ(rng.next(), 0x6e789e6aa1b965f4ULL);
  EXPECT_EQ(rng.next(), 0x06c45d188009454fULL);
}

TEST(SplitMix64, UniformRanges) {
  SplitMix64 rng(17);
  for (int i = 0; i < 10000; ++i) {
    const double u = rng.uniform();
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
    const int k = rng.uniform_int(-2, 3);
    EXPECT_GE(k, -2);
    EXPECT_LE(k, 3);
  }
}

TEST(DeriveSeed, PureAndDistinct) {
  EXPECT_EQ(derive_seed(1, 5), derive_seed(1, 5));
  std::set<std::uint64_t> seen;
  for (std::uint64_t parent : {0ULL, 1ULL, 2ULL}) {
    for (std::uint64_t stream = 0; stream < 1000; ++stream) {
      seen.insert(derive_seed(parent, stream));
    }
  }
  EXPECT_EQ(seen.size(), 3000u);
}

TEST(RandomFunction, DegreeZeroIsAConstantInRange) {
  const BoundedFunction f = random_bounded_function(42, 1.0, 2.0, 1, 0);
  const double value = f.function(1.0);
  EXPECT_GE(value, 1.0);
  EXPECT_LE(value, 2.0);
  for (double tau : {1.5, 3.0, 100.0}) {
    EXPECT_EQ(f.function(tau), value);
  }
  EXPECT_EQ(f.lo_envelope(5.0), 1.0);
  EXPECT_EQ(f.hi_envelope(5.0), 2.0);
  EXPECT_TRUE(f.function.smooth_on(std::log(50.0)));
}

TEST(RandomFunction, DenseSamplingStaysInRange) {
  const BoundedFunction f = random_bounded_function(7, 0.5, 3.0, 4, 2);
  const double log_t = std::log(20.0);
  for (int i = 0; i <= 10000; ++i) {
    const double value = f.function.at_log(log_t * i / 10000);
    EXPECT_GE(value, 0.5);
    EXPECT_LE(value, 3.0);
  }
}

TEST(RandomFunction, NeverEscapesForManySeeds) {
  SplitMix64 params(1234);
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const double lo = params.uniform(0.1, 2.0);
    const double hi = lo + params.uniform(0.01, 5.0);
    const BoundedFunction f =
        random_bounded_function(seed, lo, hi, params.uniform_int(1, 16), params.uniform_int(0, 4));
    const double log_t = 4.0;
    int violations = 0;
    for (int i = 0; i <= 10000; ++i) {
      const double value = f.function.at_log(log_t * i / 10000);
      violations += (value < lo || value > hi) ? 1 : 0;
    }
    EXPECT_EQ(violations, 0) << "seed " << seed;
  }
}

TEST(RandomFunction, PiecesJoinContinuously) {
  const BoundedFunction f = random_bounded_function(11, 1.0, 2.0, 6, 3);
  const auto& breaks = f.function.breakpoints();
  for (std::size_t j = 1; j < breaks.size(); ++j) {
    const double left = f.function.raw_at_log(std::nextafter(breaks[j], 0.0));
    const double right = f.function.raw_at_log(breaks[j]);
    EXPECT_NEAR(left, right, 1e-12 * (1.0 + std::abs(right)));
  }
}

TEST(RandomFunction, Deterministic) {
  const BoundedFunction a = random_bounded_function(99, 0.5, 1.5, 5, 4);
  const BoundedFunction b = random_bounded_function(99, 0.5, 1.5, 5, 4);
  EXPECT_EQ(a.function.breakpoints(), b.function.breakpoints());
  EXPECT_EQ(a.function.coefficients(), b.function.coefficients());
  const BoundedFunction other = random_bounded_function(100, 0.5, 1.5, 5, 4);
  EXPECT_NE(a.function.coefficients(), other.function.coefficients());
}

TEST(RandomFunction, SmoothnessFlag) {
  // One piece and an unreachable clip range: a plain polynomial in ln tau.
  const PiecewiseLogPoly poly({0.0}, {{1.0, 0.5, -0.1}}, 0.0, 100.0);
  EXPECT_TRUE(poly.smooth_on(2.0));
  EXPECT_TRUE(poly.as_function(2.0).smooth());
  const PiecewiseLogPoly clipped({0.0}, {{1.0, 1.0}}, 0.0, 1.5);
  EXPECT_TRUE(clipped.smooth_on(0.4));
  EXPECT_FALSE(clipped.smooth_on(0.6));
  const PiecewiseLogPoly joined({0.0, 1.0}, {{1.0}, {1.0, 0.2}}, 0.0, 10.0);
  EXPECT_TRUE(joined.smooth_on(0.9));
  EXPECT_FALSE(joined.smooth_on(1.1));
}

TEST(RandomFunction, ParameterErrors) {
  EXPECT_THROW(random_bounded_function(1, 0.0, 1.0, 1, 1), DomainError);
  EXPECT_THROW(random_bounded_function(1, 2.0, 1.0, 1, 1), DomainError);
  EXPECT_THROW(random_bounded_function(1, 1.0, 2.0, 0, 1), DomainError);
  EXPECT_THROW(random_bounded_function(1, 1.0, 2.0, 17, 1), DomainError);
  EXPECT_THROW(random_bounded_function(1, 1.0, 2.0, 1, 5), DomainError);
  EXPECT_THROW(PiecewiseLogPoly({0.5}, {{1.0}}, 0.0, 1.0), DomainError);
  EXPECT_THROW(PiecewiseLogPoly({0.0, 0.0}, {{1.0}, {1.0}}, 0.0, 1.0), DomainError);
  EXPECT_THROW(PiecewiseLogPoly({0.0}, {{}}, 0.0, 1.0), DomainError);
  EXPECT_THROW(PiecewiseLogPoly({0.0}, {{1.0}}, 2.0, 1.0), DomainError);
}
