#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "bondnum/numeric.hpp"

using namespace bondnum;

namespace {

// Smallest c with c^q >= base^p, by exact integer search.
std::int64_t ceil_power_oracle(std::int64_t base, unsigned p, unsigned q) {
  const BigInt target = boost::multiprecision::pow(BigInt(base), p);
  std::int64_t c = 0;
  while (boost::multiprecision::pow(BigInt(c), q) < target) ++c;
  return c;
}

ExactRational random_rational(std::mt19937_64& rng) {
  const auto num = static_cast<std::int64_t>(rng() % 2000001) - 1000000;
  const auto den = static_cast<std::int64_t>(rng() % 999) + 1;
  return ExactRational(BigInt(num), BigInt(den));
}

bool contains(const IntervalReal& x, const ExactRational& q) { return !x.certainly_below(q) && !x.certainly_above(q); }

}  // namespace

TEST(IntegerHelpers, FloorCeilDiv) {
  EXPECT_EQ(floor_div(7, 2), 3);
  EXPECT_EQ(floor_div(-7, 2), -4);
  EXPECT_EQ(ceil_div(7, 2), 4);
  EXPECT_EQ(ceil_div(-7, 2), -3);
  EXPECT_EQ(ceil_div(6, 3), 2);
}

TEST(IntegerHelpers, Isqrt) {
  for (std::uint64_t x = 0; x < 5000; ++x) {
    const std::uint64_t r = isqrt(x);
    EXPECT_LE(r * r, x);
    EXPECT_GT((r + 1) * (r + 1), x);
  }
  EXPECT_EQ(isqrt(std::uint64_t{1} << 62), std::uint64_t{1} << 31);
  EXPECT_EQ(isqrt(~std::uint64_t{0}), 4294967295ULL);
}

TEST(IntegerHelpers, AtLeastPower) {
  EXPECT_TRUE(at_least_power(32, 4, 5, 2));   // 32 >= 4^2.5 = 32
  EXPECT_FALSE(at_least_power(31, 4, 5, 2));
  EXPECT_TRUE(at_least_power(9, 3, 19, 10));  // 9 >= 3^1.9
  EXPECT_FALSE(at_least_power(8, 3, 19, 10));
}

TEST(CeilSqrtExpr, Examples) {
  EXPECT_EQ(ceil_sqrt_expr(3, 49, 2), 5);
  EXPECT_EQ(ceil_sqrt_expr(3, 9, 2), 3);
  EXPECT_EQ(ceil_sqrt_expr(3, 225, 2), 9);
  EXPECT_EQ(ceil_sqrt_expr(3, 17, 2), 4);
  EXPECT_EQ(floor_sqrt_expr(3, 49, 2), 5);
  EXPECT_EQ(floor_sqrt_expr(-13, 169, 2), 0);
}

TEST(CeilSqrtExpr, AgreesWithFloatAwayFromBoundaries) {
  std::mt19937_64 rng(3);
  int compared = 0;
  for (int t = 0; t < 20000; ++t) {
    const auto c0 = static_cast<std::int64_t>(rng() % 201) - 100;
    const auto c1 = static_cast<std::int64_t>(rng() % 100000);
    const auto c2 = static_cast<std::int64_t>(rng() % 12) + 1;
    const long double x = (c0 + std::sqrt(static_cast<long double>(c1))) / c2;
    if (std::fabs(x - std::round(x)) < 1e-9L) continue;
    ++compared;
    EXPECT_EQ(ceil_sqrt_expr(c0, c1, c2), static_cast<std::int64_t>(std::ceil(x))) << c0 << ' ' << c1 << ' ' << c2;
    EXPECT_EQ(floor_sqrt_expr(c0, c1, c2), static_cast<std::int64_t>(std::floor(x)));
  }
  EXPECT_GT(compared, 15000);
}

TEST(CeilSqrtExpr, ExactOnPerfectSquares) {
  for (std::int64_t s = 0; s < 300; ++s)
    for (std::int64_t c2 = 1; c2 <= 5; ++c2) {
      EXPECT_EQ(ceil_sqrt_expr(3, s * s, c2), ceil_div(3 + s, c2));
      EXPECT_EQ(floor_sqrt_expr(3, s * s, c2), floor_div(3 + s, c2));
    }
}

TEST(ExactRational, NormalizationAndArithmetic) {
  const ExactRational a(BigInt(6), BigInt(-4));
  EXPECT_EQ(a.numerator(), -3);
  EXPECT_EQ(a.denominator(), 2);
  EXPECT_EQ(a + ExactRational(BigInt(3), BigInt(2)), ExactRational(0));
  EXPECT_EQ(ExactRational(BigInt(1), BigInt(3)) * ExactRational(3), ExactRational(1));
  EXPECT_EQ((ExactRational(1) / ExactRational(BigInt(2), BigInt(7))).str(), "7/2");
  EXPECT_EQ(ExactRational(BigInt(0), BigInt(-5)).denominator(), 1);
  EXPECT_LT(ExactRational(BigInt(1), BigInt(3)), ExactRational(BigInt(1), BigInt(2)));
  EXPECT_EQ(a.floor(), -2);
  EXPECT_EQ(ExactRational(BigInt(7), BigInt(2)).floor(), 3);
  EXPECT_THROW(ExactRational(BigInt(1), BigInt(0)), std::domain_error);
  EXPECT_THROW(ExactRational(1) / ExactRational(0), std::domain_error);
}

TEST(ExactRational, FieldLawsOnRandomValues) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 2000; ++t) {
    const ExactRational x = random_rational(rng);
    const ExactRational y = random_rational(rng);
    const ExactRational z = random_rational(rng);
    EXPECT_EQ(x + y, y + x);
    EXPECT_EQ((x + y) + z, x + (y + z));
    EXPECT_EQ(x * (y + z), x * y + x * z);
    EXPECT_EQ(x - x, ExactRational(0));
    if (!y.is_zero()) {
      EXPECT_EQ((x / y) * y, x);
    }
  }
}

TEST(IntervalReal, ContainsExactRationalResults) {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 3000; ++t) {
    const ExactRational x = random_rational(rng);
    const ExactRational y = random_rational(rng);
    const IntervalReal ix = IntervalReal::rational(x);
    const IntervalReal iy = IntervalReal::rational(y);
    EXPECT_TRUE(contains(ix, x));
    EXPECT_TRUE(contains(ix + iy, x + y));
    EXPECT_TRUE(contains(ix - iy, x - y));
    EXPECT_TRUE(contains(ix * iy, x * y));
    EXPECT_TRUE(contains(-ix, -x));
    if (!y.is_zero()) {
      EXPECT_TRUE(contains(ix / iy, x / y));
    }
    // The interval never contradicts an exact ordering.
    if (x < y) {
      EXPECT_FALSE(ix.certainly_above(y));
    }
    if (x > y) {
      EXPECT_FALSE(ix.certainly_below(y));
    }
  }
}

TEST(IntervalReal, SqrtOfSquareContainsRoot) {
  for (std::int64_t s = 1; s < 200; ++s) {
    const IntervalReal r = IntervalReal::integer(s * s).sqrt();
    EXPECT_TRUE(contains(r, ExactRational(s)));
    EXPECT_EQ(r.floor_if_determined(), s);  // exact squares give a point interval
  }
}

TEST(IntervalReal, FloorDeterminedForIrrational) {
  const IntervalReal r = IntervalReal::integer(2).sqrt();
  EXPECT_EQ(r.floor_if_determined(), 1);
  EXPECT_EQ(r.ceil_if_determined(), 2);
  EXPECT_THROW(IntervalReal::integer(0).log(), std::domain_error);
  EXPECT_THROW(IntervalReal::integer(1) / IntervalReal::integer(0), std::domain_error);
}

TEST(CeilPower, Examples) {
  EXPECT_EQ(ceil_power(1, 7, 10), 1);
  EXPECT_EQ(ceil_power(6, 7, 10), 4);
  EXPECT_EQ(ceil_power(0, 7, 10), 0);
  EXPECT_EQ(ceil_power(1024, 7, 10), 128);  // exact root
  EXPECT_EQ(ceil_power(32, 3, 5), 8);
  EXPECT_EQ(ceil_power(6, 3, 5), 3);
  EXPECT_THROW(ceil_power(5, 10, 10), std::domain_error);
}

TEST(CeilPower, MatchesExactIntegerOracle) {
  for (std::int64_t b = 0; b <= 400; ++b) {
    EXPECT_EQ(ceil_power(b, 7, 10), ceil_power_oracle(b, 7, 10)) << b;
    EXPECT_EQ(ceil_power(b, 3, 5), ceil_power_oracle(b, 3, 5)) << b;
    EXPECT_EQ(ceil_power(b, 1, 2), ceil_power_oracle(b, 1, 2)) << b;
  }
}

TEST(CeilLogPower, Examples) {
  EXPECT_EQ(ceil_log_power(1, 1), 0);
  EXPECT_EQ(ceil_log_power(1, 2), 0);
  EXPECT_EQ(ceil_log_power(3, 1), 2);
  EXPECT_EQ(ceil_log_power(5, 1), 2);
  EXPECT_EQ(ceil_log_power(10, 2), 6);
  EXPECT_EQ(ceil_log_power(12, 2), 7);
  EXPECT_EQ(ceil_log_power(2, 2), 1);
}

TEST(CeilLogPower, AgreesWithLongDouble) {
  for (std::int64_t x = 2; x <= 5000; ++x) {
    const long double l = std::log(static_cast<long double>(x));
    EXPECT_EQ(ceil_log_power(x, 1), static_cast<std::int64_t>(std::ceil(l))) << x;
    EXPECT_EQ(ceil_log_power(x, 2), static_cast<std::int64_t>(std::ceil(l * l))) << x;
  }
}

TEST(FloorRealBound, Examples) {
  EXPECT_EQ(floor_real_bound(BoundShape::EulerOrientable, 2), 15);
  EXPECT_EQ(floor_real_bound(BoundShape::EulerNonorientable, 8), 22);
  EXPECT_EQ(floor_real_bound(BoundShape::TriangleFreeOrientable, 2), 9);  // 7 + 8/3, exact
  EXPECT_THROW(floor_real_bound(BoundShape::EulerOrientable, 0), std::domain_error);
}

TEST(FloorRealBound, AgreesWithLongDoubleEvaluation) {
  for (std::int64_t g = 1; g <= 300; ++g) {
    const long double h = static_cast<long double>(g);
    const long double vals[] = {
        11 + 24 * (h - 1) * (3 - std::sqrt(16 * h + 1)) / (1 - 8 * h),
        11 + 12 * (h - 2) * (3 - std::sqrt(8 * h + 1)) / (1 - 4 * h),
        7 + 8 * (h - 1) / (1 + std::sqrt(2 * h)),
        7 + 4 * (h - 2) / (1 + std::sqrt(h)),
    };
    const BoundShape shapes[] = {BoundShape::EulerOrientable, BoundShape::EulerNonorientable,
                                 BoundShape::TriangleFreeOrientable, BoundShape::TriangleFreeNonorientable};
    for (int i = 0; i < 4; ++i) {
      if (std::fabs(vals[i] - std::round(vals[i])) < 1e-9L) continue;
      EXPECT_EQ(floor_real_bound(shapes[i], g), static_cast<std::int64_t>(std::floor(vals[i]))) << i << ' ' << g;
    }
  }
}
