#include "geodesic/rational.hpp"

#include <gtest/gtest.h>

#include <cstdint>
#include <limits>

using namespace geodesic;

TEST(ParseRational, AcceptsIntegersAndFractions) {
  EXPECT_EQ(parse_rational("7"), Rational(7));
  EXPECT_EQ(parse_rational("-3"), Rational(-3));
  EXPECT_EQ(parse_rational("6/4"), Rational(3, 2));
  EXPECT_EQ(parse_rational("-10/5"), Rational(-2));
  EXPECT_EQ(parse_rational("0/9"), Rational(0));
}

TEST(ParseRational, HandlesHugeValues) {
  Rational r = parse_rational("123456789012345678901234567890/3");
  EXPECT_EQ(to_string(r), "41152263004115226300411522630");
}

TEST(ParseRational, RejectsMalformedText) {
  for (const char* bad : {"", "-", "1/", "/2", "1/0", "1.5", "1/-2", "+1", " 1", "a", "1//2", "--1"})
    EXPECT_THROW(parse_rational(bad), std::invalid_argument) << bad;
}

TEST(RationalToString, LowestTermsPositiveDenominator) {
  EXPECT_EQ(to_string(Rational(-4, 6)), "-2/3");
  EXPECT_EQ(to_string(Rational(10, 5)), "2");
  EXPECT_EQ(to_string(parse_rational(to_string(Rational(-7, 12)))), "-7/12");
}

TEST(CheckedRational, ArithmeticMatchesGmp) {
  const std::int64_t vals[] = {-7, -3, -1, 0, 1, 2, 5, 12};
  for (auto an : vals)
    for (std::int64_t ad : {1, 2, 3, 7})
      for (auto bn : vals)
        for (std::int64_t bd : {1, 4, 9}) {
          CheckedRational a(an, ad), b(bn, bd);
          Rational ra(an, ad), rb(bn, bd);
          EXPECT_EQ((a + b).to_rational(), ra + rb);
          EXPECT_EQ((a - b).to_rational(), ra - rb);
          EXPECT_EQ((a * b).to_rational(), ra * rb);
          if (bn != 0) {
            EXPECT_EQ((a / b).to_rational(), ra / rb);
          }
          EXPECT_EQ(a < b, ra < rb);
          EXPECT_EQ(a == b, ra == rb);
        }
}

TEST(CheckedRational, NormalizesSignAndTerms) {
  CheckedRational r(6, -4);
  EXPECT_EQ(r.num(), -3);
  EXPECT_EQ(r.den(), 2);
  EXPECT_EQ(CheckedRational(0, -5).den(), 1);
}

TEST(CheckedRational, ThrowsOnOverflow) {
  const auto big = std::numeric_limits<std::int64_t>::max();
  EXPECT_THROW(CheckedRational(big) + CheckedRational(1), ArithmeticOverflow);
  EXPECT_THROW(CheckedRational(big) * CheckedRational(2), ArithmeticOverflow);
  EXPECT_THROW(-CheckedRational(std::numeric_limits<std::int64_t>::min()), ArithmeticOverflow);
  EXPECT_THROW(CheckedRational(1, big) + CheckedRational(1, big - 1), ArithmeticOverflow);
  EXPECT_THROW(CheckedRational(1) / CheckedRational(0), std::domain_error);
}
