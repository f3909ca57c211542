// Copyright 2026 The Schmidt Games Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "schmidt/rational.h"

#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>

namespace schmidt {
namespace {

TEST(RationalTest, StoredReducedWithPositiveDenominator) {
  const Rational r(6, -4);
  EXPECT_EQ(r.num(), -3);
  EXPECT_EQ(r.den(), 2);
  EXPECT_EQ(r.ToString(), "-3/2");
  EXPECT_EQ(Rational(5).ToString(), "5/1");
}

TEST(RationalTest, ZeroDenominatorThrows) {
  EXPECT_THROW(Rational(1, 0), std::invalid_argument);
  EXPECT_THROW(Rational::Parse("3/0"), std::invalid_argument);
}

TEST(RationalTest, ParsesFractionsAndDecimals) {
  EXPECT_EQ(Rational::Parse("7/11"), Rational(7, 11));
  EXPECT_EQ(Rational::Parse("-0.125"), Rational(-1, 8));
  EXPECT_EQ(Rational::Parse("2.5e-3"), Rational(1, 400));
  EXPECT_EQ(Rational::Parse("42"), Rational(42));
  EXPECT_THROW(Rational::Parse("abc"), std::invalid_argument);
  EXPECT_THROW(Rational::Parse("1/2/3"), std::invalid_argument);
}

TEST(RationalTest, FromDoubleIsExactBinaryValue) {
  EXPECT_EQ(Rational::FromDouble(0.375), Rational(3, 8));
  const Rational tenth = Rational::FromDouble(0.1);
  EXPECT_NE(tenth, Rational(1, 10));
  EXPECT_EQ(tenth.ToDouble(), 0.1);
  EXPECT_THROW(Rational::FromDouble(std::nan("")), std::invalid_argument);
}

TEST(RationalTest, FloorCeilAndNearest) {
  EXPECT_EQ(Rational(-7, 2).floor(), -4);
  EXPECT_EQ(Rational(-7, 2).ceil(), -3);
  EXPECT_EQ(RoundNearest(Rational(5, 2)), 3);
  EXPECT_EQ(RoundNearest(Rational(-5, 2)), -2);
  EXPECT_EQ(DistanceToInteger(Rational(13, 4)), Rational(1, 4));
  EXPECT_EQ(DistanceToInteger(Rational(-1, 2)), Rational(1, 2));
}

TEST(RationalTest, PowAndIntegerSqrt) {
  EXPECT_EQ(Pow(Rational(1, 3), 4), Rational(1, 81));
  EXPECT_EQ(Pow(Rational(3), -2), Rational(1, 9));
  EXPECT_EQ(Pow(Rational(5), 0), Rational(1));
  for (long n = 0; n < 2000; ++n) {
    const BigInt s = IntegerSqrt(BigInt(n));
    EXPECT_LE(s * s, n);
    EXPECT_GT((s + 1) * (s + 1), n);
  }
}

TEST(RationalTest, ArithmeticAgreesWithCrossMultiplication) {
  for (int a = -6; a <= 6; ++a) {
    for (int b = 1; b <= 6; ++b) {
      for (int c = -6; c <= 6; ++c) {
        for (int d = 1; d <= 6; ++d) {
          const Rational x(a, b), y(c, d);
          EXPECT_EQ(x + y, Rational(a * d + c * b, b * d));
          EXPECT_EQ(x * y, Rational(a * c, b * d));
          EXPECT_EQ(x < y, a * d < c * b);
        }
      }
    }
  }
}

}  // namespace
}  // namespace schmidt
