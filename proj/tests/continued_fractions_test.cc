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

#include "schmidt/continued_fractions.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

#include "oracles.h"

namespace schmidt {
namespace {

// [0; a_1, ..., a_n] evaluated from the tail.
Rational Evaluate(const CfWord& w) {
  Rational x(0);
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    x = Rational(1) / (Rational(*it) + x);
  }
  return x;
}

// The cylinder runs between [0; w] and [0; w_1, ..., w_n + 1].
std::pair<Rational, Rational> OracleCylinder(const CfWord& w) {
  CfWord up = w;
  up.back() += 1;
  const Rational a = Evaluate(w), b = Evaluate(up);
  return {std::min(a, b), std::max(a, b)};
}

TEST(ContinuantsTest, Examples) {
  const Continuants c = ContinuantsOf(MakeWord({1, 1, 1, 3}));
  EXPECT_EQ(c.q_n, 11);
  EXPECT_EQ(c.q_prev, 3);
  EXPECT_EQ(ContinuantsOf(MakeWord({2})).q_n, 2);
  EXPECT_EQ(ContinuantsOf({}).q_n, 1);
  // q_n is the reduced denominator of [0; w].
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> digit(1, 9);
  for (int t = 0; t < 200; ++t) {
    std::vector<long> d(1 + t % 10);
    for (long& x : d) x = digit(rng);
    const CfWord w = MakeWord(d);
    EXPECT_EQ(ContinuantsOf(w).q_n, Evaluate(w).den());
    const auto conv = Convergents(w);
    ASSERT_EQ(conv.size(), w.size() + 1);
    EXPECT_EQ(Rational(conv.back().first, conv.back().second), Evaluate(w));
    EXPECT_EQ(conv.front().first, 0);
    EXPECT_EQ(conv.front().second, 1);
  }
}

TEST(CylinderTest, KnownIntervals) {
  const Cylinder one = CylinderInterval(MakeWord({1}));
  EXPECT_EQ(one.lo, Rational(1, 2));
  EXPECT_EQ(one.hi, Rational(1));
  const Cylinder three = CylinderInterval(MakeWord({3}));
  EXPECT_EQ(three.lo, Rational(1, 4));
  EXPECT_EQ(three.hi, Rational(1, 3));
  const Cylinder deep = CylinderInterval(MakeWord({1, 1, 1, 3}));
  EXPECT_EQ(deep.lo, Rational(7, 11));
  EXPECT_EQ(deep.hi, Rational(9, 14));
  EXPECT_EQ(WordToString(deep.word), "1,1,1,3");
  EXPECT_THROW(CylinderInterval({}), std::invalid_argument);
  EXPECT_THROW(CylinderInterval(MakeWord({1, 0})), std::invalid_argument);
}

TEST(CylinderTest, MatchesOracleAndLengthFormula) {
  for (int depth = 1; depth <= 8; ++depth) {
    for (const CfWord& w : AllWords({1, 2, 3}, depth)) {
      const Cylinder c = CylinderInterval(w);
      const auto [lo, hi] = OracleCylinder(w);
      ASSERT_EQ(c.lo, lo) << WordToString(w);
      ASSERT_EQ(c.hi, hi) << WordToString(w);
      const BigInt q = ContinuantsOf(w).q_n, qp = ContinuantsOf(w).q_prev;
      ASSERT_EQ(c.length(), Rational(BigInt(1), BigInt(q * (q + qp))));
    }
  }
}

TEST(CylinderTest, NestedAndDisjointToDepthFifteen) {
  std::vector<Cylinder> level = {CylinderInterval(MakeWord({1})),
                                 CylinderInterval(MakeWord({3}))};
  for (int depth = 2; depth <= 15; ++depth) {
    std::vector<Cylinder> next;
    next.reserve(level.size() * 2);
    for (const Cylinder& parent : level) {
      for (long d : {1L, 3L}) {
        CfWord w = parent.word;
        w.push_back(d);
        Cylinder child = CylinderInterval(w);
        ASSERT_GE(child.lo, parent.lo);
        ASSERT_LE(child.hi, parent.hi);
        next.push_back(std::move(child));
      }
    }
    std::sort(next.begin(), next.end(),
              [](const Cylinder& a, const Cylinder& b) { return a.lo < b.lo; });
    for (std::size_t i = 1; i < next.size(); ++i) {
      ASSERT_LT(next[i - 1].hi, next[i].lo) << "depth " << depth;
    }
    level = std::move(next);
  }
  EXPECT_EQ(level.size(), std::size_t{1} << 15);
}

TEST(RatioCheckTest, MatchesOracleAtSmallDepth) {
  const int depth = 6;
  const RatioReport rep = RatioBoundsCheck(depth);
  Rational lo(1), hi(0);
  std::size_t pairs = 0;
  for (int n = 1; n <= depth; ++n) {
    for (const CfWord& parent : AllWords({1, 3}, n)) {
      const auto [plo, phi] = OracleCylinder(parent);
      for (long d : {1L, 3L}) {
        CfWord w = parent;
        w.push_back(d);
        const auto [clo, chi] = OracleCylinder(w);
        const Rational r = (chi - clo) / (phi - plo);
        lo = std::min(lo, r);
        hi = std::max(hi, r);
        ++pairs;
      }
    }
  }
  EXPECT_EQ(rep.pairs_checked, pairs);
  EXPECT_EQ(rep.min_ratio, lo);
  EXPECT_EQ(rep.max_ratio, hi);
  EXPECT_TRUE(rep.within_bounds);
  EXPECT_TRUE(rep.largest_digit_shortest);
  EXPECT_GT(lo, Rational(1, 12));
  EXPECT_LT(hi, Rational(1, 2));
  EXPECT_THROW(RatioBoundsCheck(0), std::invalid_argument);
}

TEST(RatioCheckTest, DepthTwelve) {
  const RatioReport rep = RatioBoundsCheck(12);
  EXPECT_TRUE(rep.within_bounds);
  EXPECT_GT(rep.min_ratio, Rational(1, 12));
  EXPECT_LT(rep.max_ratio, Rational(1, 2));
}

TEST(CfOfRationalTest, Examples) {
  EXPECT_EQ(CfOfRational(Rational(1, 2)), MakeWord({2}));
  EXPECT_EQ(CfOfRational(Rational(7, 11)), MakeWord({1, 1, 1, 3}));
  EXPECT_EQ(CfOfRational(Rational(1)), MakeWord({1}));
  EXPECT_TRUE(CfOfRational(Rational(0)).empty());
  EXPECT_THROW(CfOfRational(Rational(3, 2)), std::invalid_argument);
  EXPECT_THROW(CfOfRational(Rational(-1, 2)), std::invalid_argument);
  std::mt19937_64 rng(9);
  for (int t = 0; t < 300; ++t) {
    const long q = 2 + static_cast<long>(rng() % 5000);
    const long p = 1 + static_cast<long>(rng() % static_cast<unsigned long>(q - 1));
    const Rational x(p, q);
    const CfWord w = CfOfRational(x);
    EXPECT_EQ(Evaluate(w), x);
    EXPECT_GE(w.back(), 2);
  }
}

TEST(CfPrefixTest, MaximalContainingWord) {
  EXPECT_EQ(CfPrefixOfInterval(Rational(7, 11), Rational(9, 14)),
            MakeWord({1, 1, 1, 3}));
  EXPECT_TRUE(CfPrefixOfInterval(Rational(1, 3), Rational(2, 3)).empty());
  std::mt19937_64 rng(17);
  for (int t = 0; t < 200; ++t) {
    const Rational lo(static_cast<long>(1 + rng() % 9000), 10000);
    const Rational hi = lo + Rational(static_cast<long>(1 + rng() % 50), 10000);
    const CfWord w = CfPrefixOfInterval(lo, hi);
    if (!w.empty()) {
      const auto [clo, chi] = OracleCylinder(w);
      EXPECT_LE(clo, lo);
      EXPECT_GE(chi, hi);
    }
    for (long d = 1; d <= 200; ++d) {
      CfWord ext = w;
      ext.push_back(d);
      const auto [clo, chi] = OracleCylinder(ext);
      EXPECT_FALSE(clo <= lo && hi <= chi) << lo << " " << hi << " d=" << d;
    }
  }
}

TEST(QuotientBoundTest, Examples) {
  const Ball inside(Point::Scalar(Rational(197, 308)), Rational(1, 1000));
  const auto cert = QuotientBoundCertificate(inside);
  ASSERT_TRUE(cert.has_value());
  const CfWord w = CfPrefixOfInterval(Rational(197, 308) - Rational(1, 1000),
                                      Rational(197, 308) + Rational(1, 1000));
  EXPECT_EQ(*cert, *std::max_element(w.begin(), w.end()));
  EXPECT_GE(*cert, 3);
  EXPECT_FALSE(
      QuotientBoundCertificate(Ball(Point::Scalar(Rational(0)), Rational(1, 9)))
          .has_value());
  EXPECT_FALSE(QuotientBoundCertificate(
                   Ball(Point::Scalar(Rational(2)), Rational(1, 9)))
                   .has_value());
}

TEST(FractionSearchTest, FractionsInIntervalMatchBruteForce) {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 100; ++t) {
    const Rational lo(static_cast<long>(rng() % 2000) - 1000, 997);
    const Rational hi = lo + Rational(static_cast<long>(1 + rng() % 300), 1000);
    const long cap = 1 + static_cast<long>(rng() % 60);
    std::vector<Rational> brute;
    for (long q = 1; q <= cap; ++q) {
      for (BigInt p = (lo * Rational(q)).ceil(); p <= (hi * Rational(q)).floor();
           ++p) {
        if (std::gcd(std::labs(p.get_si()), q) == 1) {
          brute.emplace_back(p, BigInt(q));
        }
      }
    }
    std::sort(brute.begin(), brute.end());
    EXPECT_EQ(FractionsInInterval(lo, hi, cap), brute);
    const Rational s = SimplestRational(lo, hi);
    EXPECT_GE(s, lo);
    EXPECT_LE(s, hi);
    for (long q = 1; q < s.den(); ++q) {
      EXPECT_GT((lo * Rational(q)).ceil(), (hi * Rational(q)).floor());
    }
  }
  EXPECT_EQ(SimplestRational(Rational(-1, 3), Rational(1, 3)), Rational(0));
  EXPECT_EQ(SimplestRational(Rational(1, 3), Rational(2, 3)), Rational(1, 2));
  EXPECT_EQ(SimplestRational(Rational(-2, 3), Rational(-1, 3)),
            Rational(-1, 2));
}

TEST(FractionSearchTest, WeightedDistance) {
  EXPECT_EQ(WeightedDistance(Rational(2, 5), Rational(9, 20), Rational(1, 2)),
            Rational(1, 5));
  EXPECT_EQ(WeightedDistance(Rational(2, 5), Rational(3, 5), Rational(1, 2)),
            Rational(0));
  EXPECT_EQ(WeightedDistance(Rational(1, 10), Rational(1, 10), Rational(0)),
            Rational(1, 10));
}

TEST(FractionSearchTest, RelevantFractionsAttainTheMinimum) {
  std::mt19937_64 rng(29);
  for (int t = 0; t < 200; ++t) {
    const Rational c(static_cast<long>(rng() % 100000), 99991);
    const Rational rho(1, static_cast<long>(20 + rng() % 5000));
    const long cap = 1 + static_cast<long>(rng() % 80);
    const auto rel = RelevantFractions(c - rho, c + rho, cap);
    for (const Rational& f : rel) {
      EXPECT_LE(f.den(), cap);
    }
    // A few sub-intervals W inside U.
    for (int k = 0; k < 5; ++k) {
      const Rational r = rho * Rational(1 + static_cast<long>(rng() % 7), 8);
      const Rational off =
          (rho - r) * Rational(static_cast<long>(rng() % 201) - 100, 100);
      const Rational lo = c + off - r, hi = c + off + r;
      const Rational brute = oracle::BruteWeightedMin(lo, hi, cap);
      ASSERT_FALSE(rel.empty());
      Rational best = WeightedDistance(lo, hi, rel.front());
      for (const Rational& f : rel) best = std::min(best, WeightedDistance(lo, hi, f));
      EXPECT_EQ(best, brute) << "c=" << c << " rho=" << rho << " cap=" << cap;
    }
  }
}

TEST(FractionSearchTest, RelevantFractionsStaySmallForHugeCaps) {
  const Rational c(1, 3);
  const Rational rho = Pow(Rational(2), -80);
  const BigInt cap = IntegerSqrt((Rational(1, 8) / rho).floor());
  const auto rel = RelevantFractions(c - rho, c + rho, cap);
  EXPECT_LT(rel.size(), 500u);
  EXPECT_NE(std::find(rel.begin(), rel.end(), Rational(1, 3)), rel.end());
}

}  // namespace
}  // namespace schmidt
