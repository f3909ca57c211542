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

#include "schmidt/friendly_measures.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "schmidt/continued_fractions.h"

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

TEST(CylinderMeasureTest, ContinuedFractionMasses) {
  const CylinderMeasure cf = CylinderMeasure::Preset("cf13");
  for (const MeasureCell& c : cf.CellsAtDepth(1)) {
    EXPECT_EQ(c.mass, Rational(1, 2));
  }
  for (const MeasureCell& c : cf.CellsAtDepth(4)) {
    EXPECT_EQ(c.mass, Rational(1, 16));
  }
  for (int n = 0; n <= 12; ++n) {
    Rational total(0);
    const auto cells = cf.CellsAtDepth(n);
    EXPECT_EQ(cells.size(), std::size_t{1} << n);
    for (const MeasureCell& c : cells) total += c.mass;
    EXPECT_EQ(total, Rational(1)) << "depth " << n;
  }
}

TEST(CylinderMeasureTest, CellBoxesAreCylinders) {
  const CylinderMeasure cf = CylinderMeasure::ContinuedFraction();
  for (const MeasureCell& c : cf.CellsAtDepth(6)) {
    CfWord w, up;
    for (int i : c.word) w.push_back(i == 0 ? 1 : 3);
    up = w;
    up.back() += 1;
    const Rational a = Evaluate(w), b = Evaluate(up);
    EXPECT_EQ(c.lo[0], std::min(a, b));
    EXPECT_EQ(c.hi[0], std::max(a, b));
  }
}

TEST(CylinderMeasureTest, WeightsValidated) {
  EXPECT_THROW(CylinderMeasure::ContinuedFraction({1, 3}, {Rational(1), Rational(0)}),
               std::invalid_argument);
  EXPECT_THROW(
      CylinderMeasure::ContinuedFraction({1, 3}, {Rational(1, 2), Rational(1, 3)}),
      std::invalid_argument);
  EXPECT_THROW(CylinderMeasure::ContinuedFraction({1, 1}), std::invalid_argument);
  EXPECT_THROW(CylinderMeasure::ContinuedFraction({0, 3}), std::invalid_argument);
  const CylinderMeasure cantor = CylinderMeasure::Preset("cantor");
  EXPECT_EQ(cantor.weights(),
            (std::vector<Rational>{Rational(1, 2), Rational(1, 2)}));
  EXPECT_THROW(CylinderMeasure::Preset("nope"), std::invalid_argument);
  EXPECT_THROW(cantor.CellsAtDepth(cantor.depth_cap() + 1), std::invalid_argument);
}

TEST(BallMassTest, Brackets) {
  const CylinderMeasure cantor = CylinderMeasure::Preset("cantor");
  const MassBracket left =
      BallMass(cantor, Ball(Point::Scalar(Rational(0)), Rational(1, 3)), 8);
  EXPECT_EQ(left.lower, Rational(1, 2));
  EXPECT_EQ(left.upper, Rational(1, 2));
  // The gap (1/3, 2/3) carries no mass.
  const MassBracket gap =
      BallMass(cantor, Ball(Point::Scalar(Rational(1, 2)), Rational(1, 10)), 8);
  EXPECT_EQ(gap.upper, Rational(0));

  const CylinderMeasure leb = CylinderMeasure::Preset("lebesgue");
  const Ball b(Point::Scalar(Rational(1, 3)), Rational(1, 7));
  MassBracket prev{Rational(0), Rational(1)};
  for (int d = 2; d <= 14; d += 3) {
    const MassBracket m = BallMass(leb, b, d);
    EXPECT_LE(m.lower, Rational(2, 7));
    EXPECT_GE(m.upper, Rational(2, 7));
    EXPECT_GE(m.lower, prev.lower);
    EXPECT_LE(m.upper, prev.upper);
    EXPECT_LE(m.upper - m.lower, Rational(4) * Pow(Rational(2), -d));
    prev = m;
  }
  EXPECT_THROW(BallMass(leb, Ball(Point({Rational(0), Rational(0)}), Rational(1)), 3),
               std::invalid_argument);
}

TEST(SampleCentersTest, DeterministicAndOnSupport) {
  const CylinderMeasure cf = CylinderMeasure::Preset("cf13");
  const auto a = SampleCenters(cf, 10, 12, 99);
  const auto b = SampleCenters(cf, 10, 12, 99);
  EXPECT_EQ(a, b);
  for (const Point& p : a) {
    const CfWord w = CfOfRational(p[0]);
    ASSERT_GE(w.size(), 12u);
    for (std::size_t i = 0; i < 12; ++i) {
      EXPECT_TRUE(w[i] == 1 || w[i] == 3);
    }
  }
}

TEST(DoublingTest, Cf13IsPositive) {
  const CylinderMeasure cf = CylinderMeasure::Preset("cf13");
  std::vector<Rational> scales;
  for (int k = 2; k <= 8; ++k) scales.push_back(Pow(Rational(3), -k));
  const auto rep = DoublingEstimate(cf, SampleCenters(cf, 16, 24, 1), scales, 16);
  EXPECT_GT(rep.estimate, 0.0);
  EXPECT_EQ(rep.per_scale.size(), scales.size());
  for (double v : rep.per_scale) EXPECT_GE(v, rep.estimate);
}

TEST(DoublingTest, LebesgueNearHalf) {
  const CylinderMeasure leb = CylinderMeasure::Preset("lebesgue");
  const std::vector<Point> centers = {Point::Scalar(Rational(1, 2)),
                                      Point::Scalar(Rational(1, 3))};
  const auto rep = DoublingEstimate(
      leb, centers, {Rational(1, 8), Rational(1, 16), Rational(1, 32)}, 14);
  EXPECT_GT(rep.estimate, 0.45);
  EXPECT_LE(rep.estimate, 0.5 + 1e-12);
}

TEST(DoublingTest, PointMassRejected) {
  const CylinderMeasure pt = CylinderMeasure::Preset("point");
  EXPECT_TRUE(pt.single_point());
  EXPECT_THROW(DoublingEstimate(pt, {Point::Scalar(Rational(0))},
                                {Rational(1, 4)}, 4),
               std::invalid_argument);
}

TEST(DecayTest, LebesgueExponentOne) {
  const CylinderMeasure leb = CylinderMeasure::Preset("lebesgue");
  const auto centers = SampleCenters(leb, 8, 10, 5);
  const std::vector<Rational> scales = {Rational(1, 27), Rational(1, 243)};
  const DecayReport eq = DecayEstimate(leb, centers, scales, 16, 5);
  EXPECT_NEAR(eq.a, 1.0, 0.1);
  // eps = rho covers the ball; the bracket ratio exceeds 1 only by cell slack.
  EXPECT_LE(eq.worst_by_level.front(), 1.01);
  const DecayReport sup =
      DecayEstimate(leb, centers, scales, 16, 5, DecayScale::kSupOverSmaller);
  EXPECT_NEAR(sup.a, eq.a, 0.1);
  EXPECT_THROW(DecayEstimate(CylinderMeasure::Preset("square"), {}, scales, 4),
               std::invalid_argument);
}

TEST(DecayTest, Cf13HasPositiveExponent) {
  const CylinderMeasure cf = CylinderMeasure::Preset("cf13");
  std::vector<Rational> scales = {Pow(Rational(3), -3), Pow(Rational(3), -5)};
  const DecayReport rep =
      DecayEstimate(cf, SampleCenters(cf, 8, 20, 3), scales, 14, 5);
  EXPECT_GT(rep.a, 0.0);
  EXPECT_EQ(rep.eps_levels.size(), 5u);
}

TEST(PolynomialTest, EvalAndRange) {
  Polynomial f;
  f.dim = 2;
  f.terms = {{{2, 0}, Rational(1)}, {{0, 1}, Rational(-3)}, {{0, 0}, Rational(1, 2)}};
  EXPECT_EQ(f.Degree(), 2);
  EXPECT_EQ(f.Eval(Point({Rational(2), Rational(1, 3)})), Rational(7, 2));
  const auto [lo, hi] = f.Range({Rational(-1), Rational(0)}, {Rational(1), Rational(1)});
  EXPECT_LE(lo, Rational(-5, 2));
  EXPECT_GE(hi, Rational(3, 2));
  EXPECT_EQ(Polynomial::Constant(1, Rational(5)).Degree(), 0);
  EXPECT_EQ(Polynomial::Coordinate(3, 1).Eval(
                Point({Rational(1), Rational(7), Rational(2)})),
            Rational(7));
}

TEST(SublevelTest, Examples) {
  const CylinderMeasure leb = CylinderMeasure::Preset("lebesgue");
  const Ball unit(Point::Scalar(Rational(1, 2)), Rational(1, 2));
  const auto c = SublevelRatio(leb, Polynomial::Constant(1, Rational(1, 4)), unit,
                               Rational(1), 10);
  EXPECT_LE(c.ratio_lower, 1.0);
  EXPECT_GE(c.ratio_upper, 1.0);
  EXPECT_NEAR(c.ratio_lower, 1.0, 1e-9);
  const auto x = SublevelRatio(leb, Polynomial::Coordinate(1, 0), unit,
                               Rational(1, 4), 12);
  EXPECT_LE(x.ratio_lower, 0.25);
  EXPECT_GE(x.ratio_upper, 0.25);
  EXPECT_LT(x.ratio_upper - x.ratio_lower, 0.01);
  EXPECT_THROW(SublevelRatio(leb, Polynomial::Constant(1, Rational(0)), unit,
                             Rational(1), 4),
               std::invalid_argument);
}

TEST(Epsilon0Test, JustBelowQuarter) {
  const double e = Epsilon0(2.0, 1.0);
  EXPECT_LT(e, 0.25);
  EXPECT_GT(e, 0.25 * (1 - 2e-6));
  EXPECT_LT(2.0 * std::pow(Epsilon0(3.0, 0.5), 0.5), 0.5);
  EXPECT_THROW(Epsilon0(0.0, 1.0), std::invalid_argument);
}

TEST(QuotientBoundTest, Cf13PointsAtDepthTwenty) {
  const CylinderMeasure cf = CylinderMeasure::Preset("cf13");
  for (const Point& x : SampleCenters(cf, 40, 20, 77)) {
    const CfWord w = CfOfRational(x[0]);
    ASSERT_GE(w.size(), 20u);
    const CfWord prefix(w.begin(), w.begin() + 20);
    const Cylinder cyl = CylinderInterval(prefix);
    const Ball ball(x, cyl.length() / Rational(4));
    const auto cert = QuotientBoundCertificate(ball);
    ASSERT_TRUE(cert.has_value());
    EXPECT_LE(*cert, 3);
  }
}

}  // namespace
}  // namespace schmidt
