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

#include "schmidt/strategies.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <memory>
#include <stdexcept>
#include <vector>

#include "oracles.h"
#include "schmidt/game.h"
#include "schmidt/support.h"

namespace schmidt {
namespace {

Rational ThreePow(long e) { return Pow(Rational(3), e); }

Transcript Start(const GameConfig& config, std::vector<Ball> balls) {
  Transcript t;
  t.config = config;
  t.legality.assign(balls.size(), true);
  t.balls = std::move(balls);
  return t;
}

GameConfig Real(Rational alpha, Rational beta) {
  GameConfig c;
  c.alpha = std::move(alpha);
  c.beta = std::move(beta);
  return c;
}

TEST(WindimTest, RatiosAndRadii) {
  for (int n = 1; n <= 5; ++n) {
    const WindimParams p{n};
    EXPECT_EQ(p.alpha(), Rational(1, 3) + ThreePow(-n));
    EXPECT_EQ(p.beta(), Rational(1) / (ThreePow(n - 1) + Rational(1)));
    EXPECT_EQ(p.alpha() * p.beta(), ThreePow(-n));
    for (int k = 0; k < 6; ++k) {
      EXPECT_EQ(p.BlackRadius(k), ThreePow(-n * k));
      EXPECT_EQ(p.WhiteRadius(k), p.alpha() * ThreePow(-n * k));
      EXPECT_EQ(p.RightmostWhiteCenter(k), ThreePow(-(n * k + 1)));
    }
  }
  // N = 1: rho(W(k)) = 2 * 3^-(k+1).
  const WindimParams one{1};
  for (int k = 0; k < 6; ++k) {
    EXPECT_EQ(one.WhiteRadius(k), Rational(2) * ThreePow(-(k + 1)));
  }
}

TEST(WindimTest, RightmostCenterSitsBelowAGap) {
  for (int n = 1; n <= 3; ++n) {
    const WindimParams p{n};
    for (int k = 0; k < 3; ++k) {
      const Rational slack = p.BlackRadius(k) - p.WhiteRadius(k);
      const Rational x = ThreePow(-(n * k + 1));
      // (x, 2x) is a removed interval of the Cantor set.
      EXPECT_LE(x, slack);
      EXPECT_LT(slack, Rational(2) * x);
      const GameConfig config = p.Config();
      const Ball u(Point::Scalar(Rational(0)), p.BlackRadius(k));
      const auto centers =
          LegalCenters(config, u, p.WhiteRadius(k), 6, 0);
      ASSERT_FALSE(centers.empty());
      EXPECT_EQ(centers.back()[0], x) << "N=" << n << " k=" << k;
      // The Cantor set starts at 0.
      EXPECT_EQ(centers.front()[0], Rational(0));
    }
  }
}

TEST(WindimTest, ZeroAnswersEveryLegalWhiteMove) {
  for (int n = 1; n <= 3; ++n) {
    const WindimParams p{n};
    const GameConfig config = p.Config();
    for (int k = 0; k < 3; ++k) {
      const Ball u(Point::Scalar(Rational(0)), p.BlackRadius(k));
      for (const Point& w_center :
           LegalCenters(config, u, p.WhiteRadius(k), 5, 0)) {
        const Ball w(w_center, p.WhiteRadius(k));
        ASSERT_TRUE(LegalMove(config, u, w, Player::kWhite));
        const Ball next(Point::Scalar(Rational(0)), p.BlackRadius(k + 1));
        EXPECT_TRUE(LegalMove(config, w, next, Player::kBlack))
            << "N=" << n << " k=" << k << " w=" << w_center[0];
      }
    }
  }
}

TEST(WindimTest, RandomWhiteGamesStayLegal) {
  for (int n = 1; n <= 3; ++n) {
    const WindimParams p{n};
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      RandomLegalStrategy white(seed);
      BlackCantorZero black(p);
      const Transcript t = Play(p.Config(), white, black, p.Opening(), 15);
      ASSERT_TRUE(t.legal()) << t.diagnostic;
      for (std::size_t k = 0; k <= t.CompletedRounds(); ++k) {
        EXPECT_TRUE(t.BlackBall(k).center()[0].is_zero());
        EXPECT_EQ(t.BlackBall(k).radius(), p.BlackRadius(static_cast<int>(k)));
      }
      for (std::size_t k = 0; k < t.CompletedRounds(); ++k) {
        EXPECT_EQ(t.WhiteBall(k).radius(), p.WhiteRadius(static_cast<int>(k)));
        EXPECT_LE(t.WhiteBall(k).center()[0].abs(),
                  p.RightmostWhiteCenter(static_cast<int>(k)));
      }
      EXPECT_TRUE(LimitEnclosure(t).Contains(Point::Scalar(Rational(0))));
    }
  }
}

TEST(RandomLegalTest, SameSeedSameGame) {
  const WindimParams p{2};
  RandomLegalStrategy w1(42), w2(42);
  BlackCantorZero b1(p), b2(p);
  const Transcript t1 = Play(p.Config(), w1, b1, p.Opening(), 10);
  const Transcript t2 = Play(p.Config(), w2, b2, p.Opening(), 10);
  EXPECT_EQ(ToJson(t1).dump(), ToJson(t2).dump());
}

TEST(LegalCentersTest, GridWithoutSupport) {
  const GameConfig config = Real(Rational(1, 2), Rational(1, 2));
  const Ball prev(Point::Scalar(Rational(0)), Rational(1));
  const auto centers = LegalCenters(config, prev, Rational(1, 2), 0, 2);
  ASSERT_EQ(centers.size(), 9u);
  EXPECT_EQ(centers.front()[0], Rational(-1, 2));
  EXPECT_EQ(centers.back()[0], Rational(1, 2));
  EXPECT_TRUE(std::is_sorted(centers.begin(), centers.end(),
                             [](const Point& a, const Point& b) {
                               return a[0] < b[0];
                             }));
}

TEST(BlackTargetTest, StepsTowardTarget) {
  const GameConfig config = Real(Rational(1, 2), Rational(1, 2));
  // U = B(1, 2), W = B(1, 1); Black has radius 1/2 and slack 1/2.
  const Transcript t =
      Start(config, {Ball(Point::Scalar(Rational(1)), Rational(2)),
                     Ball(Point::Scalar(Rational(1)), Rational(1))});
  BlackTarget black(Point::Scalar(Rational(0)));
  const Ball move = black.NextMove(config, t);
  EXPECT_EQ(move.center()[0], Rational(1, 2));
  EXPECT_EQ(move.radius(), Rational(1, 2));

  BlackTarget near(Point::Scalar(Rational(3, 4)));
  EXPECT_EQ(near.NextMove(config, t).center()[0], Rational(3, 4));
}

TEST(BlackTargetTest, PlanarStepIsLegal) {
  GameConfig config = Real(Rational(1, 2), Rational(1, 3));
  config.dim = 2;
  const Transcript t = Start(
      config, {Ball(Point({Rational(0), Rational(0)}), Rational(4)),
               Ball(Point({Rational(0), Rational(0)}), Rational(2))});
  BlackTarget black(Point({Rational(10), Rational(5)}));
  const Ball move = black.NextMove(config, t);
  EXPECT_TRUE(LegalMove(config, t.balls.back(), move, Player::kBlack));
  EXPECT_GT(move.center()[0], Rational(0));
  EXPECT_GT(move.center()[1], Rational(0));
  // Moves nearly the full slack 4/3.
  const double d = std::sqrt(
      SquaredDistance(move.center(), Point({Rational(0), Rational(0)}))
          .ToDouble());
  EXPECT_NEAR(d, 4.0 / 3.0, 1e-6);
}

// Least denominator, then least absolute value, by enumeration.
Rational BruteSimplest(const Rational& lo, const Rational& hi) {
  for (long q = 1;; ++q) {
    const BigInt a = (lo * Rational(q)).ceil();
    const BigInt b = (hi * Rational(q)).floor();
    if (a > b) continue;
    BigInt best = a;
    for (BigInt p = a; p <= b; ++p) {
      if (abs(p) < abs(best)) best = p;
    }
    return Rational(best, BigInt(q));
  }
}

TEST(ChaserTest, PlaysSimplestRational) {
  const GameConfig config = Real(Rational(1, 2), Rational(1, 3));
  const std::vector<std::pair<Rational, Rational>> whites = {
      {Rational(1, 3), Rational(1, 10)}, {Rational(5, 7), Rational(1, 50)},
      {Rational(-2, 9), Rational(1, 7)}, {Rational(101, 250), Rational(1, 999)}};
  for (const auto& [c, r] : whites) {
    const Transcript t = Start(
        config, {Ball(Point::Scalar(c), Rational(2) * r),
                 Ball(Point::Scalar(c), r)});
    BlackRationalChaser chaser;
    const Ball move = chaser.NextMove(config, t);
    const Rational slack = r - r / Rational(3);
    EXPECT_EQ(move.center()[0], BruteSimplest(c - slack, c + slack));
    EXPECT_TRUE(LegalMove(config, t.balls.back(), move, Player::kBlack));
  }
}

TEST(RationalAvoidTest, CapRule) {
  const CapRule rule = SqrtCapRule(Rational(1, 8));
  EXPECT_EQ(rule(Rational(1, 8)), 1);
  EXPECT_EQ(rule(Rational(1)), 1);
  EXPECT_EQ(rule(Rational(1, 32)), 2);
  EXPECT_EQ(rule(Rational(1, 800)), 10);
  EXPECT_EQ(rule(Rational(1, 799)), 9);
  EXPECT_THROW(SqrtCapRule(Rational(0)), std::invalid_argument);
}

TEST(RationalAvoidTest, HalfExample) {
  const GameConfig config = Real(Rational(1, 2), Rational(1, 2));
  const Ball u(Point::Scalar(Rational(1, 2)), Rational(1, 8));
  WhiteRationalAvoid white(Rational(1, 8),
                           [](const Rational&) { return BigInt(2); });
  const Ball w = white.NextMove(config, Start(config, {u}));
  EXPECT_EQ(w.radius(), Rational(1, 16));
  EXPECT_EQ(w.center()[0], Rational(7, 16));
  EXPECT_GE((w.center()[0] - Rational(1, 2)).abs(), Rational(1, 16));

  // Every ball of radius 1/16 inside U contains 1/2, so the certificate is 0
  // and the center rule decides: maximize min q^2 |x - p/q| over q <= 2 on
  // the candidate grid, smallest on ties.
  ASSERT_EQ(white.certificates().size(), 1u);
  EXPECT_TRUE(white.certificates()[0].bound.is_zero());
  Rational best_x, best_s;
  for (long k = 0; k <= 32; ++k) {
    const Rational x = Rational(7, 16) + Rational(1, 8) * Rational(k, 32);
    const Rational s = oracle::BruteWeightedMin(x, x, 2);
    if (k == 0 || s > best_s) {
      best_s = s;
      best_x = x;
    }
  }
  EXPECT_EQ(best_x, w.center()[0]);
}

// Certificates against brute force, games against three Black players.
void CheckAllCertificates(const WhiteRationalAvoid& white,
                          const Transcript& t) {
  ASSERT_FALSE(white.certificates().empty());
  for (const AvoidCertificate& cert : white.certificates()) {
    const Ball& w = t.WhiteBall(cert.round);
    EXPECT_EQ(w, cert.ball);
    const auto check = oracle::CheckCertificate(
        w.center()[0], w.radius(), cert.cap, cert.bound);
    EXPECT_TRUE(check.conclusive) << "round " << cert.round;
    EXPECT_TRUE(check.sound) << "round " << cert.round << " bound "
                             << cert.bound << " observed " << check.observed;
    if (cert.cap <= 2000) {
      // The candidate set is exhaustive here, so the bound is exact.
      EXPECT_EQ(check.observed, cert.bound) << "round " << cert.round;
    }
  }
}

TEST(RationalAvoidTest, CertificatesAreSound) {
  const Ball u0(Point::Scalar(Rational(1, 2)), Rational(1, 2));
  for (const Rational& beta : {Rational(1, 3), Rational(1, 2), Rational(2, 3)}) {
    const GameConfig config = Real(Rational(1, 2), beta);
    std::vector<std::unique_ptr<Strategy>> blacks;
    blacks.push_back(std::make_unique<BlackTarget>(
        Point::Scalar(Rational(1, 3))));
    blacks.push_back(std::make_unique<BlackRationalChaser>());
    blacks.push_back(std::make_unique<RandomLegalStrategy>(7));
    for (auto& black : blacks) {
      WhiteRationalAvoid white;
      const Transcript t = Play(config, white, *black, u0, 30);
      ASSERT_TRUE(t.legal()) << black->Name() << ": " << t.diagnostic;
      CheckAllCertificates(white, t);
    }
  }
}

TEST(RationalAvoidTest, LazyBlackLimitAvoidsSmallDenominators) {
  const GameConfig config = Real(Rational(1, 2), Rational(1, 2));
  const Ball u0(Point::Scalar(Rational(1, 2)), Rational(1, 2));
  WhiteRationalAvoid white;
  LazyStrategy black;
  const Transcript t = Play(config, white, black, u0, 60);
  ASSERT_TRUE(t.legal());
  const Ball last = LimitEnclosure(t);
  const Rational lo = last.center()[0] - last.radius();
  const Rational hi = last.center()[0] + last.radius();
  EXPECT_GT(oracle::MinQDistOverInterval(lo, hi, 100), Rational(0));
  CheckAllCertificates(white, t);
}

TEST(RationalAvoidTest, WorksOnCantorSupport) {
  GameConfig config = Real(Rational(1, 2), Rational(1, 2));
  config.support = CantorSupport();
  const Ball u0(Point::Scalar(Rational(0)), Rational(1));
  WhiteRationalAvoid white;
  RandomLegalStrategy black(3);
  const Transcript t = Play(config, white, black, u0, 12);
  ASSERT_TRUE(t.legal()) << t.diagnostic;
  CheckAllCertificates(white, t);
}

TEST(RationalAvoidTest, RejectsHigherDimension) {
  GameConfig config = Real(Rational(1, 2), Rational(1, 2));
  config.dim = 2;
  WhiteRationalAvoid white;
  const Ball u(Point({Rational(0), Rational(0)}), Rational(1));
  EXPECT_THROW(white.NextMove(config, Start(config, {u})),
               std::invalid_argument);
}

TEST(FindGoodPointTest, Examples) {
  const auto cantor = CantorSupport();
  const Ball omega(Point::Scalar(Rational(0)), Rational(1, 3));
  const auto identity = [](const Point& x) { return x[0].ToDouble(); };
  const Point top = FindGoodPoint(*cantor, identity, omega, 5, 1.0);
  EXPECT_LE(top[0], Rational(1, 3));
  EXPECT_GE(top[0], Rational(1, 3) - ThreePow(-5));
  for (const Point& p : cantor->EnumerateInBall(omega, 5)) {
    EXPECT_LE(p[0], top[0]);
  }
  // Constant function, theta = 1: the first point in order. The Cantor set
  // meets omega in [0, 1/3].
  const Point first =
      FindGoodPoint(*cantor, [](const Point&) { return 1.0; }, omega, 5, 1.0);
  EXPECT_GE(first[0], Rational(0));
  EXPECT_LE(first[0], ThreePow(-5));
  // theta = 1/2: the first enumerated point with x >= top / 2.
  const Point half = FindGoodPoint(*cantor, identity, omega, 5, 0.5);
  EXPECT_GE(half[0].ToDouble(), 0.5 * top[0].ToDouble());
  for (const Point& p : cantor->EnumerateInBall(omega, 5)) {
    if (p[0] < half[0]) {
      EXPECT_LT(p[0].ToDouble(), 0.5 * top[0].ToDouble());
    }
  }
  EXPECT_THROW(FindGoodPoint(*cantor, identity, omega, 5, 0.0),
               std::invalid_argument);
  EXPECT_THROW(FindGoodPoint(*cantor, identity,
                             Ball(Point::Scalar(Rational(1, 2)),
                                  Rational(1, 100)),
                             5, 1.0),
               std::runtime_error);
}

GradientPushParams PushParams() {
  GradientPushParams p;
  p.M = 1;
  p.N = 1;
  p.psi = 1.0;
  p.epsilon0 = 0.5;
  p.alpha1 = 1.0 / 2048.0;
  p.C1 = 1.0;
  p.C2 = 1.0;
  p.C3_min = 1.0;
  p.C4 = 1.0;
  return p;
}

GameConfig PushConfig() { return Real(Rational(1, 2048), Rational(1, 2)); }

TEST(GradientPushTest, MissingConstantsThrow) {
  GradientPushParams p = PushParams();
  p.C2.reset();
  EXPECT_THROW(p.Validate(), std::invalid_argument);
  EXPECT_THROW(WhiteGradientPush(p, {{1.0, 0.0}}), std::invalid_argument);
  GradientPushParams big = PushParams();
  big.alpha1 = 0.01;  // sqrt = 0.1 > 1/32
  EXPECT_THROW(big.Validate(), std::invalid_argument);
  EXPECT_NO_THROW(PushParams().Validate());
}

TEST(GradientPushTest, ConstantDeterminantIsTrivial) {
  // Y_1 = e_2 gives B_1 . Y_1 = 1 for every matrix.
  WhiteGradientPush white(PushParams(), {{0.0, 1.0}});
  LazyStrategy black;
  const Ball u0(Point::Scalar(Rational(0)), Rational(1));
  const Transcript t = Play(PushConfig(), white, black, u0, 4);
  ASSERT_TRUE(t.legal());
  ASSERT_EQ(white.records().size(), 1u);
  EXPECT_EQ(white.records()[0].branch, "trivial");
  EXPECT_DOUBLE_EQ(white.records()[0].min_minor, 1.0);
  for (std::size_t k = 0; k < t.CompletedRounds(); ++k) {
    EXPECT_TRUE(t.WhiteBall(k).center()[0].is_zero());
  }
}

TEST(GradientPushTest, PushesAlongGradient) {
  // Y_1 = e_1: D_1(gamma) = gamma, gradient 1.
  for (const Rational& c0 : {Rational(0), Rational(-1, 10'000'000)}) {
    WhiteGradientPush white(PushParams(), {{1.0, 0.0}});
    LazyStrategy black;
    const Ball u0(Point::Scalar(c0), Rational(1));
    const Transcript t = Play(PushConfig(), white, black, u0, 4);
    ASSERT_TRUE(t.legal()) << t.diagnostic;
    ASSERT_EQ(white.records().size(), 1u);
    const PushRecord& rec = white.records()[0];
    EXPECT_EQ(rec.branch, "push");
    // Waits at k = 0 (rho = 1), pushes at k = 1 (rho = 1/4096).
    EXPECT_EQ(rec.round, 1u);
    EXPECT_DOUBLE_EQ(rec.K, 1.0 / 4096.0);
    EXPECT_NEAR(rec.grad_norm, 1.0, 1e-12);
    EXPECT_TRUE(rec.exceeds);
    const Ball& u1 = t.BlackBall(1);
    const Ball& w1 = t.WhiteBall(1);
    const Rational shift = w1.center()[0] - u1.center()[0];
    const Rational slack = u1.radius() - w1.radius();
    EXPECT_LE(shift.abs(), slack);
    EXPECT_GT(shift.abs(), slack * Rational(99, 100));
    if (c0.sign() < 0) {
      EXPECT_LT(shift, Rational(0));
      EXPECT_LT(rec.d_push, 0.0);
    } else {
      EXPECT_GT(shift, Rational(0));
      EXPECT_GT(rec.d_push, 0.0);
    }
    EXPECT_GT(std::abs(rec.d_push), rec.bound);
    EXPECT_NEAR(rec.bound, 15.0 / 32.0 / 4096.0, 1e-15);
    EXPECT_EQ(white.stage(), 2);
  }
}

TEST(GradientPushTest, RefinesOnSupport) {
  GameConfig config = PushConfig();
  config.support = CantorSupport();
  WhiteGradientPush white(PushParams(), {{1.0, 0.0}});
  LazyStrategy black;
  const Ball u0(Point::Scalar(Rational(0)), Rational(1));
  const Transcript t = Play(config, white, black, u0, 3);
  ASSERT_TRUE(t.legal()) << t.diagnostic;
  ASSERT_EQ(white.records().size(), 1u);
  const Ball& u1 = t.BlackBall(1);
  const Ball& w1 = t.WhiteBall(1);
  const Ball omega(u1.center(), u1.radius() - w1.radius());
  const int depth = CantorSupport()->DepthForScale(w1.radius()) + 4;
  Rational best = omega.center()[0];
  for (const Point& p : CantorSupport()->EnumerateInBall(omega, depth)) {
    best = std::max(best, p[0]);
  }
  EXPECT_EQ(w1.center()[0], best);
}

TEST(GradientPushTest, RejectsMismatchedConfig) {
  WhiteGradientPush white(PushParams(), {{1.0, 0.0}});
  LazyStrategy black;
  const Ball u0(Point::Scalar(Rational(0)), Rational(1));
  EXPECT_THROW(Play(Real(Rational(1, 2), Rational(1, 2)), white, black, u0, 2),
               std::invalid_argument);
}

TEST(MakeStrategyTest, Names) {
  for (const char* name : {"lazy", "random", "chaser"}) {
    EXPECT_EQ(MakeStrategy(name, nullptr)->Name(), name);
  }
  EXPECT_EQ(MakeStrategy("target", {{"target", "1/3"}})->Name(), "target");
  EXPECT_EQ(MakeStrategy("rational_avoid", {{"c_avoid", "1/16"}})->Name(),
            "rational_avoid");
  EXPECT_THROW(MakeStrategy("nope", nullptr), std::invalid_argument);
  EXPECT_THROW(MakeStrategy("target", nullptr), std::invalid_argument);
}

}  // namespace
}  // namespace schmidt
