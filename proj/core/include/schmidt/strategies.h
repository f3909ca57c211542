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

#ifndef SCHMIDT_STRATEGIES_H_
#define SCHMIDT_STRATEGIES_H_

// Strategies for both players: Black's zero-centered Cantor strategy, lazy
// and randomized baselines, a White strategy that keeps the outcome away
// from rationals of bounded denominator, and a White strategy that pushes a
// determinant away from zero along its gradient.

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "schmidt/game.h"
#include "schmidt/linear_forms.h"
#include "schmidt/rational.h"

namespace schmidt {

// alpha = 1/3 + 3^-N, beta = 1 / (3^(N-1) + 1), so alpha beta = 3^-N.
struct WindimParams {
  int N = 1;

  Rational alpha() const;
  Rational beta() const;
  // Game on the middle-thirds Cantor set with the two ratios above.
  GameConfig Config() const;
  // U(0) = B(0, 1).
  static Ball Opening();
  // rho(U(k)) = 3^(-N k), rho(W(k)) = 3^(-N k - 1) + 3^(-N (k + 1)).
  Rational BlackRadius(int k) const;
  Rational WhiteRadius(int k) const;
  // 3^-(N k + 1).
  Rational RightmostWhiteCenter(int k) const;
};

// Always centers at 0.
class BlackCantorZero : public Strategy {
 public:
  explicit BlackCantorZero(WindimParams params) : params_(params) {}
  std::string Name() const override { return "cantor_zero"; }
  nlohmann::json Params() const override { return {{"N", params_.N}}; }
  Ball NextMove(const GameConfig& config, const Transcript& so_far) override;

 private:
  WindimParams params_;
};

// Keeps the previous center.
class LazyStrategy : public Strategy {
 public:
  std::string Name() const override { return "lazy"; }
  Ball NextMove(const GameConfig& config, const Transcript& so_far) override;
};

// Legal centers for the next move: support points at the scale of the new
// radius refined by `extra_depth` levels, or a grid of 2^grid_bits + 1 steps
// per axis without a support. Sorted lexicographically.
std::vector<Point> LegalCenters(const GameConfig& config, const Ball& previous,
                                const Rational& radius, int extra_depth,
                                int grid_bits);

// Uniform choice among LegalCenters.
class RandomLegalStrategy : public Strategy {
 public:
  explicit RandomLegalStrategy(std::uint64_t seed, int extra_depth = 4,
                               int grid_bits = 4)
      : seed_(seed), rng_(seed), extra_depth_(extra_depth), grid_bits_(grid_bits) {}
  std::string Name() const override { return "random"; }
  nlohmann::json Params() const override;
  Ball NextMove(const GameConfig& config, const Transcript& so_far) override;

 private:
  std::uint64_t seed_;
  std::mt19937_64 rng_;
  int extra_depth_;
  int grid_bits_;
};

// Legal center nearest the target; ties go to the smaller coordinates.
class BlackTarget : public Strategy {
 public:
  explicit BlackTarget(Point target) : target_(std::move(target)) {}
  std::string Name() const override { return "target"; }
  nlohmann::json Params() const override;
  Ball NextMove(const GameConfig& config, const Transcript& so_far) override;

 private:
  Point target_;
};

// One-dimensional: centers on the fraction of least denominator among the
// legal centers.
class BlackRationalChaser : public Strategy {
 public:
  std::string Name() const override { return "chaser"; }
  Ball NextMove(const GameConfig& config, const Transcript& so_far) override;
};

// Denominator cap as a function of Black's radius.
using CapRule = std::function<BigInt(const Rational& rho)>;

// max(1, floor(sqrt(c / rho))). With c <= 1/8 at most one fraction of
// denominator <= cap lies in Black's ball.
CapRule SqrtCapRule(const Rational& c);

struct AvoidCertificate {
  std::size_t round = 0;
  BigInt cap;
  // min over p/q, q <= cap, of q^2 dist(ball, p/q); equivalently a lower
  // bound on q <qx> for every x in the ball and every q <= cap.
  Rational bound;
  Ball ball;
};

// One-dimensional White strategy. Among the candidate centers it picks the
// one whose ball maximizes the certificate above, then the one whose center
// is farthest (weighted by q^2) from the fractions, then the smallest.
class WhiteRationalAvoid : public Strategy {
 public:
  explicit WhiteRationalAvoid(Rational c_avoid = Rational(1, 8),
                              CapRule rule = nullptr, int extra_depth = 4,
                              int grid_bits = 4);
  std::string Name() const override { return "rational_avoid"; }
  nlohmann::json Params() const override;
  Ball NextMove(const GameConfig& config, const Transcript& so_far) override;

  const std::vector<AvoidCertificate>& certificates() const { return certs_; }

 private:
  Rational c_avoid_;
  CapRule rule_;
  int extra_depth_;
  int grid_bits_;
  std::vector<AvoidCertificate> certs_;
};

// Support points of omega at `depth`; returns the first, in lexicographic
// order, with |f| >= theta * max |f|. Throws std::runtime_error when omega
// holds no enumerated point.
Point FindGoodPoint(const SupportOracle& support,
                    const std::function<double(const Point&)>& f,
                    const Ball& omega, int depth, double theta);

struct GradientPushParams {
  int M = 1;
  int N = 1;
  std::optional<double> psi;
  std::optional<double> epsilon0;
  std::optional<double> alpha1;
  std::optional<double> C1;
  std::optional<double> C2;
  std::optional<double> C3_min;
  std::optional<double> C4;
  // mu_1..mu_N; when empty, mu_nu = sqrt(alpha1) K_{nu-1} with K_{nu-1} the
  // realized rho(U(j_nu)) / rho_0.
  std::vector<double> mu_schedule;
  int grid_depth = 2;
  int support_extra_depth = 4;
  double theta = 1.0;

  // Throws std::invalid_argument when a constant is missing or sqrt(alpha1)
  // violates its smallness bound.
  TheoremConstants Validate() const;
};

struct PushRecord {
  std::size_t round = 0;
  int nu = 0;
  std::string branch;  // trivial, push, degenerate
  double rho0 = 0.0;
  double K = 0.0;           // rho(U(j_nu)) / rho_0
  double mu = 0.0;
  double min_minor = 0.0;   // sampled min |M_nu| on U(j_nu)
  double sup_prev = 0.0;    // sampled M_{nu-1}(U(j_nu))
  double grad_norm = 0.0;   // |D'|
  double d_center = 0.0;    // D_nu at the center of U(j_nu)
  double d_push = 0.0;      // D_nu at the chosen center
  double bound = 0.0;       // (15/32) C4 K rho_0 sup_prev
  bool exceeds = false;     // |d_push| > bound
};

// White strategy on matrix space R^H following the induction on nu: wait for
// U(i_{nu-1}), then for U(j_nu); if |M_nu| is already large on U(j_nu) play
// lazily, otherwise push the center along +-grad D_nu by (1 - alpha1) rho.
// On a support the pushed point is refined by FindGoodPoint on
// B(center, (1 - alpha1) rho).
class WhiteGradientPush : public Strategy {
 public:
  WhiteGradientPush(GradientPushParams params,
                    std::vector<std::vector<double>> ys);
  std::string Name() const override { return "gradient_push"; }
  nlohmann::json Params() const override;
  Ball NextMove(const GameConfig& config, const Transcript& so_far) override;

  const std::vector<PushRecord>& records() const { return records_; }
  int stage() const { return nu_; }

 private:
  enum class Phase { kWaitI, kWaitJ, kDone };

  Ball Lazy(const GameConfig& config, const Ball& black) const;

  GradientPushParams params_;
  TheoremConstants constants_;
  std::vector<std::vector<double>> ys_;
  Phase phase_ = Phase::kWaitI;
  int nu_ = 1;
  double rho0_ = 0.0;
  double mu_prev_ = 0.0;
  double rho_i_prev_ = 0.0;
  std::size_t i_prev_ = 0;
  std::vector<PushRecord> records_;
};

// Strategies by name: lazy, random, cantor_zero, target, chaser,
// rational_avoid, gradient_push. Throws std::invalid_argument on unknown
// names or bad parameters.
std::unique_ptr<Strategy> MakeStrategy(const std::string& name,
                                       const nlohmann::json& params);

}  // namespace schmidt

#endif  // SCHMIDT_STRATEGIES_H_
