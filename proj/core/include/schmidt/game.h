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

#ifndef SCHMIDT_GAME_H_
#define SCHMIDT_GAME_H_

// Schmidt's (alpha, beta)-game on R^d and on a compact support set K.
//
// Black opens with U(0); White answers W(0) inside it with radius
// alpha * rho(U(0)); Black answers U(1) inside W(0) with radius
// beta * rho(W(0)); and so on. In the K-variant every center must lie in K.
// All board arithmetic is exact: closed Euclidean balls, containment decided
// on squared norms over the rationals.

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "schmidt/rational.h"

namespace schmidt {

struct Point {
  std::vector<Rational> coords;

  Point() = default;
  explicit Point(std::vector<Rational> c) : coords(std::move(c)) {}
  static Point Scalar(Rational x) { return Point({std::move(x)}); }
  static Point Zero(std::size_t dim) { return Point(std::vector<Rational>(dim)); }

  std::size_t dim() const { return coords.size(); }
  const Rational& operator[](std::size_t i) const { return coords[i]; }
  Rational& operator[](std::size_t i) { return coords[i]; }
  friend bool operator==(const Point&, const Point&) = default;
};

Rational SquaredDistance(const Point& a, const Point& b);

// Closed Euclidean ball with strictly positive radius.
class Ball {
 public:
  Ball(Point center, Rational radius);

  const Point& center() const { return center_; }
  const Rational& radius() const { return radius_; }
  std::size_t dim() const { return center_.dim(); }

  bool Contains(const Point& p) const;
  friend bool operator==(const Ball&, const Ball&) = default;

 private:
  Point center_;
  Rational radius_;
};

// True iff inner is a subset of outer. Throws std::invalid_argument on a
// dimension mismatch.
bool ValidateContainment(const Ball& inner, const Ball& outer);

enum class Membership { kIn, kOut, kUndecided };

// A compact support set K that can be queried exactly.
class SupportOracle {
 public:
  virtual ~SupportOracle() = default;

  virtual std::string Name() const = 0;
  virtual std::size_t dim() const = 0;
  virtual Rational Diameter() const = 0;

  // kIn / kOut are certified. kUndecided means membership was not resolved
  // within `depth` refinement levels.
  virtual Membership Contains(const Point& p, int depth) const = 0;

  // Exact points of K inside `ball`, one or more per depth-`depth` cell that
  // meets the ball. Every returned point satisfies Contains == kIn.
  virtual std::vector<Point> EnumerateInBall(const Ball& ball,
                                             int depth) const = 0;

  // Smallest depth whose cells are no larger than `scale` across.
  virtual int DepthForScale(const Rational& scale) const = 0;
};

struct GameConfig {
  Rational alpha;
  Rational beta;
  std::size_t dim = 1;
  std::shared_ptr<const SupportOracle> support;  // null: all of R^d
  int max_rounds = 1000;
  // Refinement budget handed to SupportOracle::Contains for center checks.
  int membership_depth = 1024;

  // Throws std::invalid_argument unless 0 < alpha, beta < 1 and dim >= 1.
  void Validate() const;
};

enum class Player { kWhite, kBlack };
std::string PlayerName(Player p);

enum class MoveVerdict {
  kLegal,
  kDimensionMismatch,
  kWrongRadius,
  kCenterOffSupport,
  kNotContained,
};
std::string VerdictName(MoveVerdict v);

// Full diagnosis of a proposed move against the previous ball.
MoveVerdict CheckMove(const GameConfig& config, const Ball& previous,
                      const Ball& proposed, Player mover);

inline bool LegalMove(const GameConfig& config, const Ball& previous,
                      const Ball& proposed, Player mover) {
  return CheckMove(config, previous, proposed, mover) == MoveVerdict::kLegal;
}

// Radius the mover must use after `previous`.
Rational RequiredRadius(const GameConfig& config, const Ball& previous,
                        Player mover);

// Alternating record U(0), W(0), U(1), W(1), ... with a legality flag per
// ball. A forfeited game ends with the offending ball flagged false.
struct Transcript {
  GameConfig config;
  std::vector<Ball> balls;
  std::vector<bool> legality;
  std::optional<Player> forfeited_by;
  std::string diagnostic;

  bool empty() const { return balls.empty(); }
  bool legal() const;
  // Player whose turn it is after the last recorded ball.
  Player ToMove() const;
  // U(k) and W(k) accessors; k counts rounds.
  const Ball& BlackBall(std::size_t k) const { return balls.at(2 * k); }
  const Ball& WhiteBall(std::size_t k) const { return balls.at(2 * k + 1); }
  std::size_t CompletedRounds() const {
    return balls.empty() ? 0 : (balls.size() - 1) / 2;
  }
};

class Strategy {
 public:
  virtual ~Strategy() = default;
  virtual std::string Name() const = 0;
  virtual nlohmann::json Params() const { return nlohmann::json::object(); }
  // Next ball for the player to move in `so_far`; must carry the required
  // radius. Strategies may keep per-game state.
  virtual Ball NextMove(const GameConfig& config, const Transcript& so_far) = 0;
};

// Plays `rounds` rounds from `initial`. Throws std::invalid_argument when the
// configuration or the opening ball violates a precondition (center off the
// support, radius above diam K, rounds above max_rounds). An illegal move
// ends the game: it is recorded, flagged, and the mover forfeits.
Transcript Play(const GameConfig& config, Strategy& white, Strategy& black,
                const Ball& initial, int rounds);

// Last ball of a legal transcript; it contains the limit point of any
// continuation. Throws std::invalid_argument on an empty or illegal
// transcript.
Ball LimitEnclosure(const Transcript& t);

// "p/q" strings throughout so that nothing is lost in a round trip.
nlohmann::json ToJson(const Ball& ball);
nlohmann::json ToJson(const GameConfig& config);
nlohmann::json ToJson(const Transcript& t);
Ball BallFromJson(const nlohmann::json& j);
// The support, if named, is resolved by the caller; only the name is kept.
Transcript TranscriptFromJson(const nlohmann::json& j,
                              std::shared_ptr<const SupportOracle> support);

}  // namespace schmidt

#endif  // SCHMIDT_GAME_H_
