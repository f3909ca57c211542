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

#include "schmidt/game.h"

#include <sstream>
#include <stdexcept>

namespace schmidt {

Rational SquaredDistance(const Point& a, const Point& b) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("dimension mismatch");
  }
  Rational sum;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const Rational d = a[i] - b[i];
    sum += d * d;
  }
  return sum;
}

Ball::Ball(Point center, Rational radius)
    : center_(std::move(center)), radius_(std::move(radius)) {
  if (radius_.sign() <= 0) {
    throw std::invalid_argument("ball radius must be positive, got " +
                                radius_.ToString());
  }
  if (center_.dim() == 0) throw std::invalid_argument("zero-dimensional ball");
}

bool Ball::Contains(const Point& p) const {
  return SquaredDistance(center_, p) <= radius_ * radius_;
}

bool ValidateContainment(const Ball& inner, const Ball& outer) {
  if (inner.dim() != outer.dim()) {
    throw std::invalid_argument("dimension mismatch in containment test");
  }
  if (inner.radius() > outer.radius()) return false;
  const Rational slack = outer.radius() - inner.radius();
  return SquaredDistance(inner.center(), outer.center()) <= slack * slack;
}

void GameConfig::Validate() const {
  const Rational zero, one(1);
  if (!(alpha > zero && alpha < one)) {
    throw std::invalid_argument("alpha must lie in (0,1), got " +
                                alpha.ToString());
  }
  if (!(beta > zero && beta < one)) {
    throw std::invalid_argument("beta must lie in (0,1), got " +
                                beta.ToString());
  }
  if (dim == 0) throw std::invalid_argument("dimension must be positive");
  if (support && support->dim() != dim) {
    throw std::invalid_argument("support dimension differs from game dimension");
  }
  if (max_rounds <= 0) throw std::invalid_argument("max_rounds must be positive");
}

std::string PlayerName(Player p) {
  return p == Player::kWhite ? "white" : "black";
}

std::string VerdictName(MoveVerdict v) {
  switch (v) {
    case MoveVerdict::kLegal:
      return "legal";
    case MoveVerdict::kDimensionMismatch:
      return "dimension mismatch";
    case MoveVerdict::kWrongRadius:
      return "wrong radius";
    case MoveVerdict::kCenterOffSupport:
      return "center outside support";
    case MoveVerdict::kNotContained:
      return "containment violated";
  }
  return "unknown";
}

Rational RequiredRadius(const GameConfig& config, const Ball& previous,
                        Player mover) {
  return previous.radius() *
         (mover == Player::kWhite ? config.alpha : config.beta);
}

MoveVerdict CheckMove(const GameConfig& config, const Ball& previous,
                      const Ball& proposed, Player mover) {
  if (proposed.dim() != previous.dim() || proposed.dim() != config.dim) {
    return MoveVerdict::kDimensionMismatch;
  }
  if (proposed.radius() != RequiredRadius(config, previous, mover)) {
    return MoveVerdict::kWrongRadius;
  }
  if (config.support &&
      config.support->Contains(proposed.center(), config.membership_depth) !=
          Membership::kIn) {
    return MoveVerdict::kCenterOffSupport;
  }
  if (!ValidateContainment(proposed, previous)) {
    return MoveVerdict::kNotContained;
  }
  return MoveVerdict::kLegal;
}

bool Transcript::legal() const {
  if (forfeited_by) return false;
  for (bool ok : legality) {
    if (!ok) return false;
  }
  return true;
}

Player Transcript::ToMove() const {
  return balls.size() % 2 == 1 ? Player::kWhite : Player::kBlack;
}

Transcript Play(const GameConfig& config, Strategy& white, Strategy& black,
                const Ball& initial, int rounds) {
  config.Validate();
  if (rounds < 0 || rounds > config.max_rounds) {
    throw std::invalid_argument("rounds must lie in [0, max_rounds]");
  }
  if (initial.dim() != config.dim) {
    throw std::invalid_argument("opening ball has the wrong dimension");
  }
  if (config.support) {
    if (config.support->Contains(initial.center(), config.membership_depth) !=
        Membership::kIn) {
      throw std::invalid_argument("opening ball is not centered on the support");
    }
    if (initial.radius() > config.support->Diameter()) {
      throw std::invalid_argument(
          "opening radius exceeds the diameter of the support");
    }
  }

  Transcript t;
  t.config = config;
  t.balls.push_back(initial);
  t.legality.push_back(true);

  for (int k = 0; k < rounds; ++k) {
    for (Player mover : {Player::kWhite, Player::kBlack}) {
      Strategy& s = mover == Player::kWhite ? white : black;
      Ball proposed = s.NextMove(config, t);
      const MoveVerdict verdict =
          CheckMove(config, t.balls.back(), proposed, mover);
      t.balls.push_back(std::move(proposed));
      t.legality.push_back(verdict == MoveVerdict::kLegal);
      if (verdict != MoveVerdict::kLegal) {
        t.forfeited_by = mover;
        std::ostringstream msg;
        msg << PlayerName(mover) << " (" << s.Name() << ") forfeits in round "
            << k << ": " << VerdictName(verdict);
        t.diagnostic = msg.str();
        return t;
      }
    }
  }
  return t;
}

Ball LimitEnclosure(const Transcript& t) {
  if (t.empty()) throw std::invalid_argument("empty transcript");
  if (!t.legal()) {
    throw std::invalid_argument("transcript contains an illegal move");
  }
  return t.balls.back();
}

nlohmann::json ToJson(const Ball& ball) {
  nlohmann::json center = nlohmann::json::array();
  for (const Rational& c : ball.center().coords) center.push_back(c.ToString());
  return {{"center", center}, {"radius", ball.radius().ToString()}};
}

nlohmann::json ToJson(const GameConfig& config) {
  nlohmann::json j = {
      {"alpha", config.alpha.ToString()},
      {"beta", config.beta.ToString()},
      {"dim", config.dim},
      {"max_rounds", config.max_rounds},
  };
  j["support"] = config.support ? nlohmann::json(config.support->Name())
                                : nlohmann::json(nullptr);
  return j;
}

nlohmann::json ToJson(const Transcript& t) {
  nlohmann::json balls = nlohmann::json::array();
  for (const Ball& b : t.balls) balls.push_back(ToJson(b));
  nlohmann::json legality = nlohmann::json::array();
  for (bool ok : t.legality) legality.push_back(ok);
  nlohmann::json j = {
      {"config", ToJson(t.config)},
      {"balls", balls},
      {"legality", legality},
  };
  if (t.forfeited_by) {
    j["forfeited_by"] = PlayerName(*t.forfeited_by);
    j["diagnostic"] = t.diagnostic;
  }
  return j;
}

Ball BallFromJson(const nlohmann::json& j) {
  std::vector<Rational> coords;
  for (const auto& c : j.at("center")) {
    coords.push_back(Rational::Parse(c.get<std::string>()));
  }
  return Ball(Point(std::move(coords)),
              Rational::Parse(j.at("radius").get<std::string>()));
}

Transcript TranscriptFromJson(const nlohmann::json& j,
                              std::shared_ptr<const SupportOracle> support) {
  Transcript t;
  const auto& c = j.at("config");
  t.config.alpha = Rational::Parse(c.at("alpha").get<std::string>());
  t.config.beta = Rational::Parse(c.at("beta").get<std::string>());
  t.config.dim = c.at("dim").get<std::size_t>();
  t.config.max_rounds = c.at("max_rounds").get<int>();
  if (!c.at("support").is_null()) {
    if (!support || support->Name() != c.at("support").get<std::string>()) {
      throw std::invalid_argument("transcript names a support that was not supplied");
    }
    t.config.support = std::move(support);
  }
  for (const auto& b : j.at("balls")) t.balls.push_back(BallFromJson(b));
  for (const auto& ok : j.at("legality")) t.legality.push_back(ok.get<bool>());
  if (t.legality.size() != t.balls.size()) {
    throw std::invalid_argument("legality flags do not match the ball list");
  }
  if (j.contains("forfeited_by")) {
    t.forfeited_by = j.at("forfeited_by").get<std::string>() == "white"
                         ? Player::kWhite
                         : Player::kBlack;
    t.diagnostic = j.value("diagnostic", "");
  }
  return t;
}

}  // namespace schmidt
