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

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

#include "schmidt/continued_fractions.h"
#include "schmidt/support.h"

namespace schmidt {
namespace {

const Ball& LastBall(const Transcript& t) {
  if (t.balls.empty()) throw std::invalid_argument("empty transcript");
  return t.balls.back();
}

Player Mover(const Transcript& t) { return t.ToMove(); }

// Rational offset of length <= len along dir (exactly checked).
std::vector<Rational> ScaledDirection(const std::vector<double>& dir,
                                      const Rational& len) {
  double norm = 0.0;
  for (double v : dir) norm += v * v;
  norm = std::sqrt(norm);
  std::vector<Rational> out(dir.size());
  if (norm == 0.0) return out;
  double shrink = 1.0 - 1e-12;
  for (int attempt = 0; attempt < 64; ++attempt) {
    Rational sq(0);
    for (std::size_t i = 0; i < dir.size(); ++i) {
      out[i] = Rational::FromDouble(dir[i] / norm * shrink);
      sq += out[i] * out[i];
    }
    if (sq <= Rational(1)) break;
    shrink *= 1.0 - 1e-9;
  }
  for (Rational& v : out) v *= len;
  return out;
}

std::vector<Point> SubsampleEvenly(std::vector<Point> pts, std::size_t cap) {
  if (pts.size() <= cap || cap < 2) return pts;
  std::vector<Point> out;
  out.reserve(cap);
  const std::size_t n = pts.size();
  for (std::size_t k = 0; k < cap; ++k) {
    out.push_back(std::move(pts[k * (n - 1) / (cap - 1)]));
  }
  return out;
}

Rational JsonRational(const nlohmann::json& j) {
  if (j.is_string()) return Rational::Parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_number()) return Rational::FromDouble(j.get<double>());
  throw std::invalid_argument("expected a rational: " + j.dump());
}

}  // namespace

Rational WindimParams::alpha() const {
  return Rational(1, 3) + Pow(Rational(3), -N);
}

Rational WindimParams::beta() const {
  return Rational(1) / (Pow(Rational(3), N - 1) + Rational(1));
}

GameConfig WindimParams::Config() const {
  if (N < 1) throw std::invalid_argument("N must be >= 1");
  GameConfig c;
  c.alpha = alpha();
  c.beta = beta();
  c.dim = 1;
  c.support = CantorSupport();
  return c;
}

Ball WindimParams::Opening() { return Ball(Point::Scalar(Rational(0)), Rational(1)); }

Rational WindimParams::BlackRadius(int k) const {
  return Pow(Rational(3), -static_cast<long>(N) * k);
}

Rational WindimParams::WhiteRadius(int k) const {
  return Pow(Rational(3), -static_cast<long>(N) * k - 1) +
         Pow(Rational(3), -static_cast<long>(N) * (k + 1));
}

Rational WindimParams::RightmostWhiteCenter(int k) const {
  return Pow(Rational(3), -(static_cast<long>(N) * k + 1));
}

Ball BlackCantorZero::NextMove(const GameConfig& config,
                               const Transcript& so_far) {
  const Ball& prev = LastBall(so_far);
  return Ball(Point::Zero(config.dim),
              RequiredRadius(config, prev, Player::kBlack));
}

Ball LazyStrategy::NextMove(const GameConfig& config, const Transcript& so_far) {
  const Ball& prev = LastBall(so_far);
  return Ball(prev.center(), RequiredRadius(config, prev, Mover(so_far)));
}

std::vector<Point> LegalCenters(const GameConfig& config, const Ball& previous,
                                const Rational& radius, int extra_depth,
                                int grid_bits) {
  const Rational slack = previous.radius() - radius;
  if (slack.sign() < 0) return {};
  const Ball allowed(previous.center(), slack);
  std::vector<Point> out;
  if (config.support) {
    const int depth = config.support->DepthForScale(radius) + extra_depth;
    out = config.support->EnumerateInBall(allowed, depth);
    if (out.empty() &&
        config.support->Contains(previous.center(), config.membership_depth) ==
            Membership::kIn) {
      out.push_back(previous.center());
    }
  } else {
    const std::size_t d = config.dim;
    int bits = std::max(0, grid_bits);
    // Keep the grid under a few thousand points.
    while (bits > 0 && std::pow(std::pow(2.0, bits + 1) + 1.0, d) > 5000.0) {
      --bits;
    }
    const long side = 1L << bits;
    const Rational step = slack / Rational(side);
    std::vector<long> k(d, -side);
    while (true) {
      Point p = previous.center();
      Rational sq(0);
      for (std::size_t i = 0; i < d; ++i) {
        const Rational off = step * Rational(k[i]);
        p[i] += off;
        sq += off * off;
      }
      if (sq <= slack * slack) out.push_back(std::move(p));
      std::size_t i = 0;
      while (i < d && k[i] == side) k[i++] = -side;
      if (i == d) break;
      ++k[i];
    }
  }
  std::sort(out.begin(), out.end(), [](const Point& a, const Point& b) {
    return a.coords < b.coords;
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

nlohmann::json RandomLegalStrategy::Params() const {
  return {{"seed", seed_}, {"extra_depth", extra_depth_},
          {"grid_bits", grid_bits_}};
}

Ball RandomLegalStrategy::NextMove(const GameConfig& config,
                                   const Transcript& so_far) {
  const Ball& prev = LastBall(so_far);
  const Rational r = RequiredRadius(config, prev, Mover(so_far));
  std::vector<Point> centers =
      LegalCenters(config, prev, r, extra_depth_, grid_bits_);
  if (centers.empty()) throw std::runtime_error("no legal center found");
  const std::size_t pick = rng_() % centers.size();
  return Ball(std::move(centers[pick]), r);
}

nlohmann::json BlackTarget::Params() const {
  nlohmann::json t = nlohmann::json::array();
  for (const Rational& c : target_.coords) t.push_back(c.ToString());
  return {{"target", t}};
}

Ball BlackTarget::NextMove(const GameConfig& config, const Transcript& so_far) {
  const Ball& prev = LastBall(so_far);
  if (target_.dim() != config.dim) {
    throw std::invalid_argument("target dimension mismatch");
  }
  const Rational r = RequiredRadius(config, prev, Mover(so_far));
  const Rational slack = prev.radius() - r;
  if (config.support) {
    std::vector<Point> centers = LegalCenters(config, prev, r, 4, 0);
    if (centers.empty()) throw std::runtime_error("no legal center found");
    std::size_t best = 0;
    Rational best_d = SquaredDistance(centers[0], target_);
    for (std::size_t i = 1; i < centers.size(); ++i) {
      const Rational d = SquaredDistance(centers[i], target_);
      if (d < best_d) {
        best_d = d;
        best = i;
      }
    }
    return Ball(std::move(centers[best]), r);
  }
  const Point& c = prev.center();
  const Rational dist2 = SquaredDistance(c, target_);
  if (dist2 <= slack * slack) return Ball(target_, r);
  if (config.dim == 1) {
    const Rational x = target_[0] > c[0] ? c[0] + slack : c[0] - slack;
    return Ball(Point::Scalar(x), r);
  }
  std::vector<double> dir(config.dim);
  for (std::size_t i = 0; i < config.dim; ++i) {
    dir[i] = (target_[i] - c[i]).ToDouble();
  }
  const std::vector<Rational> off = ScaledDirection(dir, slack);
  Point p = c;
  for (std::size_t i = 0; i < config.dim; ++i) p[i] += off[i];
  return Ball(std::move(p), r);
}

Ball BlackRationalChaser::NextMove(const GameConfig& config,
                                   const Transcript& so_far) {
  if (config.dim != 1) throw std::invalid_argument("chaser is one-dimensional");
  const Ball& prev = LastBall(so_far);
  const Rational r = RequiredRadius(config, prev, Mover(so_far));
  const Rational slack = prev.radius() - r;
  const Rational c = prev.center()[0];
  if (!config.support) {
    return Ball(Point::Scalar(SimplestRational(c - slack, c + slack)), r);
  }
  std::vector<Point> centers = LegalCenters(config, prev, r, 4, 0);
  if (centers.empty()) throw std::runtime_error("no legal center found");
  std::size_t best = 0;
  for (std::size_t i = 1; i < centers.size(); ++i) {
    const Rational& a = centers[i][0];
    const Rational& b = centers[best][0];
    if (a.den() < b.den() || (a.den() == b.den() && a.abs() < b.abs())) best = i;
  }
  return Ball(std::move(centers[best]), r);
}

CapRule SqrtCapRule(const Rational& c) {
  if (c.sign() <= 0) throw std::invalid_argument("c_avoid must be positive");
  return [c](const Rational& rho) -> BigInt {
    if (rho.sign() <= 0) throw std::invalid_argument("radius must be positive");
    const BigInt q = IntegerSqrt((c / rho).floor());
    return q < 1 ? BigInt(1) : q;
  };
}

WhiteRationalAvoid::WhiteRationalAvoid(Rational c_avoid, CapRule rule,
                                       int extra_depth, int grid_bits)
    : c_avoid_(std::move(c_avoid)),
      rule_(rule ? std::move(rule) : SqrtCapRule(c_avoid_)),
      extra_depth_(extra_depth),
      grid_bits_(grid_bits) {}

nlohmann::json WhiteRationalAvoid::Params() const {
  return {{"c_avoid", c_avoid_.ToString()}, {"extra_depth", extra_depth_},
          {"grid_bits", grid_bits_}};
}

Ball WhiteRationalAvoid::NextMove(const GameConfig& config,
                                  const Transcript& so_far) {
  if (config.dim != 1) {
    throw std::invalid_argument("rational_avoid is one-dimensional");
  }
  if (so_far.balls.size() <= 2) certs_.clear();
  const Ball& prev = LastBall(so_far);
  const Rational rho = prev.radius();
  const Rational r = RequiredRadius(config, prev, Player::kWhite);
  const Rational c = prev.center()[0];
  const BigInt cap = rule_(rho);

  // Fractions that can realize the minimum for some W inside U.
  const std::vector<Rational> all = RelevantFractions(c - rho, c + rho, cap);
  Rational threshold;
  bool have = false;
  for (const Rational& f : all) {
    const Rational q2(BigInt(f.den() * f.den()));
    const Rational t = WeightedDistance(c - rho, c + rho, f) +
                       q2 * Rational(2) * rho;
    if (!have || t < threshold) {
      threshold = t;
      have = true;
    }
  }
  std::vector<Rational> fractions;
  for (const Rational& f : all) {
    if (WeightedDistance(c - rho, c + rho, f) <= threshold) fractions.push_back(f);
  }

  std::vector<Point> centers;
  if (config.support) {
    centers = SubsampleEvenly(
        LegalCenters(config, prev, r, extra_depth_, 0), 129);
  } else {
    const long steps = 1L << std::max(1, grid_bits_);
    const Rational slack = rho - r;
    for (long k = 0; k <= 2 * steps; ++k) {
      centers.push_back(Point::Scalar(c - slack +
                                      slack * Rational(k, steps)));
    }
  }
  if (centers.empty()) {
    throw std::runtime_error("no legal center found in support at enumeration depth");
  }

  std::size_t best = 0;
  Rational best_cert, best_sec;
  for (std::size_t i = 0; i < centers.size(); ++i) {
    const Rational x = centers[i][0];
    Rational cert, sec;
    bool first = true;
    for (const Rational& f : fractions) {
      const Rational w = WeightedDistance(x - r, x + r, f);
      const Rational s = WeightedDistance(x, x, f);
      if (first || w < cert) cert = w;
      if (first || s < sec) sec = s;
      first = false;
    }
    if (fractions.empty()) {
      cert = Rational(1);
      sec = Rational(1);
    }
    // Candidates ascend, so strict improvement keeps the smallest on ties.
    if (i == 0 || cert > best_cert || (cert == best_cert && sec > best_sec)) {
      best = i;
      best_cert = cert;
      best_sec = sec;
    }
  }
  Ball move(centers[best], r);
  certs_.push_back({so_far.CompletedRounds(), cap, best_cert, move});
  return move;
}

Point FindGoodPoint(const SupportOracle& support,
                    const std::function<double(const Point&)>& f,
                    const Ball& omega, int depth, double theta) {
  if (!(theta > 0.0 && theta <= 1.0)) {
    throw std::invalid_argument("theta must lie in (0, 1]");
  }
  std::vector<Point> pts = support.EnumerateInBall(omega, depth);
  if (pts.empty()) throw std::runtime_error("no support point in the ball");
  std::sort(pts.begin(), pts.end(),
            [](const Point& a, const Point& b) { return a.coords < b.coords; });
  std::vector<double> vals(pts.size());
  double best = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    vals[i] = std::abs(f(pts[i]));
    best = std::max(best, vals[i]);
  }
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (vals[i] >= theta * best) return pts[i];
  }
  return pts.front();
}

TheoremConstants GradientPushParams::Validate() const {
  if (M < 1 || N < 1) throw std::invalid_argument("M and N must be >= 1");
  if (!psi || !epsilon0 || !alpha1 || !C1 || !C2 || !C3_min || !C4) {
    throw std::invalid_argument("missing constant");
  }
  TheoremConstants k;
  k.M = M;
  k.N = N;
  k.psi = *psi;
  k.epsilon0 = *epsilon0;
  k.alpha1 = *alpha1;
  k.C1 = *C1;
  k.C2 = *C2;
  k.C3_min = *C3_min;
  k.C4 = *C4;
  if (!(k.alpha1 > 0.0 && k.alpha1 < 1.0)) {
    throw std::invalid_argument("alpha1 must lie in (0, 1)");
  }
  if (!k.Alpha1Valid()) {
    throw std::invalid_argument("sqrt(alpha1) violates its upper bound");
  }
  if (!mu_schedule.empty() &&
      mu_schedule.size() != static_cast<std::size_t>(N)) {
    throw std::invalid_argument("mu schedule must have N entries");
  }
  return k;
}

WhiteGradientPush::WhiteGradientPush(GradientPushParams params,
                                     std::vector<std::vector<double>> ys)
    : params_(std::move(params)),
      constants_(params_.Validate()),
      ys_(std::move(ys)) {
  if (ys_.size() != static_cast<std::size_t>(params_.N)) {
    throw std::invalid_argument("need N vectors Y_1..Y_N");
  }
  CheckOrthonormal(ys_, static_cast<std::size_t>(params_.M + params_.N));
}

nlohmann::json WhiteGradientPush::Params() const {
  nlohmann::json j = constants_.ToJson();
  j["mu_schedule"] = params_.mu_schedule;
  j["grid_depth"] = params_.grid_depth;
  j["theta"] = params_.theta;
  j["ys"] = ys_;
  return j;
}

Ball WhiteGradientPush::Lazy(const GameConfig& config, const Ball& black) const {
  return Ball(black.center(), RequiredRadius(config, black, Player::kWhite));
}

Ball WhiteGradientPush::NextMove(const GameConfig& config,
                                 const Transcript& so_far) {
  const std::size_t h = static_cast<std::size_t>(params_.M * params_.N);
  if (config.dim != h) throw std::invalid_argument("game dimension must be M N");
  if (std::abs(config.alpha.ToDouble() - constants_.alpha1) > 1e-12) {
    throw std::invalid_argument("config alpha differs from alpha1");
  }
  const Ball& black = LastBall(so_far);
  const std::size_t k = so_far.CompletedRounds();
  if (so_far.balls.size() == 1) {
    phase_ = Phase::kWaitJ;
    nu_ = 1;
    rho0_ = black.radius().ToDouble();
    i_prev_ = 0;
    rho_i_prev_ = rho0_;
    mu_prev_ = 1.0;
    records_.clear();
  }
  const double rho = black.radius().ToDouble();
  while (true) {
    if (phase_ == Phase::kDone) return Lazy(config, black);
    if (phase_ == Phase::kWaitI) {
      if (rho < mu_prev_ * rho0_) {
        i_prev_ = k;
        rho_i_prev_ = rho;
        phase_ = Phase::kWaitJ;
        continue;
      }
      return Lazy(config, black);
    }
    const double psi_nu = constants_.PsiNu(nu_);
    const double psi_n = constants_.PsiNu(params_.N);
    const double wait = 0.5 * constants_.C1 * rho_i_prev_ *
                        std::min(psi_nu, psi_n * constants_.C4 /
                                             (8.0 * constants_.C2));
    if (!(rho < wait)) return Lazy(config, black);
    break;
  }

  // U(j_nu) is the current Black ball.
  PushRecord rec;
  rec.round = k;
  rec.nu = nu_;
  rec.rho0 = rho0_;
  rec.K = rho / rho0_;
  rec.mu = params_.mu_schedule.empty()
               ? std::sqrt(constants_.alpha1) * rec.K
               : params_.mu_schedule[static_cast<std::size_t>(nu_ - 1)];
  const LinearFormsMatrix center =
      LinearFormsMatrix::FromPoint(params_.M, params_.N, black.center());
  const MatrixBall mball{center, rho};
  const GridExtremes ext = MinorGridExtremes(mball, ys_, nu_, params_.grid_depth);
  const MinorSup prev_sup =
      MinorSupOnBall(mball, ys_, nu_ - 1, params_.grid_depth);
  rec.min_minor = ext.min_norm;
  rec.sup_prev = prev_sup.estimate;
  rec.d_center = DNu(center, ys_, nu_);
  rec.bound = 15.0 / 32.0 * constants_.C4 * rec.K * rho0_ * rec.sup_prev;

  Ball move = Lazy(config, black);
  const double trivial_at =
      constants_.PsiNu(nu_) * rho0_ * rec.mu * rec.sup_prev;
  if (ext.min_norm > trivial_at) {
    rec.branch = "trivial";
    rec.d_push = rec.d_center;
  } else {
    const LinearFormsMatrix a_prime =
        LinearFormsMatrix::FromDoubles(params_.M, params_.N, ext.argmin);
    const std::vector<double> grad = GradDNu(a_prime, ys_, nu_);
    double gn = 0.0;
    for (double g : grad) gn += g * g;
    gn = std::sqrt(gn);
    rec.grad_norm = gn;
    if (gn < 1e-12) {
      rec.branch = "degenerate";
      rec.d_push = rec.d_center;
    } else {
      rec.branch = "push";
      std::vector<double> dir = grad;
      if (rec.d_center < 0.0) {
        for (double& v : dir) v = -v;
      }
      const Rational slack = black.radius() - move.radius();
      const std::vector<Rational> off = ScaledDirection(dir, slack);
      Point p = black.center();
      for (std::size_t i = 0; i < h; ++i) p[i] += off[i];
      if (config.support) {
        const Ball omega(black.center(), slack);
        const int depth = config.support->DepthForScale(move.radius()) +
                          params_.support_extra_depth;
        const int nu = nu_;
        const int m = params_.M, n = params_.N;
        const auto& ys = ys_;
        p = FindGoodPoint(
            *config.support,
            [&](const Point& x) {
              return DNu(LinearFormsMatrix::FromPoint(m, n, x), ys, nu);
            },
            omega, depth, params_.theta);
      }
      rec.d_push = DNu(LinearFormsMatrix::FromPoint(params_.M, params_.N, p),
                       ys_, nu_);
      move = Ball(std::move(p), move.radius());
    }
  }
  rec.exceeds = std::abs(rec.d_push) > rec.bound;
  records_.push_back(rec);
  mu_prev_ = rec.mu;
  ++nu_;
  phase_ = nu_ > params_.N ? Phase::kDone : Phase::kWaitI;
  return move;
}

std::unique_ptr<Strategy> MakeStrategy(const std::string& name,
                                       const nlohmann::json& params) {
  const nlohmann::json p = params.is_null() ? nlohmann::json::object() : params;
  if (name == "lazy") return std::make_unique<LazyStrategy>();
  if (name == "random") {
    return std::make_unique<RandomLegalStrategy>(
        p.value("seed", std::uint64_t{1}), p.value("extra_depth", 4),
        p.value("grid_bits", 4));
  }
  if (name == "cantor_zero") {
    return std::make_unique<BlackCantorZero>(WindimParams{p.value("N", 1)});
  }
  if (name == "target") {
    if (!p.contains("target")) throw std::invalid_argument("target required");
    std::vector<Rational> t;
    if (p["target"].is_array()) {
      for (const auto& v : p["target"]) t.push_back(JsonRational(v));
    } else {
      t.push_back(JsonRational(p["target"]));
    }
    return std::make_unique<BlackTarget>(Point(std::move(t)));
  }
  if (name == "chaser") return std::make_unique<BlackRationalChaser>();
  if (name == "rational_avoid") {
    const Rational c =
        p.contains("c_avoid") ? JsonRational(p["c_avoid"]) : Rational(1, 8);
    CapRule rule;
    if (p.contains("cap")) {
      const BigInt cap(p["cap"].get<std::int64_t>());
      if (cap < 1) throw std::invalid_argument("cap must be >= 1");
      rule = [cap](const Rational&) { return cap; };
    }
    return std::make_unique<WhiteRationalAvoid>(
        c, rule, p.value("extra_depth", 4), p.value("grid_bits", 4));
  }
  if (name == "gradient_push") {
    GradientPushParams g;
    g.M = p.value("M", 1);
    g.N = p.value("N", 1);
    auto opt = [&](const char* key) -> std::optional<double> {
      if (!p.contains(key)) return std::nullopt;
      return p[key].get<double>();
    };
    g.psi = opt("psi");
    g.epsilon0 = opt("epsilon0");
    g.alpha1 = opt("alpha1");
    g.C1 = opt("C1");
    g.C2 = opt("C2");
    g.C3_min = opt("C3_min");
    g.C4 = opt("C4");
    if (p.contains("mu")) g.mu_schedule = p["mu"].get<std::vector<double>>();
    g.grid_depth = p.value("grid_depth", 2);
    g.theta = p.value("theta", 1.0);
    if (!p.contains("ys")) throw std::invalid_argument("ys required");
    return std::make_unique<WhiteGradientPush>(
        g, p["ys"].get<std::vector<std::vector<double>>>());
  }
  throw std::invalid_argument("unknown strategy: " + name);
}

}  // namespace schmidt
