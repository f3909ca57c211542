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

#include "schmidt/support.h"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

namespace schmidt {
namespace {

constexpr std::size_t kMaxFrontier = 4096;
constexpr std::size_t kMaxVisited = std::size_t{1} << 20;

bool Meets(const Ball& a, const Ball& b) {
  const Rational r = a.radius() + b.radius();
  return SquaredDistance(a.center(), b.center()) <= r * r;
}

using IntVec = std::vector<BigInt>;

// (S v)[perm[j]] = sign[j] v[j].
IntVec SignedPerm(const std::vector<int>& perm, const std::vector<int>& sign,
                  const IntVec& v) {
  IntVec out(v.size());
  for (std::size_t j = 0; j < v.size(); ++j) {
    const auto i = static_cast<std::size_t>(perm[j]);
    out[i] = sign[j] > 0 ? v[j] : BigInt(-v[j]);
  }
  return out;
}

BigInt Lcm(const BigInt& a, const BigInt& b) { return lcm(a, b); }

// Integer vector k * x; requires k * x integral.
IntVec Scaled(const std::vector<Rational>& x, const BigInt& k) {
  IntVec out(x.size());
  for (std::size_t j = 0; j < x.size(); ++j) {
    const Rational v = x[j] * Rational(k);
    out[j] = v.num();
  }
  return out;
}

BigInt SquaredNorm(const IntVec& v) {
  BigInt s = 0;
  for (const BigInt& x : v) s += x * x;
  return s;
}

}  // namespace

IfsSupport::IfsSupport(Ifs ifs, const Ball& seed, Rational diameter)
    : ifs_(std::move(ifs)),
      seed_(seed),
      diameter_(std::move(diameter)) {
  if (!ifs_.exact()) throw std::invalid_argument("support IFS must be exact");
  seed_ = Ball(seed.center(), InvariantRadius(ifs_, seed));
  max_ratio_ = ifs_.maps().front().exact->ratio;
  for (const Similarity& s : ifs_.maps()) {
    max_ratio_ = std::max(max_ratio_, s.exact->ratio);
    fixed_points_.push_back(s.exact->FixedPoint());
    child_cells_.emplace_back(s.exact->Apply(seed_.center()),
                              s.exact->ratio * seed_.radius());
  }
  integral_ = true;
  for (const Similarity& s : ifs_.maps()) {
    if (s.exact->ratio.num() != 1) integral_ = false;
  }
}

Membership IfsSupport::Contains(const Point& p, int depth) const {
  if (p.dim() != dim()) return Membership::kOut;
  if (!seed_.Contains(p)) return Membership::kOut;
  if (integral_) return ContainsIntegral(p, depth);
  // A revisited point means an eventually periodic address. Checkpoints are
  // taken at powers of two, which catches every cycle once the step count
  // exceeds both the preperiod and the period.
  std::set<std::vector<Rational>> checkpoint;
  std::vector<Point> frontier{p};
  for (int step = 0; step <= depth; ++step) {
    if ((step & (step - 1)) == 0) {
      checkpoint.clear();
      for (const Point& y : frontier) checkpoint.insert(y.coords);
    } else {
      for (const Point& y : frontier) {
        if (checkpoint.count(y.coords)) return Membership::kIn;
      }
    }
    std::vector<Point> next;
    for (const Point& y : frontier) {
      if (std::find(fixed_points_.begin(), fixed_points_.end(), y) !=
          fixed_points_.end()) {
        return Membership::kIn;
      }
      for (std::size_t i = 0; i < child_cells_.size(); ++i) {
        if (!child_cells_[i].Contains(y)) continue;
        next.push_back(ifs_.maps()[i].exact->InverseApply(y));
      }
    }
    if (next.empty()) return Membership::kOut;
    if (next.size() > kMaxFrontier) break;
    frontier = std::move(next);
  }
  return Membership::kUndecided;
}

std::vector<Point> IfsSupport::EnumerateInBall(const Ball& ball,
                                               int depth) const {
  if (ball.dim() != dim()) throw std::invalid_argument("dimension mismatch");
  if (integral_) return EnumerateIntegral(ball, depth);
  std::vector<std::vector<Rational>> found;
  struct Node {
    ExactSimilarity map;
    int level;
  };
  std::vector<Node> stack;
  if (Meets(seed_, ball)) stack.push_back({ExactSimilarity::Identity(dim()), 0});
  std::size_t visited = 0;
  // Nodes on the stack already meet the ball.
  while (!stack.empty()) {
    Node node = std::move(stack.back());
    stack.pop_back();
    if (++visited > kMaxVisited) throw std::length_error("enumeration too large");
    if (node.level == depth) {
      for (const Point& f : fixed_points_) {
        Point q = node.map.Apply(f);
        if (ball.Contains(q)) found.push_back(std::move(q.coords));
      }
      continue;
    }
    for (std::size_t i = 0; i < child_cells_.size(); ++i) {
      const Ball cell(node.map.Apply(child_cells_[i].center()),
                      node.map.ratio * child_cells_[i].radius());
      if (!Meets(cell, ball)) continue;
      stack.push_back({node.map.Compose(*ifs_.maps()[i].exact), node.level + 1});
    }
  }
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  std::vector<Point> out;
  out.reserve(found.size());
  for (auto& c : found) out.emplace_back(std::move(c));
  return out;
}

Membership IfsSupport::ContainsIntegral(const Point& p, int depth) const {
  const std::size_t d = dim();
  const auto& maps = ifs_.maps();
  // y = Y / D with D clearing p and every translation, so each inverse map
  // x = m S^-1 (y - t) keeps the denominator D.
  BigInt D = 1;
  for (const Rational& v : p.coords) D = Lcm(D, v.den());
  for (const Similarity& s : maps) {
    for (const Rational& v : s.exact->translation) D = Lcm(D, v.den());
  }
  // Child cell tests |K Y - K c_i D|^2 <= (K r_i D)^2 with K clearing the
  // cell centers and radii.
  BigInt K = 1;
  for (const Ball& c : child_cells_) {
    K = Lcm(K, c.radius().den());
    for (const Rational& v : c.center().coords) K = Lcm(K, v.den());
  }
  std::vector<IntVec> cell_center, shift;
  std::vector<BigInt> cell_r2, m;
  for (std::size_t i = 0; i < maps.size(); ++i) {
    cell_center.push_back(Scaled(child_cells_[i].center().coords, K * D));
    const BigInt r = (child_cells_[i].radius() * Rational(BigInt(K * D))).num();
    cell_r2.push_back(r * r);
    shift.push_back(Scaled(maps[i].exact->translation, D));
    m.push_back(maps[i].exact->ratio.den());
  }
  std::vector<IntVec> fixed;
  for (const Point& f : fixed_points_) {
    bool integral = true;
    for (const Rational& v : f.coords) {
      if (!(v * Rational(D)).is_integer()) integral = false;
    }
    if (integral) fixed.push_back(Scaled(f.coords, D));
  }

  std::set<IntVec> checkpoint;
  std::vector<IntVec> frontier{Scaled(p.coords, D)};
  IntVec diff(d);
  for (int step = 0; step <= depth; ++step) {
    if ((step & (step - 1)) == 0) {
      checkpoint.clear();
      checkpoint.insert(frontier.begin(), frontier.end());
    } else {
      for (const IntVec& y : frontier) {
        if (checkpoint.count(y)) return Membership::kIn;
      }
    }
    std::vector<IntVec> next;
    for (const IntVec& y : frontier) {
      if (std::find(fixed.begin(), fixed.end(), y) != fixed.end()) {
        return Membership::kIn;
      }
      for (std::size_t i = 0; i < maps.size(); ++i) {
        for (std::size_t j = 0; j < d; ++j) {
          diff[j] = K * y[j] - cell_center[i][j];
        }
        if (SquaredNorm(diff) > cell_r2[i]) continue;
        const ExactSimilarity& e = *maps[i].exact;
        IntVec x(d);
        for (std::size_t j = 0; j < d; ++j) {
          const auto k = static_cast<std::size_t>(e.perm[j]);
          const BigInt v = m[i] * (y[k] - shift[i][k]);
          x[j] = e.sign[j] > 0 ? v : BigInt(-v);
        }
        next.push_back(std::move(x));
      }
    }
    if (next.empty()) return Membership::kOut;
    if (next.size() > kMaxFrontier) break;
    frontier = std::move(next);
  }
  return Membership::kUndecided;
}

std::vector<Point> IfsSupport::EnumerateIntegral(const Ball& ball,
                                                 int depth) const {
  const std::size_t d = dim();
  const auto& maps = ifs_.maps();
  // phi_w(x) = S_w x / M + T / (E M) with integers M, T; E clears every
  // t_i m_i so T stays integral under composition.
  BigInt E = 1;
  for (const Similarity& s : maps) {
    for (const Rational& v : s.exact->translation) {
      E = Lcm(E, (v * Rational(s.exact->ratio.den())).den());
    }
  }
  // Meets: |S_w C + K T - M B|^2 <= (Rs + M Ss)^2, everything scaled by E K.
  BigInt K = ball.radius().den() * 1;
  K = Lcm(K, seed_.radius().den());
  for (const Rational& v : seed_.center().coords) K = Lcm(K, v.den());
  for (const Rational& v : ball.center().coords) K = Lcm(K, v.den());
  const BigInt EK = E * K;
  const IntVec C = Scaled(seed_.center().coords, EK);
  const IntVec B = Scaled(ball.center().coords, EK);
  const BigInt Rs = (seed_.radius() * Rational(EK)).num();
  const BigInt Ss = (ball.radius() * Rational(EK)).num();
  std::vector<IntVec> U;
  std::vector<BigInt> m;
  for (const Similarity& s : maps) {
    m.push_back(s.exact->ratio.den());
    U.push_back(Scaled(s.exact->translation, E * m.back()));
  }

  struct Node {
    std::vector<int> perm, sign;
    BigInt M;
    IntVec T;
    int level;
  };
  auto meets = [&](const Node& n) {
    const IntVec sc = SignedPerm(n.perm, n.sign, C);
    BigInt dist2 = 0;
    for (std::size_t j = 0; j < d; ++j) {
      const BigInt v = sc[j] + K * n.T[j] - n.M * B[j];
      dist2 += v * v;
    }
    const BigInt r = Rs + n.M * Ss;
    return dist2 <= r * r;
  };

  std::vector<std::vector<Rational>> found;
  std::vector<Node> stack;
  {
    const ExactSimilarity id = ExactSimilarity::Identity(d);
    Node root{id.perm, id.sign, BigInt(1), IntVec(d, BigInt(0)), 0};
    if (meets(root)) stack.push_back(std::move(root));
  }
  std::size_t visited = 0;
  while (!stack.empty()) {
    Node node = std::move(stack.back());
    stack.pop_back();
    if (++visited > kMaxVisited) throw std::length_error("enumeration too large");
    if (node.level == depth) {
      const Rational inv_m = Rational(BigInt(1), node.M);
      const Rational inv_em = Rational(BigInt(1), BigInt(E * node.M));
      for (const Point& f : fixed_points_) {
        Point q = Point::Zero(d);
        for (std::size_t j = 0; j < d; ++j) {
          const auto i = static_cast<std::size_t>(node.perm[j]);
          q[i] = (node.sign[j] > 0 ? f[j] : -f[j]) * inv_m;
        }
        for (std::size_t j = 0; j < d; ++j) q[j] += Rational(node.T[j]) * inv_em;
        if (ball.Contains(q)) found.push_back(std::move(q.coords));
      }
      continue;
    }
    for (std::size_t i = 0; i < maps.size(); ++i) {
      const ExactSimilarity& e = *maps[i].exact;
      Node child;
      child.perm.resize(d);
      child.sign.resize(d);
      for (std::size_t j = 0; j < d; ++j) {
        const auto k = static_cast<std::size_t>(e.perm[j]);
        child.perm[j] = node.perm[k];
        child.sign[j] = e.sign[j] * node.sign[k];
      }
      child.M = node.M * m[i];
      child.T = SignedPerm(node.perm, node.sign, U[i]);
      for (std::size_t j = 0; j < d; ++j) child.T[j] += m[i] * node.T[j];
      child.level = node.level + 1;
      if (meets(child)) stack.push_back(std::move(child));
    }
  }
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  std::vector<Point> out;
  out.reserve(found.size());
  for (auto& c : found) out.emplace_back(std::move(c));
  return out;
}

int IfsSupport::DepthForScale(const Rational& scale) const {
  Rational size = Rational(2) * seed_.radius();
  int n = 0;
  while (size > scale && n < 4096) {
    size *= max_ratio_;
    ++n;
  }
  return n;
}

IntervalSupport::IntervalSupport(Rational lo, Rational hi)
    : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (!(lo_ < hi_)) throw std::invalid_argument("empty interval");
}

Membership IntervalSupport::Contains(const Point& p, int /*depth*/) const {
  if (p.dim() != 1) return Membership::kOut;
  return lo_ <= p[0] && p[0] <= hi_ ? Membership::kIn : Membership::kOut;
}

std::vector<Point> IntervalSupport::EnumerateInBall(const Ball& ball,
                                                    int depth) const {
  if (ball.dim() != 1) throw std::invalid_argument("dimension mismatch");
  const Rational step = (hi_ - lo_) / Pow(Rational(2), depth);
  const Rational a = std::max(lo_, ball.center()[0] - ball.radius());
  const Rational b = std::min(hi_, ball.center()[0] + ball.radius());
  std::vector<Point> out;
  if (a > b) return out;
  const BigInt first = ((a - lo_) / step).ceil();
  const BigInt last = ((b - lo_) / step).floor();
  if (last - first > BigInt(1 << 20)) throw std::length_error("enumeration too large");
  for (BigInt j = first; j <= last; ++j) {
    out.push_back(Point::Scalar(lo_ + Rational(j) * step));
  }
  return out;
}

int IntervalSupport::DepthForScale(const Rational& scale) const {
  Rational size = hi_ - lo_;
  int n = 0;
  while (size > scale && n < 4096) {
    size /= Rational(2);
    ++n;
  }
  return n;
}

std::shared_ptr<const IfsSupport> CantorSupport() {
  return std::make_shared<const IfsSupport>(PresetIfs("cantor"),
                                            PresetSeed("cantor"), Rational(1));
}

std::shared_ptr<const SupportOracle> MakeSupport(const std::string& name) {
  if (name == "cantor") return CantorSupport();
  if (name == "interval") {
    return std::make_shared<const IntervalSupport>(Rational(0), Rational(1));
  }
  if (name == "none" || name.empty()) return nullptr;
  throw std::invalid_argument("unknown support: " + name);
}

}  // namespace schmidt
