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

#ifndef SCHMIDT_SUPPORT_H_
#define SCHMIDT_SUPPORT_H_

// Exact support oracles for the K-variant of the game.

#include <memory>
#include <string>
#include <vector>

#include "schmidt/fractal_ifs.h"
#include "schmidt/game.h"

namespace schmidt {

// Attractor of an IFS of exact similarities.
//
// Membership of a rational point is decided by pulling it back through the
// inverse maps: it is out once every branch leaves the seed ball, and in once
// a branch reaches a fixed point or revisits a point (an eventually periodic
// address). Representatives at depth n are phi_w(fixed point of phi_i).
class IfsSupport : public SupportOracle {
 public:
  // Throws std::invalid_argument if the IFS is not exact.
  IfsSupport(Ifs ifs, const Ball& seed, Rational diameter);

  std::string Name() const override { return ifs_.name(); }
  std::size_t dim() const override { return ifs_.dim(); }
  Rational Diameter() const override { return diameter_; }
  Membership Contains(const Point& p, int depth) const override;
  std::vector<Point> EnumerateInBall(const Ball& ball,
                                     int depth) const override;
  int DepthForScale(const Rational& scale) const override;

  const Ifs& ifs() const { return ifs_; }
  const Ball& seed() const { return seed_; }

 private:
  Ifs ifs_;
  Ball seed_;
  Rational diameter_;
  Rational max_ratio_;
  std::vector<Point> fixed_points_;
  std::vector<Ball> child_cells_;  // phi_i(seed)

  // Fast paths for maps x -> S x / m + t with S a signed permutation and m an
  // integer: points and cells are carried as integer vectors over a running
  // denominator, which avoids rational normalization in the deep loops.
  bool integral_ = false;
  Membership ContainsIntegral(const Point& p, int depth) const;
  std::vector<Point> EnumerateIntegral(const Ball& ball, int depth) const;
};

// Closed interval [lo, hi]; depth-n representatives are the dyadic points
// lo + j (hi - lo) / 2^n.
class IntervalSupport : public SupportOracle {
 public:
  IntervalSupport(Rational lo, Rational hi);

  std::string Name() const override { return "interval"; }
  std::size_t dim() const override { return 1; }
  Rational Diameter() const override { return hi_ - lo_; }
  Membership Contains(const Point& p, int depth) const override;
  std::vector<Point> EnumerateInBall(const Ball& ball,
                                     int depth) const override;
  int DepthForScale(const Rational& scale) const override;

 private:
  Rational lo_;
  Rational hi_;
};

// The middle-thirds Cantor set in [0, 1].
std::shared_ptr<const IfsSupport> CantorSupport();

// "cantor", "interval" ([0, 1]) or "none" (null: all of R^d).
std::shared_ptr<const SupportOracle> MakeSupport(const std::string& name);

}  // namespace schmidt

#endif  // SCHMIDT_SUPPORT_H_
