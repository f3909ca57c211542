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

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <stdexcept>

namespace schmidt {
namespace {

enum class Overlap { kOut, kIn, kPartial };

Overlap BoxVsBall(const MeasureCell& c, const Ball& b) {
  Rational near2, far2;
  for (std::size_t i = 0; i < c.lo.size(); ++i) {
    const Rational& x = b.center()[i];
    Rational dn;
    if (x < c.lo[i]) {
      dn = c.lo[i] - x;
    } else if (x > c.hi[i]) {
      dn = x - c.hi[i];
    }
    near2 += dn * dn;
    const Rational df = std::max((x - c.lo[i]).abs(), (c.hi[i] - x).abs());
    far2 += df * df;
  }
  const Rational r2 = b.radius() * b.radius();
  if (near2 > r2) return Overlap::kOut;
  if (far2 <= r2) return Overlap::kIn;
  return Overlap::kPartial;
}

Overlap BoxVsBox(const MeasureCell& c, const std::vector<Rational>& lo,
                 const std::vector<Rational>& hi) {
  bool inside = true;
  for (std::size_t i = 0; i < c.lo.size(); ++i) {
    if (c.hi[i] < lo[i] || c.lo[i] > hi[i]) return Overlap::kOut;
    if (c.lo[i] < lo[i] || c.hi[i] > hi[i]) inside = false;
  }
  return inside ? Overlap::kIn : Overlap::kPartial;
}

MassBracket Traverse(const CylinderMeasure& m, int depth,
                     const std::function<Overlap(const MeasureCell&)>& test) {
  if (depth < 0 || depth > m.depth_cap()) {
    throw std::invalid_argument("depth outside [0, depth cap]");
  }
  MassBracket out;
  std::vector<MeasureCell> stack{m.Root()};
  while (!stack.empty()) {
    MeasureCell c = std::move(stack.back());
    stack.pop_back();
    const Overlap o = test(c);
    if (o == Overlap::kOut) continue;
    if (o == Overlap::kIn) {
      out.lower += c.mass;
      out.upper += c.mass;
      continue;
    }
    if (static_cast<int>(c.word.size()) >= depth) {
      out.upper += c.mass;
      continue;
    }
    for (MeasureCell& child : m.Children(c)) stack.push_back(std::move(child));
  }
  return out;
}

void SetBoxFromBall(MeasureCell& c, const Similarity& map, const Ball& seed,
                    bool exact) {
  const std::size_t d = seed.dim();
  c.lo.resize(d);
  c.hi.resize(d);
  if (exact) {
    const Point center = map.exact->Apply(seed.center());
    const Rational r = map.exact->ratio * seed.radius();
    for (std::size_t i = 0; i < d; ++i) {
      c.lo[i] = center[i] - r;
      c.hi[i] = center[i] + r;
    }
    return;
  }
  std::vector<double> x(d);
  for (std::size_t i = 0; i < d; ++i) x[i] = seed.center()[i].ToDouble();
  const std::vector<double> y = map.Apply(x);
  const double r = map.ratio * seed.radius().ToDouble();
  for (std::size_t i = 0; i < d; ++i) {
    const double pad = 1e-12 * (1.0 + std::abs(y[i]) + r);
    c.lo[i] = Rational::FromDouble(y[i] - r - pad);
    c.hi[i] = Rational::FromDouble(y[i] + r + pad);
  }
}

std::pair<Rational, Rational> IntervalMul(const std::pair<Rational, Rational>& a,
                                          const std::pair<Rational, Rational>& b) {
  const Rational p[4] = {a.first * b.first, a.first * b.second,
                         a.second * b.first, a.second * b.second};
  return {*std::min_element(p, p + 4), *std::max_element(p, p + 4)};
}

}  // namespace

CylinderMeasure CylinderMeasure::ContinuedFraction(std::vector<long> alphabet,
                                                   std::vector<Rational> weights) {
  if (alphabet.empty()) throw std::invalid_argument("empty alphabet");
  std::sort(alphabet.begin(), alphabet.end());
  for (long a : alphabet) {
    if (a < 1) throw std::invalid_argument("digits must be >= 1");
  }
  if (std::adjacent_find(alphabet.begin(), alphabet.end()) != alphabet.end()) {
    throw std::invalid_argument("repeated digit");
  }
  if (weights.empty()) {
    weights.assign(alphabet.size(),
                   Rational(1, static_cast<std::int64_t>(alphabet.size())));
  }
  if (weights.size() != alphabet.size()) {
    throw std::invalid_argument("one weight per digit");
  }
  Rational total;
  for (const Rational& w : weights) {
    if (w.sign() <= 0) throw std::invalid_argument("weights must be positive");
    total += w;
  }
  if (total != Rational(1)) throw std::invalid_argument("weights must sum to 1");
  CylinderMeasure m;
  m.name_ = "cf";
  for (long a : alphabet) m.name_ += std::to_string(a);
  m.dim_ = 1;
  m.weights_ = std::move(weights);
  m.alphabet_ = std::move(alphabet);
  return m;
}

CylinderMeasure CylinderMeasure::SelfSimilar(Ifs ifs, const Ball& seed,
                                             std::vector<Rational> weights) {
  if (weights.empty()) {
    const std::vector<double> r = ifs.Ratios();
    if (std::all_of(r.begin(), r.end(), [&](double x) { return x == r[0]; })) {
      weights.assign(r.size(), Rational(1, static_cast<std::int64_t>(r.size())));
    } else {
      const double s = SimilarityDimension(ifs);
      Rational rest(1);
      for (std::size_t i = 0; i + 1 < r.size(); ++i) {
        weights.push_back(Rational::FromDouble(std::pow(r[i], s)));
        rest -= weights.back();
      }
      weights.push_back(rest);
    }
  }
  if (weights.size() != ifs.size()) {
    throw std::invalid_argument("one weight per map");
  }
  Rational total;
  for (const Rational& w : weights) {
    if (w.sign() <= 0) throw std::invalid_argument("weights must be positive");
    total += w;
  }
  if (total != Rational(1)) throw std::invalid_argument("weights must sum to 1");
  CylinderMeasure m;
  m.name_ = ifs.name();
  m.dim_ = ifs.dim();
  m.weights_ = std::move(weights);
  m.seed_ = Ball(seed.center(), InvariantRadius(ifs, seed));
  if (ifs.exact()) m.anchor_ = ifs.maps().front().exact->FixedPoint();
  m.ifs_ = std::move(ifs);
  return m;
}

CylinderMeasure CylinderMeasure::Preset(const std::string& name) {
  if (name == "cf13") return ContinuedFraction({1, 3});
  const std::string ifs_name = name == "lebesgue" ? "interval" : name;
  CylinderMeasure m = SelfSimilar(PresetIfs(ifs_name), PresetSeed(ifs_name));
  m.name_ = name;
  return m;
}

MeasureCell CylinderMeasure::Root() const {
  MeasureCell c;
  c.mass = 1;
  if (ifs_) {
    c.map = Similarity::Identity(dim_);
    if (!ifs_->exact()) c.map.exact.reset();
    SetBoxFromBall(c, c.map, *seed_, ifs_->exact());
  } else {
    c.lo = {Rational(0)};
    c.hi = {Rational(1)};
    c.p = 0;
    c.q = 1;
    c.pp = 1;
    c.qp = 0;
  }
  return c;
}

std::vector<MeasureCell> CylinderMeasure::Children(const MeasureCell& cell) const {
  std::vector<MeasureCell> out;
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    MeasureCell c;
    c.word = cell.word;
    c.word.push_back(static_cast<int>(i));
    c.mass = cell.mass * weights_[i];
    if (ifs_) {
      c.map = cell.map.Compose(ifs_->maps()[i]);
      SetBoxFromBall(c, c.map, *seed_, ifs_->exact());
    } else {
      const BigInt a(alphabet_[i]);
      c.p = a * cell.p + cell.pp;
      c.q = a * cell.q + cell.qp;
      c.pp = cell.p;
      c.qp = cell.q;
      const Rational x(c.p, c.q);
      const Rational y(c.p + c.pp, c.q + c.qp);
      c.lo = {std::min(x, y)};
      c.hi = {std::max(x, y)};
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<MeasureCell> CylinderMeasure::CellsAtDepth(int depth) const {
  if (depth < 0 || depth > depth_cap_) {
    throw std::invalid_argument("depth outside [0, depth cap]");
  }
  std::vector<MeasureCell> level{Root()};
  for (int k = 0; k < depth; ++k) {
    std::vector<MeasureCell> next;
    for (const MeasureCell& c : level) {
      for (MeasureCell& child : Children(c)) next.push_back(std::move(child));
    }
    level = std::move(next);
  }
  return level;
}

Point CylinderMeasure::Representative(const MeasureCell& cell) const {
  if (ifs_ && anchor_ && cell.map.exact) return cell.map.exact->Apply(*anchor_);
  Point p = Point::Zero(dim_);
  for (std::size_t i = 0; i < dim_; ++i) p[i] = (cell.lo[i] + cell.hi[i]) / Rational(2);
  return p;
}

MassBracket BallMass(const CylinderMeasure& m, const Ball& ball, int depth) {
  if (ball.dim() != m.dim()) throw std::invalid_argument("dimension mismatch");
  return Traverse(m, depth,
                  [&](const MeasureCell& c) { return BoxVsBall(c, ball); });
}

MassBracket BoxMass(const CylinderMeasure& m, const std::vector<Rational>& lo,
                    const std::vector<Rational>& hi, int depth) {
  if (lo.size() != m.dim() || hi.size() != m.dim()) {
    throw std::invalid_argument("dimension mismatch");
  }
  for (std::size_t i = 0; i < lo.size(); ++i) {
    if (lo[i] > hi[i]) return {};
  }
  return Traverse(m, depth,
                  [&](const MeasureCell& c) { return BoxVsBox(c, lo, hi); });
}

std::vector<Point> SampleCenters(const CylinderMeasure& m, std::size_t count,
                                 int sample_depth, std::uint64_t seed) {
  if (sample_depth < 0 || sample_depth > m.depth_cap()) {
    throw std::invalid_argument("depth outside [0, depth cap]");
  }
  std::mt19937_64 rng(seed);
  std::vector<Point> out;
  for (std::size_t s = 0; s < count; ++s) {
    MeasureCell c = m.Root();
    for (int k = 0; k < sample_depth; ++k) {
      std::vector<MeasureCell> kids = m.Children(c);
      c = std::move(kids[rng() % kids.size()]);
    }
    out.push_back(m.Representative(c));
  }
  return out;
}

DoublingReport DoublingEstimate(const CylinderMeasure& m,
                                const std::vector<Point>& centers,
                                const std::vector<Rational>& scales,
                                int depth) {
  if (m.single_point()) {
    throw std::invalid_argument("a point mass has no doubling profile");
  }
  if (centers.empty() || scales.empty()) {
    throw std::invalid_argument("need centers and scales");
  }
  DoublingReport rep;
  rep.per_scale.assign(scales.size(), 0.0);
  bool first = true;
  for (std::size_t s = 0; s < scales.size(); ++s) {
    const Rational& rho = scales[s];
    if (rho.sign() <= 0) throw std::invalid_argument("scales must be positive");
    bool first_here = true;
    for (const Point& x : centers) {
      const Rational lo = BallMass(m, Ball(x, rho / Rational(2)), depth).lower;
      const Rational up = BallMass(m, Ball(x, rho), depth).upper;
      if (lo.is_zero()) {
        throw std::runtime_error("degenerate bracket at scale " + rho.ToString() +
                                 "; increase depth");
      }
      const double ratio = (lo / up).ToDouble();
      ++rep.samples;
      if (first_here || ratio < rep.per_scale[s]) rep.per_scale[s] = ratio;
      first_here = false;
      if (first || ratio < rep.estimate) {
        rep.estimate = ratio;
        rep.worst_center = x;
        rep.worst_scale = rho;
      }
      first = false;
    }
  }
  const auto [mn, mx] = std::minmax_element(rep.per_scale.begin(), rep.per_scale.end());
  rep.spread = *mx / *mn;
  return rep;
}

DecayReport DecayEstimate(const CylinderMeasure& m,
                          const std::vector<Point>& centers,
                          const std::vector<Rational>& scales, int depth,
                          int levels, DecayScale reading) {
  if (m.dim() != 1) throw std::invalid_argument("decay check is one-dimensional");
  if (centers.empty() || scales.empty() || levels < 2) {
    throw std::invalid_argument("need centers, scales and at least 2 levels");
  }
  DecayReport rep;
  rep.worst_by_level.assign(static_cast<std::size_t>(levels), 0.0);
  for (int j = 0; j < levels; ++j) {
    rep.eps_levels.push_back(std::pow(3.0, -j));
  }
  auto interval_upper = [&](const Rational& a, const Rational& b) {
    if (a > b) return Rational(0);
    return BoxMass(m, {a}, {b}, depth).upper;
  };
  for (const Rational& rho : scales) {
    std::vector<double> worst(static_cast<std::size_t>(levels), 0.0);
    for (const Point& center : centers) {
      const Rational& x = center[0];
      const Rational den = BallMass(m, Ball(center, rho), depth).lower;
      if (den.is_zero()) {
        ++rep.degenerate;
        continue;
      }
      // Hyperplanes: x and the ends of the deepest cells around x.
      std::vector<Rational> planes{x};
      MeasureCell c = m.Root();
      for (int k = 0; k < depth; ++k) {
        bool moved = false;
        for (MeasureCell& child : m.Children(c)) {
          if (child.lo[0] <= x && x <= child.hi[0]) {
            const bool wide = child.hi[0] - child.lo[0] >= rho;
            planes.push_back(child.lo[0]);
            planes.push_back(child.hi[0]);
            if (wide) {
              c = std::move(child);
              moved = true;
            }
            break;
          }
        }
        if (!moved) break;
      }
      for (int j = 0; j < levels; ++j) {
        const Rational eps = rho / Pow(Rational(3), j);
        Rational best;
        for (const Rational& p : planes) {
          if (reading == DecayScale::kEqual) {
            best = std::max(best, interval_upper(std::max(x - rho, p - eps),
                                                 std::min(x + rho, p + eps)));
          } else {
            for (int t = 0; t <= levels; ++t) {
              const Rational r = rho / Pow(Rational(3), t);
              best = std::max(best, interval_upper(std::max(x - r, p - eps),
                                                   std::min(x + r, p + eps)));
            }
          }
        }
        const double ratio = (best / den).ToDouble();
        worst[static_cast<std::size_t>(j)] = std::max(worst[static_cast<std::size_t>(j)], ratio);
      }
    }
    for (int j = 0; j < levels; ++j) {
      rep.rows.push_back({rho, Rational(1) / Pow(Rational(3), j), worst[static_cast<std::size_t>(j)]});
      rep.worst_by_level[static_cast<std::size_t>(j)] =
          std::max(rep.worst_by_level[static_cast<std::size_t>(j)], worst[static_cast<std::size_t>(j)]);
    }
  }
  std::vector<double> xs, ys;
  for (int j = 0; j < levels; ++j) {
    const double w = rep.worst_by_level[static_cast<std::size_t>(j)];
    if (w > 0) {
      xs.push_back(std::log(rep.eps_levels[static_cast<std::size_t>(j)]));
      ys.push_back(std::log(w));
    }
  }
  if (xs.size() < 2) throw std::runtime_error("decay fit needs two positive levels");
  const double k = static_cast<double>(xs.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  rep.a = (k * sxy - sx * sy) / (k * sxx - sx * sx);
  const double intercept = (sy - rep.a * sx) / k;
  rep.C = std::exp(intercept);
  double ss_res = 0, ss_tot = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double res = ys[i] - (intercept + rep.a * xs[i]);
    rep.residuals.push_back(res);
    ss_res += res * res;
    ss_tot += (ys[i] - sy / k) * (ys[i] - sy / k);
  }
  rep.r_squared = ss_tot > 0 ? 1.0 - ss_res / ss_tot : 1.0;
  return rep;
}

Polynomial Polynomial::Constant(std::size_t dim, Rational c) {
  Polynomial p;
  p.dim = dim;
  p.terms.push_back({std::vector<int>(dim, 0), std::move(c)});
  return p;
}

Polynomial Polynomial::Coordinate(std::size_t dim, std::size_t i) {
  Polynomial p;
  p.dim = dim;
  std::vector<int> e(dim, 0);
  e.at(i) = 1;
  p.terms.push_back({std::move(e), Rational(1)});
  return p;
}

int Polynomial::Degree() const {
  int d = 0;
  for (const auto& [e, c] : terms) {
    if (c.is_zero()) continue;
    int s = 0;
    for (int k : e) s += k;
    d = std::max(d, s);
  }
  return d;
}

Rational Polynomial::Eval(const Point& x) const {
  if (x.dim() != dim) throw std::invalid_argument("dimension mismatch");
  Rational s;
  for (const auto& [e, c] : terms) {
    Rational t = c;
    for (std::size_t i = 0; i < dim; ++i) t *= Pow(x[i], e[i]);
    s += t;
  }
  return s;
}

std::pair<Rational, Rational> Polynomial::Range(
    const std::vector<Rational>& lo, const std::vector<Rational>& hi) const {
  std::pair<Rational, Rational> total{Rational(0), Rational(0)};
  for (const auto& [e, c] : terms) {
    std::pair<Rational, Rational> t{c, c};
    for (std::size_t i = 0; i < dim; ++i) {
      if (e[i] == 0) continue;
      const Rational a = Pow(lo[i], e[i]);
      const Rational b = Pow(hi[i], e[i]);
      std::pair<Rational, Rational> f{std::min(a, b), std::max(a, b)};
      if (e[i] % 2 == 0 && lo[i].sign() < 0 && hi[i].sign() > 0) f.first = 0;
      t = IntervalMul(t, f);
    }
    total.first += t.first;
    total.second += t.second;
  }
  return total;
}

SublevelReport SublevelRatio(const CylinderMeasure& m, const Polynomial& f,
                             const Ball& ball, const Rational& eps, int depth) {
  if (f.dim != m.dim()) throw std::invalid_argument("dimension mismatch");
  if (eps.sign() <= 0) throw std::invalid_argument("eps must be positive");
  SublevelReport rep;
  rep.ball = BallMass(m, ball, depth);
  // Sampled sup norm from representatives of cells inside the ball.
  const int sample_depth = std::min(depth, 10);
  std::vector<MeasureCell> stack{m.Root()};
  while (!stack.empty()) {
    MeasureCell c = std::move(stack.back());
    stack.pop_back();
    if (BoxVsBall(c, ball) == Overlap::kOut) continue;
    const Point p = m.Representative(c);
    if (ball.Contains(p)) {
      rep.sup_norm = std::max(rep.sup_norm, std::abs(f.Eval(p).ToDouble()));
    }
    if (static_cast<int>(c.word.size()) < sample_depth) {
      for (MeasureCell& k : m.Children(c)) stack.push_back(std::move(k));
    }
  }
  if (rep.sup_norm == 0.0) throw std::invalid_argument("polynomial vanishes on the ball");
  rep.sublevel = Traverse(m, depth, [&](const MeasureCell& c) {
    const Overlap o = BoxVsBall(c, ball);
    if (o == Overlap::kOut) return Overlap::kOut;
    const auto [lo, hi] = f.Range(c.lo, c.hi);
    if (lo >= eps || hi <= -eps) return Overlap::kOut;
    if (o == Overlap::kIn && lo > -eps && hi < eps) return Overlap::kIn;
    return Overlap::kPartial;
  });
  rep.ratio_upper = rep.ball.lower.is_zero()
                        ? INFINITY
                        : (rep.sublevel.upper / rep.ball.lower).ToDouble();
  rep.ratio_lower = rep.ball.upper.is_zero()
                        ? 0.0
                        : (rep.sublevel.lower / rep.ball.upper).ToDouble();
  return rep;
}

double Epsilon0(double K, double delta) {
  if (!(K > 0.0) || !(delta > 0.0)) {
    throw std::invalid_argument("K and delta must be positive");
  }
  return std::pow(1.0 / (2.0 * K), 1.0 / delta) * (1.0 - 1e-6);
}

}  // namespace schmidt
