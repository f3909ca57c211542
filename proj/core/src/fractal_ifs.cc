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

#include "schmidt/fractal_ifs.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace schmidt {
namespace {

std::vector<Rational> SolveLinear(std::vector<std::vector<Rational>> a,
                                  std::vector<Rational> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col].is_zero()) ++pivot;
    if (pivot == n) throw std::domain_error("singular system");
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || a[row][col].is_zero()) continue;
      const Rational f = a[row][col] / a[col][col];
      for (std::size_t k = col; k < n; ++k) a[row][k] -= f * a[col][k];
      b[row] -= f * b[col];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

double Norm(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

// Rotation by `degrees` scaled by `ratio`, followed by translation (tx, ty).
Similarity Planar(double ratio, double degrees, double tx, double ty) {
  const double t = degrees * std::numbers::pi / 180.0;
  return Similarity(ratio,
                    {std::cos(t), -std::sin(t), std::sin(t), std::cos(t)},
                    {tx, ty});
}

Similarity Axis(Rational ratio, std::vector<Rational> translation) {
  ExactSimilarity e;
  const std::size_t d = translation.size();
  e.ratio = std::move(ratio);
  e.perm.resize(d);
  for (std::size_t i = 0; i < d; ++i) e.perm[i] = static_cast<int>(i);
  e.sign.assign(d, 1);
  e.translation = std::move(translation);
  return Similarity(std::move(e));
}

}  // namespace

Point ExactSimilarity::Apply(const Point& x) const {
  if (x.dim() != dim()) throw std::invalid_argument("dimension mismatch");
  Point y = Point::Zero(dim());
  for (std::size_t j = 0; j < dim(); ++j) {
    const std::size_t i = static_cast<std::size_t>(perm[j]);
    y[i] = ratio * (sign[j] > 0 ? x[j] : -x[j]) + translation[i];
  }
  return y;
}

Point ExactSimilarity::InverseApply(const Point& y) const {
  if (y.dim() != dim()) throw std::invalid_argument("dimension mismatch");
  Point x = Point::Zero(dim());
  for (std::size_t j = 0; j < dim(); ++j) {
    const std::size_t i = static_cast<std::size_t>(perm[j]);
    const Rational v = (y[i] - translation[i]) / ratio;
    x[j] = sign[j] > 0 ? v : -v;
  }
  return x;
}

Point ExactSimilarity::FixedPoint() const {
  const std::size_t d = dim();
  std::vector<std::vector<Rational>> a(d, std::vector<Rational>(d));
  for (std::size_t i = 0; i < d; ++i) a[i][i] = 1;
  for (std::size_t j = 0; j < d; ++j) {
    a[static_cast<std::size_t>(perm[j])][j] -= ratio * Rational(sign[j]);
  }
  return Point(SolveLinear(std::move(a), translation));
}

ExactSimilarity ExactSimilarity::Compose(const ExactSimilarity& inner) const {
  ExactSimilarity out;
  const std::size_t d = dim();
  out.ratio = ratio * inner.ratio;
  out.perm.resize(d);
  out.sign.resize(d);
  for (std::size_t j = 0; j < d; ++j) {
    const int k = inner.perm[j];
    out.perm[j] = perm[static_cast<std::size_t>(k)];
    out.sign[j] = inner.sign[j] * sign[static_cast<std::size_t>(k)];
  }
  out.translation = Apply(Point(inner.translation)).coords;
  return out;
}

ExactSimilarity ExactSimilarity::Identity(std::size_t dim) {
  ExactSimilarity e;
  e.ratio = 1;
  e.perm.resize(dim);
  for (std::size_t i = 0; i < dim; ++i) e.perm[i] = static_cast<int>(i);
  e.sign.assign(dim, 1);
  e.translation.assign(dim, Rational(0));
  return e;
}

Similarity::Similarity(double r, std::vector<double> m, std::vector<double> t)
    : ratio(r), matrix(std::move(m)), translation(std::move(t)) {}

Similarity::Similarity(ExactSimilarity e) {
  const std::size_t d = e.dim();
  ratio = e.ratio.ToDouble();
  matrix.assign(d * d, 0.0);
  for (std::size_t j = 0; j < d; ++j) {
    matrix[static_cast<std::size_t>(e.perm[j]) * d + j] = e.sign[j];
  }
  translation.resize(d);
  for (std::size_t i = 0; i < d; ++i) translation[i] = e.translation[i].ToDouble();
  exact = std::move(e);
}

std::vector<double> Similarity::Apply(const std::vector<double>& x) const {
  const std::size_t d = dim();
  std::vector<double> y(translation);
  for (std::size_t i = 0; i < d; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < d; ++j) s += matrix[i * d + j] * x[j];
    y[i] += ratio * s;
  }
  return y;
}

Similarity Similarity::Compose(const Similarity& inner) const {
  const std::size_t d = dim();
  Similarity out;
  out.ratio = ratio * inner.ratio;
  out.matrix.assign(d * d, 0.0);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t k = 0; k < d; ++k) {
      for (std::size_t j = 0; j < d; ++j) {
        out.matrix[i * d + j] += matrix[i * d + k] * inner.matrix[k * d + j];
      }
    }
  }
  out.translation = Apply(inner.translation);
  if (exact && inner.exact) out.exact = exact->Compose(*inner.exact);
  return out;
}

Similarity Similarity::Identity(std::size_t dim) {
  return Similarity(ExactSimilarity::Identity(dim));
}

void Similarity::Validate() const {
  const std::size_t d = dim();
  if (d == 0 || matrix.size() != d * d) {
    throw std::invalid_argument("similarity: inconsistent dimensions");
  }
  if (!(ratio > 0.0 && ratio < 1.0)) {
    throw std::invalid_argument("similarity: ratio must lie in (0, 1)");
  }
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < d; ++k) {
        s += matrix[k * d + i] * matrix[k * d + j];
      }
      if (std::abs(s - (i == j ? 1.0 : 0.0)) > 1e-10) {
        throw std::invalid_argument("similarity: matrix is not orthogonal");
      }
    }
  }
  if (exact) {
    if (exact->ratio <= Rational(0) || exact->ratio >= Rational(1)) {
      throw std::invalid_argument("similarity: ratio must lie in (0, 1)");
    }
    std::vector<int> p = exact->perm;
    std::sort(p.begin(), p.end());
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (p[i] != static_cast<int>(i)) {
        throw std::invalid_argument("similarity: not a permutation");
      }
    }
  }
}

Ifs::Ifs(std::string name, std::vector<Similarity> maps)
    : name_(std::move(name)), maps_(std::move(maps)) {
  if (maps_.empty()) throw std::invalid_argument("IFS needs at least one map");
  for (const Similarity& s : maps_) {
    s.Validate();
    if (s.dim() != maps_.front().dim()) {
      throw std::invalid_argument("IFS maps differ in dimension");
    }
  }
}

bool Ifs::exact() const {
  return std::all_of(maps_.begin(), maps_.end(),
                     [](const Similarity& s) { return s.exact.has_value(); });
}

std::vector<double> Ifs::Ratios() const {
  std::vector<double> r;
  for (const Similarity& s : maps_) r.push_back(s.ratio);
  return r;
}

double Ifs::MaxRatio() const {
  const std::vector<double> r = Ratios();
  return *std::max_element(r.begin(), r.end());
}

Ifs PresetIfs(const std::string& name) {
  if (name == "cantor") {
    return Ifs(name, {Axis(Rational(1, 3), {Rational(0)}),
                      Axis(Rational(1, 3), {Rational(2, 3)})});
  }
  if (name == "interval") {
    return Ifs(name, {Axis(Rational(1, 2), {Rational(0)}),
                      Axis(Rational(1, 2), {Rational(1, 2)})});
  }
  if (name == "square") {
    const Rational h(1, 2);
    return Ifs(name, {Axis(h, {0, 0}), Axis(h, {h, 0}), Axis(h, {0, h}),
                      Axis(h, {h, h})});
  }
  if (name == "point") return Ifs(name, {Axis(Rational(1, 2), {Rational(0)})});
  const double third = 1.0 / 3.0;
  const double s3 = std::sqrt(3.0);
  if (name == "koch") {
    return Ifs(name, {Planar(third, 0, 0, 0), Planar(third, 60, third, 0),
                      Planar(third, -60, 0.5, s3 / 6.0),
                      Planar(third, 0, 2.0 * third, 0)});
  }
  if (name == "sierpinski") {
    return Ifs(name, {Planar(0.5, 0, 0, 0), Planar(0.5, 0, 0.5, 0),
                      Planar(0.5, 0, 0.25, s3 / 4.0)});
  }
  throw std::invalid_argument("unknown IFS preset: " + name);
}

std::vector<std::string> PresetNames() {
  return {"cantor", "koch", "sierpinski", "interval", "square", "point"};
}

Ball PresetSeed(const std::string& name) {
  const Rational h(1, 2);
  if (name == "cantor" || name == "interval") return Ball(Point::Scalar(h), h);
  if (name == "point") return Ball(Point::Scalar(0), 1);
  if (name == "square") return Ball(Point({h, h}), Rational(442, 625));
  if (name == "koch") return Ball(Point({h, 0}), h);
  if (name == "sierpinski") {
    const double s3 = std::sqrt(3.0);
    return Ball(Point({h, Rational::FromDouble(s3 / 6.0)}),
                Rational::FromDouble(1.0 / s3 * (1.0 + 1e-9)));
  }
  throw std::invalid_argument("unknown IFS preset: " + name);
}

double AttractorApprox::MaxCellDiameter() const {
  double r = 0.0;
  for (const AttractorCell& c : cells) r = std::max(r, c.radius);
  return 2.0 * r;
}

Rational InvariantRadius(const Ifs& ifs, const Ball& seed) {
  if (seed.dim() != ifs.dim()) {
    throw std::invalid_argument("seed dimension differs from the IFS");
  }
  std::vector<double> c(seed.dim());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = seed.center()[i].ToDouble();
  double need = 0.0;
  for (const Similarity& s : ifs.maps()) {
    std::vector<double> diff = s.Apply(c);
    for (std::size_t i = 0; i < c.size(); ++i) diff[i] -= c[i];
    need = std::max(need, Norm(diff) / (1.0 - s.ratio));
  }
  if (!ifs.exact()) {
    if (seed.radius().ToDouble() >= need * (1.0 - 1e-12)) return seed.radius();
    return Rational::FromDouble(need * (1.0 + 1e-9));
  }
  auto invariant = [&](const Rational& r) {
    const Ball b(seed.center(), r);
    for (const Similarity& s : ifs.maps()) {
      const Ball image(s.exact->Apply(seed.center()), s.exact->ratio * r);
      if (!ValidateContainment(image, b)) return false;
    }
    return true;
  };
  if (invariant(seed.radius())) return seed.radius();
  Rational r = Rational::FromDouble(need * (1.0 + 1e-9));
  while (!invariant(r)) r *= Rational(2);
  return r;
}

AttractorApprox IterateAttractor(const Ifs& ifs, int depth, const Ball& seed,
                                 std::size_t max_cells) {
  if (depth < 0) throw std::invalid_argument("depth must be non-negative");
  std::size_t total = 1;
  for (int k = 0; k < depth; ++k) {
    if (total > max_cells / ifs.size()) throw std::length_error("too many cells");
    total *= ifs.size();
  }
  const Ball grown(seed.center(), InvariantRadius(ifs, seed));
  const bool exact = ifs.exact();
  std::vector<double> c(seed.dim());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = grown.center()[i].ToDouble();
  const double r = grown.radius().ToDouble();

  AttractorApprox out{depth, grown, {}};
  AttractorCell root;
  root.map = Similarity::Identity(ifs.dim());
  if (!exact) root.map.exact.reset();
  root.center = c;
  root.radius = r;
  if (exact) root.exact_ball = grown;
  out.cells.push_back(std::move(root));
  for (int k = 0; k < depth; ++k) {
    std::vector<AttractorCell> next;
    next.reserve(out.cells.size() * ifs.size());
    for (const AttractorCell& cell : out.cells) {
      for (std::size_t i = 0; i < ifs.size(); ++i) {
        AttractorCell child;
        child.word = cell.word;
        child.word.push_back(static_cast<int>(i));
        child.map = cell.map.Compose(ifs.maps()[i]);
        child.center = child.map.Apply(c);
        child.radius = child.map.ratio * r;
        if (exact) {
          child.exact_ball = Ball(child.map.exact->Apply(grown.center()),
                                  child.map.exact->ratio * grown.radius());
        }
        next.push_back(std::move(child));
      }
    }
    out.cells = std::move(next);
  }
  return out;
}

double SimilarityDimension(const Ifs& ifs) {
  const std::vector<double> r = ifs.Ratios();
  if (std::all_of(r.begin(), r.end(), [&](double x) { return x == r[0]; })) {
    return std::log(static_cast<double>(r.size())) / std::log(1.0 / r[0]);
  }
  auto f = [&](double s) {
    double t = -1.0;
    for (double x : r) t += std::pow(x, s);
    return t;
  };
  double lo = 0.0;
  double hi = std::log(static_cast<double>(r.size())) / std::log(1.0 / ifs.MaxRatio());
  for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
    const double mid = 0.5 * (lo + hi);
    (f(mid) > 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

OpenSetResult CheckOpenSetCondition(const Ifs& ifs, const OpenBox& candidate) {
  const std::size_t d = ifs.dim();
  if (candidate.lo.size() != d || candidate.hi.size() != d) {
    throw std::invalid_argument("candidate dimension differs from the IFS");
  }
  for (std::size_t i = 0; i < d; ++i) {
    if (candidate.lo[i] >= candidate.hi[i]) {
      throw std::invalid_argument("candidate box is empty");
    }
  }
  // Image boxes: exact for axis-aligned rational maps, otherwise the
  // outward-rounded bounding box of the image of the corners.
  std::vector<OpenBox> images;
  const bool exact = ifs.exact();
  for (const Similarity& s : ifs.maps()) {
    OpenBox img{std::vector<Rational>(d), std::vector<Rational>(d)};
    if (exact) {
      const Point a = s.exact->Apply(Point(candidate.lo));
      const Point b = s.exact->Apply(Point(candidate.hi));
      for (std::size_t i = 0; i < d; ++i) {
        img.lo[i] = std::min(a[i], b[i]);
        img.hi[i] = std::max(a[i], b[i]);
      }
    } else {
      std::vector<double> lo(d, INFINITY), hi(d, -INFINITY);
      for (std::size_t mask = 0; mask < (std::size_t{1} << d); ++mask) {
        std::vector<double> corner(d);
        for (std::size_t i = 0; i < d; ++i) {
          corner[i] = ((mask >> i) & 1 ? candidate.hi[i] : candidate.lo[i])
                          .ToDouble();
        }
        const std::vector<double> y = s.Apply(corner);
        for (std::size_t i = 0; i < d; ++i) {
          lo[i] = std::min(lo[i], y[i]);
          hi[i] = std::max(hi[i], y[i]);
        }
      }
      for (std::size_t i = 0; i < d; ++i) {
        const double pad = 1e-12 * (1.0 + std::abs(lo[i]) + std::abs(hi[i]));
        img.lo[i] = Rational::FromDouble(lo[i] - pad);
        img.hi[i] = Rational::FromDouble(hi[i] + pad);
      }
    }
    images.push_back(std::move(img));
  }
  OpenSetResult result{true, exact};
  for (const OpenBox& img : images) {
    for (std::size_t i = 0; i < d; ++i) {
      if (img.lo[i] < candidate.lo[i] || img.hi[i] > candidate.hi[i]) {
        result.holds = false;
      }
    }
  }
  for (std::size_t a = 0; a < images.size() && result.holds; ++a) {
    for (std::size_t b = a + 1; b < images.size(); ++b) {
      bool separated = false;
      for (std::size_t i = 0; i < d; ++i) {
        if (images[a].hi[i] <= images[b].lo[i] ||
            images[b].hi[i] <= images[a].lo[i]) {
          separated = true;
        }
      }
      if (!separated) {
        result.holds = false;
        break;
      }
    }
  }
  return result;
}

BoxCountFit BoxCountingDimension(const AttractorApprox& approx,
                                 const std::vector<double>& scales) {
  if (scales.size() < 4) throw std::invalid_argument("need at least 4 scales");
  const auto [mn, mx] = std::minmax_element(scales.begin(), scales.end());
  if (!(*mn > 0.0) || *mx / *mn < 100.0) {
    throw std::invalid_argument("scales must span at least two decades");
  }
  if (*mn < approx.MaxCellDiameter()) {
    throw std::invalid_argument("smallest scale is below the cell size");
  }
  BoxCountFit fit;
  fit.scales = scales;
  std::vector<double> xs, ys;
  for (double eps : scales) {
    std::vector<std::vector<long long>> keys;
    keys.reserve(approx.cells.size());
    for (const AttractorCell& cell : approx.cells) {
      std::vector<long long> key(cell.center.size());
      for (std::size_t i = 0; i < key.size(); ++i) {
        key[i] = static_cast<long long>(std::floor(cell.center[i] / eps));
      }
      keys.push_back(std::move(key));
    }
    std::sort(keys.begin(), keys.end());
    const std::size_t n = static_cast<std::size_t>(
        std::unique(keys.begin(), keys.end()) - keys.begin());
    fit.counts.push_back(n);
    xs.push_back(std::log(1.0 / eps));
    ys.push_back(std::log(static_cast<double>(n)));
  }
  const double k = static_cast<double>(xs.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  fit.estimate = (k * sxy - sx * sy) / (k * sxx - sx * sx);
  fit.intercept = (sy - fit.estimate * sx) / k;
  const double mean = sy / k;
  double ss_res = 0, ss_tot = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double res = ys[i] - (fit.intercept + fit.estimate * xs[i]);
    fit.residuals.push_back(res);
    ss_res += res * res;
    ss_tot += (ys[i] - mean) * (ys[i] - mean);
  }
  fit.r_squared = ss_tot > 0 ? 1.0 - ss_res / ss_tot : 1.0;
  return fit;
}

std::vector<double> GeometricScales(double base, int kmin, int kmax) {
  std::vector<double> s;
  for (int k = kmin; k <= kmax; ++k) s.push_back(std::pow(base, -k));
  return s;
}

}  // namespace schmidt
