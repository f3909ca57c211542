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

#ifndef SCHMIDT_FRACTAL_IFS_H_
#define SCHMIDT_FRACTAL_IFS_H_

// Iterated function systems of contracting similarities x -> r*Theta*x + y,
// their attractors, the open set condition, and dimension estimates.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "schmidt/game.h"
#include "schmidt/rational.h"

namespace schmidt {

// Similarity with rational ratio, a signed permutation matrix, and a rational
// translation. (Theta x)[perm[j]] = sign[j] * x[j].
struct ExactSimilarity {
  Rational ratio;
  std::vector<int> perm;
  std::vector<int> sign;
  std::vector<Rational> translation;

  std::size_t dim() const { return perm.size(); }
  Point Apply(const Point& x) const;
  Point InverseApply(const Point& y) const;
  Point FixedPoint() const;
  // (*this) o inner.
  ExactSimilarity Compose(const ExactSimilarity& inner) const;
  static ExactSimilarity Identity(std::size_t dim);
};

struct Similarity {
  double ratio = 1.0;
  std::vector<double> matrix;  // row-major d x d, orthogonal
  std::vector<double> translation;
  std::optional<ExactSimilarity> exact;

  Similarity() = default;
  Similarity(double ratio, std::vector<double> matrix,
             std::vector<double> translation);
  explicit Similarity(ExactSimilarity e);

  std::size_t dim() const { return translation.size(); }
  std::vector<double> Apply(const std::vector<double>& x) const;
  Similarity Compose(const Similarity& inner) const;
  static Similarity Identity(std::size_t dim);
  // Throws std::invalid_argument unless 0 < ratio < 1 and Theta^T Theta = I
  // to 1e-10.
  void Validate() const;
};

class Ifs {
 public:
  Ifs(std::string name, std::vector<Similarity> maps);

  const std::string& name() const { return name_; }
  const std::vector<Similarity>& maps() const { return maps_; }
  std::size_t dim() const { return maps_.front().dim(); }
  std::size_t size() const { return maps_.size(); }
  bool exact() const;
  std::vector<double> Ratios() const;
  double MaxRatio() const;

 private:
  std::string name_;
  std::vector<Similarity> maps_;
};

// cantor, koch, sierpinski (equilateral), interval (dyadic halves of [0,1]),
// square (four quarters of [0,1]^2), point (single map x/2).
Ifs PresetIfs(const std::string& name);
std::vector<std::string> PresetNames();
// A ball that contains its images under every map of the preset.
Ball PresetSeed(const std::string& name);

struct AttractorCell {
  std::vector<int> word;
  Similarity map;  // composition phi_{w1} o ... o phi_{wn}
  std::vector<double> center;
  double radius = 0.0;
  std::optional<Ball> exact_ball;  // when both the IFS and the seed are exact
};

struct AttractorApprox {
  int depth = 0;
  Ball seed;
  std::vector<AttractorCell> cells;

  double MaxCellDiameter() const;
};

// m^depth cells phi_w(seed), lexicographic in w. The seed is enlarged when it
// does not contain its own images. Throws std::length_error above max_cells.
AttractorApprox IterateAttractor(const Ifs& ifs, int depth, const Ball& seed,
                                 std::size_t max_cells = std::size_t{1} << 22);

// Smallest radius r' >= seed radius with phi_i(B(c, r')) inside B(c, r') for
// every map; exact when the IFS is exact.
Rational InvariantRadius(const Ifs& ifs, const Ball& seed);

// Unique s with sum r_i^s = 1.
double SimilarityDimension(const Ifs& ifs);

struct OpenBox {
  std::vector<Rational> lo;
  std::vector<Rational> hi;
};

struct OpenSetResult {
  bool holds = false;
  // False when the check used outward-rounded floating point; a false
  // `holds` may then be a false negative.
  bool exact = false;
};

OpenSetResult CheckOpenSetCondition(const Ifs& ifs, const OpenBox& candidate);

struct BoxCountFit {
  double estimate = 0.0;  // slope of log N(eps) against log(1/eps)
  double intercept = 0.0;
  double r_squared = 0.0;
  std::vector<double> scales;
  std::vector<std::size_t> counts;
  std::vector<double> residuals;
};

// Counts grid boxes of side eps that contain a cell center. Requires at least
// four scales, a max/min ratio of at least 100, and every scale at least the
// largest cell diameter; throws std::invalid_argument otherwise.
BoxCountFit BoxCountingDimension(const AttractorApprox& approx,
                                 const std::vector<double>& scales);

// base^-k for k = kmin..kmax.
std::vector<double> GeometricScales(double base, int kmin, int kmax);

}  // namespace schmidt

#endif  // SCHMIDT_FRACTAL_IFS_H_
