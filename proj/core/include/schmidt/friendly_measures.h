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

#ifndef SCHMIDT_FRIENDLY_MEASURES_H_
#define SCHMIDT_FRIENDLY_MEASURES_H_

// Measures defined on a tree of cells: the continued fraction measure that
// gives each depth-n cylinder over a finite digit set equal mass, and
// self-similar measures of an IFS. Ball masses are bracketed exactly from
// cell boxes, which feed sampled checks of the doubling and decay
// conditions and of polynomial sublevel bounds.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "schmidt/fractal_ifs.h"
#include "schmidt/game.h"
#include "schmidt/rational.h"

namespace schmidt {

struct MeasureCell {
  std::vector<int> word;  // child indices from the root
  std::vector<Rational> lo;  // closed box containing the cell's support
  std::vector<Rational> hi;
  Rational mass;
  // Continued fraction cells: p_n, q_n, p_{n-1}, q_{n-1}.
  BigInt p, q, pp, qp;
  // Self-similar cells: composed map phi_w.
  Similarity map;
};

class CylinderMeasure {
 public:
  // Cylinders of [0; a_1, a_2, ...] with digits from `alphabet`; weights
  // default to equal (2^-n per depth-n cylinder for two digits).
  static CylinderMeasure ContinuedFraction(std::vector<long> alphabet = {1, 3},
                                           std::vector<Rational> weights = {});
  // Mass of phi_w(K) is the product of the weights along w. Default weights
  // are r_i^s for the similarity dimension s, exact when the ratios agree.
  static CylinderMeasure SelfSimilar(Ifs ifs, const Ball& seed,
                                     std::vector<Rational> weights = {});
  // cf13, cantor, sierpinski, koch, lebesgue (halving [0, 1]), point.
  static CylinderMeasure Preset(const std::string& name);

  const std::string& name() const { return name_; }
  std::size_t dim() const { return dim_; }
  std::size_t branching() const { return weights_.size(); }
  const std::vector<Rational>& weights() const { return weights_; }
  int depth_cap() const { return depth_cap_; }
  // True when the support is a single point.
  bool single_point() const { return weights_.size() == 1; }

  MeasureCell Root() const;
  std::vector<MeasureCell> Children(const MeasureCell& cell) const;
  std::vector<MeasureCell> CellsAtDepth(int depth) const;
  // A point of the cell: exact support point for exact IFS cells, the box
  // midpoint otherwise.
  Point Representative(const MeasureCell& cell) const;

 private:
  CylinderMeasure() = default;

  std::string name_;
  std::size_t dim_ = 1;
  int depth_cap_ = 64;
  std::vector<Rational> weights_;
  std::vector<long> alphabet_;  // continued fraction measures only
  std::optional<Ifs> ifs_;
  std::optional<Ball> seed_;
  std::optional<Point> anchor_;  // exact fixed point of the first map
};

struct MassBracket {
  Rational lower;
  Rational upper;
};

// lower sums cells whose box lies inside the ball, upper adds cells whose box
// meets it; cells are refined until `depth`. Throws std::invalid_argument when
// depth exceeds the measure's cap.
MassBracket BallMass(const CylinderMeasure& m, const Ball& ball, int depth);
MassBracket BoxMass(const CylinderMeasure& m, const std::vector<Rational>& lo,
                    const std::vector<Rational>& hi, int depth);

// `count` cell representatives at `sample_depth`, drawn with a seeded
// generator; identical arguments give identical samples.
std::vector<Point> SampleCenters(const CylinderMeasure& m, std::size_t count,
                                 int sample_depth, std::uint64_t seed);

struct DoublingReport {
  double estimate = 0.0;  // min over samples of lower(rho/2) / upper(rho)
  std::vector<double> per_scale;  // same minimum for each scale
  std::size_t samples = 0;
  Point worst_center;
  Rational worst_scale;
  // max / min of per_scale; small values mean the estimate is stable.
  double spread = 0.0;
};

// Throws std::invalid_argument for a single-point measure or empty inputs and
// std::runtime_error when a bracket is degenerate (lower bound 0).
DoublingReport DoublingEstimate(const CylinderMeasure& m,
                                const std::vector<Point>& centers,
                                const std::vector<Rational>& scales,
                                int depth);

enum class DecayScale {
  kEqual,           // tau(B(x, rho) cap P_eps) against tau(B(x, rho))
  kSupOverSmaller,  // sup over r in rho * 3^-j, j >= 0, of tau(B(x, r) cap P_eps)
};

struct DecayRow {
  Rational rho;
  Rational eps_over_rho;
  double worst_ratio = 0.0;
};

struct DecayReport {
  std::vector<DecayRow> rows;
  std::vector<double> eps_levels;     // eps / rho
  std::vector<double> worst_by_level; // max ratio over samples and scales
  double a = 0.0;                     // fitted exponent
  double C = 0.0;
  double r_squared = 0.0;
  std::vector<double> residuals;
  std::size_t degenerate = 0;  // samples skipped for a zero lower bracket
};

// One-dimensional measures only: hyperplanes are points p. For each center x
// and scale rho the points tried are x and the ends of the deepest cell
// containing x that still reaches across B(x, rho); eps runs over
// rho, rho/3, ..., rho/3^(levels-1).
DecayReport DecayEstimate(const CylinderMeasure& m,
                          const std::vector<Point>& centers,
                          const std::vector<Rational>& scales, int depth,
                          int levels = 5,
                          DecayScale reading = DecayScale::kEqual);

// Polynomial with rational coefficients in `dim` variables.
struct Polynomial {
  std::size_t dim = 1;
  std::vector<std::pair<std::vector<int>, Rational>> terms;  // exponents, coeff

  static Polynomial Constant(std::size_t dim, Rational c);
  static Polynomial Coordinate(std::size_t dim, std::size_t i);  // x_i
  int Degree() const;
  Rational Eval(const Point& x) const;
  // Enclosure of f over the box by interval arithmetic.
  std::pair<Rational, Rational> Range(const std::vector<Rational>& lo,
                                      const std::vector<Rational>& hi) const;
};

struct SublevelReport {
  double ratio_upper = 0.0;  // upper(S) / lower(B)
  double ratio_lower = 0.0;  // lower(S) / upper(B)
  MassBracket sublevel;
  MassBracket ball;
  double sup_norm = 0.0;  // sampled sup of |f| over the ball
};

// S = {x in ball : |f(x)| < eps}. Throws std::invalid_argument when the
// sampled sup norm is 0.
SublevelReport SublevelRatio(const CylinderMeasure& m, const Polynomial& f,
                             const Ball& ball, const Rational& eps, int depth);

// (1 / (2K))^(1/delta) (1 - 1e-6), so that K eps0^delta < 1/2.
double Epsilon0(double K, double delta);

}  // namespace schmidt

#endif  // SCHMIDT_FRIENDLY_MEASURES_H_
