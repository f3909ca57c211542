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

#ifndef SCHMIDT_LINEAR_FORMS_H_
#define SCHMIDT_LINEAR_FORMS_H_

// Systems of linear forms x -> Ax for an M x N real matrix A: distance to the
// integer lattice, badness by enumeration, the extended vectors A_i and B_j in
// R^L (L = M + N), their minor vectors and determinants, and the stage
// windows of the winning-strategy schedule.

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/float128.hpp>
#include <nlohmann/json.hpp>

#include "schmidt/game.h"
#include "schmidt/rational.h"

namespace schmidt {

using HighFloat = boost::multiprecision::float128;

HighFloat ToHigh(const Rational& r);

class LinearFormsMatrix {
 public:
  // Exact entries, row-major.
  LinearFormsMatrix(int m, int n, std::vector<Rational> entries);
  static LinearFormsMatrix FromHigh(int m, int n, std::vector<HighFloat> v);
  static LinearFormsMatrix FromDoubles(int m, int n,
                                       const std::vector<double>& v);
  static LinearFormsMatrix Zero(int m, int n);
  // 1 x 1 matrix (phi), phi = (1 + sqrt 5) / 2.
  static LinearFormsMatrix GoldenRatio();
  // Array of rows; each entry a "p/q" or decimal string, a JSON number, or
  // one of phi, sqrt2, sqrt3, sqrt5 with an optional leading '-'. Throws
  // std::invalid_argument on malformed input.
  static LinearFormsMatrix FromJson(const nlohmann::json& j);
  // Point of R^H read row-major.
  static LinearFormsMatrix FromPoint(int m, int n, const Point& p);

  int M() const { return m_; }
  int N() const { return n_; }
  int H() const { return m_ * n_; }
  int L() const { return m_ + n_; }
  bool exact() const { return exact_.has_value(); }

  double at(int i, int j) const { return values_[Index(i, j)]; }
  const HighFloat& high(int i, int j) const { return high_[Index(i, j)]; }
  const Rational& exact_at(int i, int j) const;
  const std::vector<double>& values() const { return values_; }

  LinearFormsMatrix Transpose() const;
  nlohmann::json ToJson() const;

 private:
  LinearFormsMatrix(int m, int n);
  std::size_t Index(int i, int j) const {
    return static_cast<std::size_t>(i * n_ + j);
  }

  int m_;
  int n_;
  std::vector<double> values_;
  std::vector<HighFloat> high_;
  std::optional<std::vector<Rational>> exact_;
};

// Sup norm of the componentwise distances to the nearest integers.
double DistToLattice(const std::vector<double>& v);
HighFloat DistToLattice(const std::vector<HighFloat>& v);

struct BadnessStep {
  long cap = 0;
  double value = 0.0;
  HighFloat high_value = 0;
  std::optional<Rational> exact_value;  // rational matrices only
  std::vector<long> witness;            // x attaining the running minimum
};

// Running minimum of |x|^N dist(Ax, Z^M)^M over integer 0 < |x| <= cap, one
// step per cap = 1..cap. Exact for rational matrices, float128 otherwise.
// Throws std::invalid_argument if cap < 1 and std::length_error if the
// number of lattice points exceeds max_points.
std::vector<BadnessStep> BadnessProfile(
    const LinearFormsMatrix& a, long cap,
    std::uint64_t max_points = std::uint64_t{200'000'000});
BadnessStep BadnessInfimum(const LinearFormsMatrix& a, long cap,
                           std::uint64_t max_points =
                               std::uint64_t{200'000'000});

struct ExtendedVectors {
  std::vector<std::vector<double>> rows;  // A_1..A_M in R^L
  std::vector<std::vector<double>> cols;  // B_1..B_N in R^L
};

// A_i = (g_i1, ..., g_iN, e_i), B_j = (g_1j, ..., g_Mj, e_j).
ExtendedVectors MakeExtendedVectors(const LinearFormsMatrix& a);

// X = (x, tail) with x in Z^N and tail in Z^M, or Y = (y, tail) with y in
// Z^M and tail in Z^N.
struct IntegerWitness {
  enum class Side { kX, kY };
  Side side = Side::kX;
  std::vector<long> coords;
};

// (|A_1 . X|, ..., |A_M . X|) or (|B_1 . Y|, ..., |B_N . Y|). Throws
// std::invalid_argument on a length mismatch or a zero designated prefix.
std::vector<double> FormValues(const LinearFormsMatrix& a,
                               const IntegerWitness& w);

enum class MinorSide { kB, kA };  // kA is the primed variant

struct MinorVectorValue {
  int nu = 0;
  std::vector<double> entries;
  double Norm() const;
};

// Throws std::invalid_argument unless Ys are orthonormal in R^L to 1e-10.
void CheckOrthonormal(const std::vector<std::vector<double>>& ys,
                      std::size_t length);

// Absolute values of all nu x nu minors of (B_i . Y_j), rows and columns in
// lexicographic order of their index tuples. nu in {-1, 0} gives (1).
MinorVectorValue MinorVector(const LinearFormsMatrix& a,
                             const std::vector<std::vector<double>>& ys,
                             int nu, MinorSide side = MinorSide::kB);

// Leading nu x nu determinant of (B_i . Y_j) and its gradient in R^H, index
// m * N + i for the entry g_mi.
double DNu(const LinearFormsMatrix& a,
           const std::vector<std::vector<double>>& ys, int nu);
std::vector<double> GradDNu(const LinearFormsMatrix& a,
                            const std::vector<std::vector<double>>& ys,
                            int nu);

// N * max_k binom(N, k).
double MeanValueConstant(int n);

struct MatrixBall {
  LinearFormsMatrix center;
  double radius = 0.0;  // Euclidean, in R^H
};

struct GridExtremes {
  double min_norm = 0.0;
  double max_norm = 0.0;
  std::vector<double> argmin;  // row-major matrix entries
  std::vector<double> argmax;
  std::size_t samples = 0;
};

// |M_nu| over the depth-d grid center + (r / 2^d) k, |k| <= 2^d, inside the
// ball. Grids are nested in d.
GridExtremes MinorGridExtremes(const MatrixBall& ball,
                               const std::vector<std::vector<double>>& ys,
                               int nu, int grid_depth);

struct MinorSup {
  double estimate = 0.0;  // sampled maximum, a lower bound
  double gap = 0.0;       // Lipschitz allowance
  double upper = 0.0;     // estimate + gap
  std::size_t samples = 0;
};

// Grid maximum of |M_nu| on the ball; every ball point is within
// sqrt(H) r / 2^d of a grid point, so the gap is that distance times
// MeanValueConstant(N) times the upper bracket for nu - 1.
MinorSup MinorSupOnBall(const MatrixBall& ball,
                        const std::vector<std::vector<double>>& ys, int nu,
                        int grid_depth);

// Exponents are base R.
struct TheoremSchedule {
  double R = 2.0;
  int M = 1;
  int N = 1;
  Rational lambda;     // N / L
  Rational delta_exp;  // -N L^2
  Rational delta_t_exp;  // -M L^2

  static TheoremSchedule Make(double r, int m, int n);
  int L() const { return M + N; }
  double delta() const;
  double delta_t() const;
  double Value(const Rational& exponent) const;
};

struct WindowRecord {
  double R = 2.0;
  int i = 0;
  Rational x_exp;         // 0 < |x| < R^x_exp
  Rational a_exp;         // |A(X)| < R^a_exp
  Rational y_exp;         // 0 < |y| < R^y_exp
  Rational y_low_exp;     // R^y_low_exp <= |y| in the Cramer step
  Rational b_exp;         // |B(Y)| < R^b_exp
  Rational x_radius_exp;  // R^(-L (lambda + i))
  Rational y_radius_exp;  // R^(-L (1 + i))
  double x_bound = 0, a_bound = 0, y_bound = 0, y_low = 0, b_bound = 0;
  double x_radius = 0, y_radius = 0;
};

// Throws std::invalid_argument if i < 0.
WindowRecord ScheduleWindows(const TheoremSchedule& s, int i);

// First witness in lexicographic order in the X window or the Y
// window, tails at the nearest integers. Throws std::length_error past
// max_points.
std::optional<IntegerWitness> WindowHasSolution(
    const LinearFormsMatrix& a, const WindowRecord& w,
    IntegerWitness::Side side = IntegerWitness::Side::kX,
    std::uint64_t max_points = std::uint64_t{50'000'000});

// Every Y-window witness with the nearest tail, up to sign.
std::vector<IntegerWitness> AllYWindowSolutions(
    const LinearFormsMatrix& a, const WindowRecord& w, bool use_lower = false,
    std::uint64_t max_points = std::uint64_t{50'000'000});

// Rank over Q of the integer vectors.
int IntegerRank(const std::vector<std::vector<long>>& vectors);

// Rank of the span of all Y-window witnesses.
int SolutionSpaceRank(const LinearFormsMatrix& a, const WindowRecord& w,
                      std::uint64_t max_points = std::uint64_t{50'000'000});

struct CramerReport {
  std::size_t witnesses = 0;
  int rank = 0;
  bool premise_holds = false;  // rank <= N, so a basis Y_1..Y_N exists
  double det = 0.0;            // D = det(B_u . Y_v)
  double max_cofactor = 0.0;
  bool cramer_holds = true;    // |t_v D| <= N b max_u |D_uv| for all v
  bool last_holds = true;      // |D| <= N sqrt(N) R^(-L(1+i)) max |D_uv|
  double worst_cramer_slack = 0.0;  // max of lhs / rhs over witnesses
};

// Finds the witnesses with R^y_low <= |y| < R^y_exp and |B(Y)| < R^b_exp,
// takes an orthonormal basis of their span, and evaluates both inequalities
// of the Cramer step on each witness.
CramerReport CramerCheck(const LinearFormsMatrix& a, const TheoremSchedule& s,
                         int i,
                         std::uint64_t max_points = std::uint64_t{50'000'000});

// delta^L R^(-NM - M^2).
double FinalBadnessBound(const TheoremSchedule& s);
Rational FinalBadnessExponent(const TheoremSchedule& s);

// Constants of the induction. The existential ones are user-supplied.
struct TheoremConstants {
  int M = 1;
  int N = 1;
  double sigma = 0.0;
  double psi = 0.0;
  double epsilon0 = 0.0;
  double alpha1 = 0.0;
  double alpha2 = 0.0;
  double C1 = 0.0, C2 = 0.0, C3_min = 0.0, C4 = 0.0;
  std::vector<double> mu;  // mu_0..mu_N when known

  // (eps0 / 2)^nu psi.
  double PsiNu(int nu) const;
  // Strict upper bound on sqrt(alpha1):
  // min{1/2, psi_N eps0 / (4 N max binom), C3_min, (15/32) C4 / psi}.
  double SqrtAlpha1Bound() const;
  bool Alpha1Valid() const { return std::sqrt(alpha1) < SqrtAlpha1Bound(); }
  nlohmann::json ToJson() const;
};

// 3 max |X| over the given points of the support.
double SigmaFromPoints(const std::vector<std::vector<double>>& points);

// L sqrt(L) (2 / eps0)^L, the psi used for the final corollary.
double CorollaryPsi(int l, double epsilon0);

}  // namespace schmidt

#endif  // SCHMIDT_LINEAR_FORMS_H_
