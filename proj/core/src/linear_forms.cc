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

#include "schmidt/linear_forms.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace schmidt {
namespace {

using Vec = std::vector<double>;
using Mat = std::vector<Vec>;

double Dot(const Vec& a, const Vec& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double Det(Mat a) {
  const std::size_t n = a.size();
  double det = 1.0;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    for (std::size_t r = c + 1; r < n; ++r) {
      if (std::abs(a[r][c]) > std::abs(a[p][c])) p = r;
    }
    if (a[p][c] == 0.0) return 0.0;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      const double f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return det;
}

// Cofactor matrix of a square matrix.
Mat Cofactors(const Mat& a) {
  const std::size_t n = a.size();
  Mat cof(n, Vec(n, 1.0));
  if (n == 1) return cof;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Mat sub;
      for (std::size_t r = 0; r < n; ++r) {
        if (r == i) continue;
        Vec row;
        for (std::size_t c = 0; c < n; ++c) {
          if (c != j) row.push_back(a[r][c]);
        }
        sub.push_back(std::move(row));
      }
      cof[i][j] = ((i + j) % 2 ? -1.0 : 1.0) * Det(std::move(sub));
    }
  }
  return cof;
}

std::vector<std::vector<int>> Combinations(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> c(static_cast<std::size_t>(k));
  std::iota(c.begin(), c.end(), 0);
  while (true) {
    out.push_back(c);
    int i = k - 1;
    while (i >= 0 && c[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++c[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) {
      c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return out;
}

double Binomial(int n, int k) {
  double b = 1.0;
  for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

// Extended vectors straight from row-major entries.
ExtendedVectors Extend(int m, int n, const Vec& g) {
  const int l = m + n;
  ExtendedVectors ev;
  for (int i = 0; i < m; ++i) {
    Vec a(static_cast<std::size_t>(l), 0.0);
    for (int j = 0; j < n; ++j) a[static_cast<std::size_t>(j)] = g[static_cast<std::size_t>(i * n + j)];
    a[static_cast<std::size_t>(n + i)] = 1.0;
    ev.rows.push_back(std::move(a));
  }
  for (int j = 0; j < n; ++j) {
    Vec b(static_cast<std::size_t>(l), 0.0);
    for (int i = 0; i < m; ++i) b[static_cast<std::size_t>(i)] = g[static_cast<std::size_t>(i * n + j)];
    b[static_cast<std::size_t>(m + j)] = 1.0;
    ev.cols.push_back(std::move(b));
  }
  return ev;
}

MinorVectorValue MinorsOf(const Mat& vecs, const Mat& ys, int nu) {
  MinorVectorValue out;
  out.nu = nu;
  if (nu <= 0) {
    out.entries = {1.0};
    return out;
  }
  const int rows = static_cast<int>(vecs.size());
  const int cols = static_cast<int>(ys.size());
  if (nu > rows || nu > cols) throw std::invalid_argument("nu too large");
  Mat g(vecs.size(), Vec(ys.size()));
  for (std::size_t i = 0; i < vecs.size(); ++i) {
    for (std::size_t j = 0; j < ys.size(); ++j) g[i][j] = Dot(vecs[i], ys[j]);
  }
  const auto rc = Combinations(rows, nu);
  const auto cc = Combinations(cols, nu);
  for (const auto& r : rc) {
    for (const auto& c : cc) {
      Mat sub(static_cast<std::size_t>(nu), Vec(static_cast<std::size_t>(nu)));
      for (int a = 0; a < nu; ++a) {
        for (int b = 0; b < nu; ++b) {
          sub[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
              g[static_cast<std::size_t>(r[static_cast<std::size_t>(a)])]
               [static_cast<std::size_t>(c[static_cast<std::size_t>(b)])];
        }
      }
      out.entries.push_back(std::abs(Det(std::move(sub))));
    }
  }
  return out;
}

// Leading block (B_i . Y_j), i, j < nu.
Mat LeadingBlock(const ExtendedVectors& ev, const Mat& ys, int nu) {
  Mat g(static_cast<std::size_t>(nu), Vec(static_cast<std::size_t>(nu)));
  for (int i = 0; i < nu; ++i) {
    for (int j = 0; j < nu; ++j) {
      g[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          Dot(ev.cols[static_cast<std::size_t>(i)], ys[static_cast<std::size_t>(j)]);
    }
  }
  return g;
}

void CheckNu(const LinearFormsMatrix& a, const Mat& ys, int nu) {
  if (nu < 1 || nu > a.N()) throw std::invalid_argument("need 1 <= nu <= N");
  if (static_cast<int>(ys.size()) < nu) {
    throw std::invalid_argument("fewer than nu Y vectors");
  }
  CheckOrthonormal(ys, static_cast<std::size_t>(a.L()));
}

HighFloat HighPow(double r, const Rational& e) {
  return pow(HighFloat(r), ToHigh(e));
}

// Largest integer strictly below b (b > 0), capped.
long StrictFloor(const HighFloat& b) {
  if (b > HighFloat(std::numeric_limits<long>::max() / 4)) {
    throw std::length_error("window too large");
  }
  const HighFloat c = ceil(b);
  return static_cast<long>(c) - 1;
}

std::uint64_t BoxCount(long k, int n) {
  // Lattice points in the half box |x| <= k, x != 0, first nonzero positive.
  long double total = 1.0L;
  for (int i = 0; i < n; ++i) total *= static_cast<long double>(2 * k + 1);
  total = (total - 1.0L) / 2.0L;
  if (total > 1.8e19L) return std::numeric_limits<std::uint64_t>::max();
  return static_cast<std::uint64_t>(total);
}

// Calls visit(x, |x|) for every x in Z^n with lo_norm <= |x| <= k whose first
// nonzero coordinate is positive, in lexicographic order. Stops early when
// visit returns false.
void ForHalfSpace(int n, long lo_norm, long k,
                  const std::function<bool(const std::vector<long>&, long)>&
                      visit) {
  if (k < 1) return;
  std::vector<long> x(static_cast<std::size_t>(n), -k);
  x[0] = 0;
  while (true) {
    long norm = 0;
    std::size_t first = x.size();
    for (std::size_t i = 0; i < x.size(); ++i) {
      norm = std::max(norm, std::labs(x[i]));
      if (first == x.size() && x[i] != 0) first = i;
    }
    if (first < x.size() && x[first] > 0 && norm >= lo_norm) {
      if (!visit(x, norm)) return;
    }
    std::size_t i = x.size();
    while (true) {
      if (i == 0) return;
      --i;
      if (x[i] < k) {
        ++x[i];
        break;
      }
      x[i] = i == 0 ? 0 : -k;
    }
  }
}

}  // namespace

HighFloat ToHigh(const Rational& r) {
  return HighFloat(r.num().get_str().c_str()) /
         HighFloat(r.den().get_str().c_str());
}

LinearFormsMatrix::LinearFormsMatrix(int m, int n) : m_(m), n_(n) {
  if (m < 1 || n < 1) throw std::invalid_argument("M and N must be >= 1");
}

LinearFormsMatrix::LinearFormsMatrix(int m, int n, std::vector<Rational> e)
    : LinearFormsMatrix(m, n) {
  if (e.size() != static_cast<std::size_t>(m * n)) {
    throw std::invalid_argument("matrix needs M*N entries");
  }
  for (const Rational& r : e) {
    values_.push_back(r.ToDouble());
    high_.push_back(ToHigh(r));
  }
  exact_ = std::move(e);
}

LinearFormsMatrix LinearFormsMatrix::FromHigh(int m, int n,
                                              std::vector<HighFloat> v) {
  LinearFormsMatrix a(m, n);
  if (v.size() != static_cast<std::size_t>(m * n)) {
    throw std::invalid_argument("matrix needs M*N entries");
  }
  for (const HighFloat& h : v) a.values_.push_back(static_cast<double>(h));
  a.high_ = std::move(v);
  return a;
}

LinearFormsMatrix LinearFormsMatrix::FromDoubles(int m, int n, const Vec& v) {
  std::vector<HighFloat> h(v.begin(), v.end());
  return FromHigh(m, n, std::move(h));
}

LinearFormsMatrix LinearFormsMatrix::Zero(int m, int n) {
  return LinearFormsMatrix(m, n, std::vector<Rational>(static_cast<std::size_t>(m * n)));
}

LinearFormsMatrix LinearFormsMatrix::GoldenRatio() {
  return FromHigh(1, 1, {(HighFloat(1) + sqrt(HighFloat(5))) / 2});
}

LinearFormsMatrix LinearFormsMatrix::FromJson(const nlohmann::json& j) {
  if (!j.is_array() || j.empty() || !j[0].is_array() || j[0].empty()) {
    throw std::invalid_argument("matrix must be a non-empty array of rows");
  }
  const int m = static_cast<int>(j.size());
  const int n = static_cast<int>(j[0].size());
  std::vector<Rational> exact;
  std::vector<HighFloat> high;
  bool all_exact = true;
  for (const auto& row : j) {
    if (!row.is_array() || static_cast<int>(row.size()) != n) {
      throw std::invalid_argument("matrix rows differ in length");
    }
    for (const auto& e : row) {
      if (e.is_number_integer()) {
        exact.emplace_back(e.get<std::int64_t>());
      } else if (e.is_number()) {
        exact.push_back(Rational::FromDouble(e.get<double>()));
      } else if (e.is_string()) {
        std::string s = e.get<std::string>();
        const bool neg = !s.empty() && s[0] == '-';
        const std::string name = neg ? s.substr(1) : s;
        HighFloat v;
        bool named = true;
        if (name == "phi") {
          v = (HighFloat(1) + sqrt(HighFloat(5))) / 2;
        } else if (name == "sqrt2") {
          v = sqrt(HighFloat(2));
        } else if (name == "sqrt3") {
          v = sqrt(HighFloat(3));
        } else if (name == "sqrt5") {
          v = sqrt(HighFloat(5));
        } else {
          named = false;
        }
        if (named) {
          all_exact = false;
          high.push_back(neg ? -v : v);
          exact.emplace_back(0);
          continue;
        }
        exact.push_back(Rational::Parse(s));
      } else {
        throw std::invalid_argument("matrix entries must be strings or numbers");
      }
      high.push_back(ToHigh(exact.back()));
    }
  }
  if (all_exact) return LinearFormsMatrix(m, n, std::move(exact));
  return FromHigh(m, n, std::move(high));
}

LinearFormsMatrix LinearFormsMatrix::FromPoint(int m, int n, const Point& p) {
  if (p.dim() != static_cast<std::size_t>(m * n)) {
    throw std::invalid_argument("point dimension differs from M*N");
  }
  return LinearFormsMatrix(m, n, p.coords);
}

const Rational& LinearFormsMatrix::exact_at(int i, int j) const {
  if (!exact_) throw std::logic_error("matrix has no exact entries");
  return (*exact_)[Index(i, j)];
}

LinearFormsMatrix LinearFormsMatrix::Transpose() const {
  if (exact_) {
    std::vector<Rational> t;
    for (int j = 0; j < n_; ++j) {
      for (int i = 0; i < m_; ++i) t.push_back(exact_at(i, j));
    }
    return LinearFormsMatrix(n_, m_, std::move(t));
  }
  std::vector<HighFloat> t;
  for (int j = 0; j < n_; ++j) {
    for (int i = 0; i < m_; ++i) t.push_back(high(i, j));
  }
  return FromHigh(n_, m_, std::move(t));
}

nlohmann::json LinearFormsMatrix::ToJson() const {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < m_; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < n_; ++j) {
      if (exact_) {
        row.push_back(exact_at(i, j).ToString());
      } else {
        std::ostringstream os;
        os << std::setprecision(36) << high(i, j);
        row.push_back(os.str());
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

double DistToLattice(const Vec& v) {
  double d = 0.0;
  for (double x : v) d = std::max(d, std::abs(x - std::round(x)));
  return d;
}

HighFloat DistToLattice(const std::vector<HighFloat>& v) {
  HighFloat d = 0;
  for (const HighFloat& x : v) {
    const HighFloat e = abs(x - round(x));
    if (e > d) d = e;
  }
  return d;
}

std::vector<BadnessStep> BadnessProfile(const LinearFormsMatrix& a, long cap,
                                        std::uint64_t max_points) {
  if (cap < 1) throw std::invalid_argument("cap must be >= 1");
  const int m = a.M();
  const int n = a.N();
  if (BoxCount(cap, n) > max_points) {
    throw std::length_error("badness enumeration exceeds the point limit");
  }
  const std::size_t shells = static_cast<std::size_t>(cap) + 1;
  std::vector<BadnessStep> best(shells);
  std::vector<bool> seen(shells, false);

  // Exact path: common denominator D, integer numerators, values compared as
  // k^N d^M with the fixed denominator D^M.
  bool int_path = false;
  long den = 1;
  std::vector<long> nums;
  if (a.exact()) {
    BigInt d = 1;
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < n; ++j) d = lcm(d, a.exact_at(i, j).den());
    }
    const BigInt limit = BigInt(1) << 62;
    bool fits = d < limit;
    BigInt row_max = 0;
    std::vector<BigInt> bn;
    for (int i = 0; i < m && fits; ++i) {
      BigInt row = 0;
      for (int j = 0; j < n; ++j) {
        const Rational v = a.exact_at(i, j) * Rational(d);
        bn.push_back(v.num());
        row += abs(v.num());
      }
      row_max = std::max(row_max, row);
    }
    fits = fits && row_max * cap < limit;
    if (fits) {
      int_path = true;
      den = d.get_si();
      for (const BigInt& b : bn) nums.push_back(b.get_si());
    } else {
      throw std::length_error("rational entries too large for exact search");
    }
  }

  // k^N d^M fits in 128 bits when the bit lengths allow it.
  auto bits = [](long v) {
    int b = 0;
    while (v > 0) {
      ++b;
      v >>= 1;
    }
    return b;
  };
  const bool small = n * bits(cap) + m * bits(den) <= 124;
  std::vector<__int128> best_small(small && int_path ? shells : 0);
  std::vector<BigInt> best_num(shells);
  ForHalfSpace(n, 1, cap, [&](const std::vector<long>& x, long k) {
    const std::size_t s = static_cast<std::size_t>(k);
    if (int_path) {
      long dmax = 0;
      for (int i = 0; i < m; ++i) {
        long acc = 0;
        for (int j = 0; j < n; ++j) {
          acc += nums[static_cast<std::size_t>(i * n + j)] * x[static_cast<std::size_t>(j)];
        }
        long r = acc % den;
        if (r < 0) r += den;
        dmax = std::max(dmax, std::min(r, den - r));
      }
      if (small) {
        __int128 v = 1;
        for (int t = 0; t < n; ++t) v *= k;
        for (int t = 0; t < m; ++t) v *= dmax;
        if (!seen[s] || v < best_small[s]) {
          seen[s] = true;
          best_small[s] = v;
          best[s].witness = x;
        }
        return true;
      }
      BigInt v = 1;
      for (int t = 0; t < n; ++t) v *= k;
      for (int t = 0; t < m; ++t) v *= dmax;
      if (!seen[s] || v < best_num[s]) {
        seen[s] = true;
        best_num[s] = v;
        best[s].witness = x;
      }
    } else {
      HighFloat dmax = 0;
      for (int i = 0; i < m; ++i) {
        HighFloat acc = 0;
        for (int j = 0; j < n; ++j) acc += a.high(i, j) * x[static_cast<std::size_t>(j)];
        const HighFloat e = abs(acc - round(acc));
        if (e > dmax) dmax = e;
      }
      const HighFloat v = pow(HighFloat(k), n) * pow(dmax, m);
      if (!seen[s] || v < best[s].high_value) {
        seen[s] = true;
        best[s].high_value = v;
        best[s].witness = x;
      }
    }
    return true;
  });

  std::vector<BadnessStep> out;
  BadnessStep running;
  bool have = false;
  BigInt running_num;
  const BigInt den_pow = [&] {
    BigInt p = 1;
    for (int t = 0; t < m; ++t) p *= den;
    return p;
  }();
  for (long k = 1; k <= cap; ++k) {
    const std::size_t s = static_cast<std::size_t>(k);
    if (int_path && small) {
      const unsigned long hi =
          static_cast<unsigned long>(best_small[s] >> 64);
      const unsigned long lo =
          static_cast<unsigned long>(best_small[s]);
      BigInt v = hi;
      v <<= 64;
      v += lo;
      best_num[s] = v;
    }
    if (int_path) {
      if (!have || best_num[s] < running_num) {
        running_num = best_num[s];
        running.witness = best[s].witness;
        running.exact_value = Rational(running_num, den_pow);
        running.high_value = ToHigh(*running.exact_value);
        running.value = running.exact_value->ToDouble();
      }
    } else if (!have || best[s].high_value < running.high_value) {
      running.high_value = best[s].high_value;
      running.value = static_cast<double>(running.high_value);
      running.witness = best[s].witness;
    }
    have = true;
    running.cap = k;
    out.push_back(running);
  }
  return out;
}

BadnessStep BadnessInfimum(const LinearFormsMatrix& a, long cap,
                           std::uint64_t max_points) {
  return BadnessProfile(a, cap, max_points).back();
}

ExtendedVectors MakeExtendedVectors(const LinearFormsMatrix& a) {
  return Extend(a.M(), a.N(), a.values());
}

std::vector<double> FormValues(const LinearFormsMatrix& a,
                               const IntegerWitness& w) {
  if (w.coords.size() != static_cast<std::size_t>(a.L())) {
    throw std::invalid_argument("witness length differs from L");
  }
  const bool x_side = w.side == IntegerWitness::Side::kX;
  const int prefix = x_side ? a.N() : a.M();
  if (std::all_of(w.coords.begin(), w.coords.begin() + prefix,
                  [](long c) { return c == 0; })) {
    throw std::invalid_argument("witness prefix must be nonzero");
  }
  std::vector<double> out(static_cast<std::size_t>(x_side ? a.M() : a.N()));
  for (std::size_t r = 0; r < out.size(); ++r) {
    HighFloat s = 0;
    const int i = static_cast<int>(r);
    if (x_side) {
      for (int j = 0; j < a.N(); ++j) s += a.high(i, j) * w.coords[static_cast<std::size_t>(j)];
      s += w.coords[static_cast<std::size_t>(a.N() + i)];
    } else {
      for (int k = 0; k < a.M(); ++k) s += a.high(k, i) * w.coords[static_cast<std::size_t>(k)];
      s += w.coords[static_cast<std::size_t>(a.M() + i)];
    }
    out[r] = static_cast<double>(abs(s));
  }
  return out;
}

double MinorVectorValue::Norm() const {
  double s = 0.0;
  for (double e : entries) s += e * e;
  return std::sqrt(s);
}

void CheckOrthonormal(const Mat& ys, std::size_t length) {
  for (std::size_t i = 0; i < ys.size(); ++i) {
    if (ys[i].size() != length) {
      throw std::invalid_argument("Y vector has the wrong length");
    }
    for (std::size_t j = i; j < ys.size(); ++j) {
      const double target = i == j ? 1.0 : 0.0;
      if (std::abs(Dot(ys[i], ys[j]) - target) > 1e-10) {
        throw std::invalid_argument("Y vectors are not orthonormal");
      }
    }
  }
}

MinorVectorValue MinorVector(const LinearFormsMatrix& a, const Mat& ys,
                             int nu, MinorSide side) {
  if (nu < -1) throw std::invalid_argument("nu must be >= -1");
  CheckOrthonormal(ys, static_cast<std::size_t>(a.L()));
  const int top = side == MinorSide::kB ? a.N() : a.M();
  if (nu > top) throw std::invalid_argument("nu exceeds the side dimension");
  const ExtendedVectors ev = MakeExtendedVectors(a);
  return MinorsOf(side == MinorSide::kB ? ev.cols : ev.rows, ys, nu);
}

double DNu(const LinearFormsMatrix& a, const Mat& ys, int nu) {
  CheckNu(a, ys, nu);
  return Det(LeadingBlock(MakeExtendedVectors(a), ys, nu));
}

std::vector<double> GradDNu(const LinearFormsMatrix& a, const Mat& ys,
                            int nu) {
  CheckNu(a, ys, nu);
  const Mat cof = Cofactors(LeadingBlock(MakeExtendedVectors(a), ys, nu));
  std::vector<double> grad(static_cast<std::size_t>(a.H()), 0.0);
  for (int m = 0; m < a.M(); ++m) {
    for (int i = 0; i < nu; ++i) {
      double s = 0.0;
      for (int j = 0; j < nu; ++j) {
        s += cof[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
             ys[static_cast<std::size_t>(j)][static_cast<std::size_t>(m)];
      }
      grad[static_cast<std::size_t>(m * a.N() + i)] = s;
    }
  }
  return grad;
}

double MeanValueConstant(int n) {
  double best = 0.0;
  for (int k = 0; k <= n; ++k) best = std::max(best, Binomial(n, k));
  return n * best;
}

GridExtremes MinorGridExtremes(const MatrixBall& ball, const Mat& ys, int nu,
                               int grid_depth) {
  if (grid_depth < 0) throw std::invalid_argument("grid depth must be >= 0");
  if (ball.radius < 0.0) throw std::invalid_argument("negative radius");
  const LinearFormsMatrix& c = ball.center;
  CheckOrthonormal(ys, static_cast<std::size_t>(c.L()));
  const int h = c.H();
  const long side = ball.radius > 0.0 ? (1L << grid_depth) : 0;
  const double step = side > 0 ? ball.radius / static_cast<double>(side) : 0.0;
  const long r2 = side * side;
  GridExtremes out;
  std::vector<long> k(static_cast<std::size_t>(h), -side);
  while (true) {
    long norm2 = 0;
    for (long v : k) norm2 += v * v;
    if (norm2 <= r2) {
      Vec g = c.values();
      for (int t = 0; t < h; ++t) g[static_cast<std::size_t>(t)] += step * k[static_cast<std::size_t>(t)];
      const ExtendedVectors ev = Extend(c.M(), c.N(), g);
      const double v = MinorsOf(ev.cols, ys, nu).Norm();
      if (out.samples == 0 || v < out.min_norm) {
        out.min_norm = v;
        out.argmin = g;
      }
      if (out.samples == 0 || v > out.max_norm) {
        out.max_norm = v;
        out.argmax = g;
      }
      ++out.samples;
    }
    int t = h - 1;
    while (t >= 0 && k[static_cast<std::size_t>(t)] == side) {
      k[static_cast<std::size_t>(t)] = -side;
      --t;
    }
    if (t < 0) break;
    ++k[static_cast<std::size_t>(t)];
  }
  return out;
}

MinorSup MinorSupOnBall(const MatrixBall& ball, const Mat& ys, int nu,
                        int grid_depth) {
  if (nu <= 0) return {1.0, 0.0, 1.0, 1};
  const GridExtremes ex = MinorGridExtremes(ball, ys, nu, grid_depth);
  MinorSup out;
  out.estimate = ex.max_norm;
  out.samples = ex.samples;
  if (ball.radius > 0.0) {
    const double below = MinorSupOnBall(ball, ys, nu - 1, grid_depth).upper;
    const double spacing = ball.radius / static_cast<double>(1L << grid_depth);
    out.gap = std::sqrt(static_cast<double>(ball.center.H())) * spacing *
              MeanValueConstant(ball.center.N()) * below;
  }
  out.upper = out.estimate + out.gap;
  return out;
}

TheoremSchedule TheoremSchedule::Make(double r, int m, int n) {
  if (!(r > 1.0)) throw std::invalid_argument("R must exceed 1");
  if (m < 1 || n < 1) throw std::invalid_argument("M and N must be >= 1");
  TheoremSchedule s;
  s.R = r;
  s.M = m;
  s.N = n;
  const long l = m + n;
  s.lambda = Rational(n, l);
  s.delta_exp = Rational(-n * l * l);
  s.delta_t_exp = Rational(-m * l * l);
  return s;
}

double TheoremSchedule::delta() const { return Value(delta_exp); }
double TheoremSchedule::delta_t() const { return Value(delta_t_exp); }
double TheoremSchedule::Value(const Rational& e) const {
  return std::pow(R, e.ToDouble());
}

WindowRecord ScheduleWindows(const TheoremSchedule& s, int i) {
  if (i < 0) throw std::invalid_argument("stage index must be >= 0");
  const Rational M(s.M), N(s.N), L(s.L()), I(i);
  WindowRecord w;
  w.R = s.R;
  w.i = i;
  w.x_exp = s.delta_exp + M * (s.lambda + I);
  w.a_exp = s.delta_exp - N * (s.lambda + I) - M;
  w.y_exp = s.delta_t_exp + N * (Rational(1) + I);
  w.y_low_exp = s.delta_t_exp + N * I;
  w.b_exp = s.delta_t_exp - M * (Rational(1) + I) - N;
  w.x_radius_exp = -L * (s.lambda + I);
  w.y_radius_exp = -L * (Rational(1) + I);
  w.x_bound = s.Value(w.x_exp);
  w.a_bound = s.Value(w.a_exp);
  w.y_bound = s.Value(w.y_exp);
  w.y_low = s.Value(w.y_low_exp);
  w.b_bound = s.Value(w.b_exp);
  w.x_radius = s.Value(w.x_radius_exp);
  w.y_radius = s.Value(w.y_radius_exp);
  return w;
}

namespace {

// Witnesses x in Z^n (forms given by the rows of `a`) with lo <= |x| < x_cap
// and dist(a x, Z^m) < bound.
std::vector<IntegerWitness> SearchWindow(const LinearFormsMatrix& a,
                                         const HighFloat& x_cap,
                                         const HighFloat& x_low,
                                         const HighFloat& bound,
                                         IntegerWitness::Side side,
                                         bool first_only,
                                         std::uint64_t max_points) {
  std::vector<IntegerWitness> out;
  if (x_cap <= 1) return out;
  const long k = StrictFloor(x_cap);
  if (k < 1) return out;
  if (BoxCount(k, a.N()) > max_points) {
    throw std::length_error("window search exceeds the point limit");
  }
  long lo = 1;
  if (x_low > 1) lo = static_cast<long>(ceil(x_low));
  ForHalfSpace(a.N(), lo, k, [&](const std::vector<long>& x, long) {
    std::vector<long> tail;
    HighFloat worst = 0;
    for (int i = 0; i < a.M(); ++i) {
      HighFloat s = 0;
      for (int j = 0; j < a.N(); ++j) s += a.high(i, j) * x[static_cast<std::size_t>(j)];
      const HighFloat r = round(s);
      tail.push_back(-static_cast<long>(r));
      const HighFloat e = abs(s - r);
      if (e > worst) worst = e;
    }
    if (worst < bound) {
      IntegerWitness w{side, x};
      w.coords.insert(w.coords.end(), tail.begin(), tail.end());
      out.push_back(std::move(w));
      if (first_only) return false;
    }
    return true;
  });
  return out;
}

}  // namespace

std::optional<IntegerWitness> WindowHasSolution(const LinearFormsMatrix& a,
                                                const WindowRecord& w,
                                                IntegerWitness::Side side,
                                                std::uint64_t max_points) {
  const bool x_side = side == IntegerWitness::Side::kX;
  const double r = w.R;
  const HighFloat cap = x_side ? HighPow(r, w.x_exp) : HighPow(r, w.y_exp);
  const HighFloat bound = x_side ? HighPow(r, w.a_exp) : HighPow(r, w.b_exp);
  const LinearFormsMatrix forms = x_side ? a : a.Transpose();
  auto found = SearchWindow(forms, cap, HighFloat(0), bound, side, true,
                            max_points);
  if (found.empty()) return std::nullopt;
  return found.front();
}

std::vector<IntegerWitness> AllYWindowSolutions(const LinearFormsMatrix& a,
                                                const WindowRecord& w,
                                                bool use_lower,
                                                std::uint64_t max_points) {
  const double r = w.R;
  return SearchWindow(a.Transpose(), HighPow(r, w.y_exp),
                      use_lower ? HighPow(r, w.y_low_exp) : HighFloat(0),
                      HighPow(r, w.b_exp), IntegerWitness::Side::kY, false,
                      max_points);
}

int IntegerRank(const std::vector<std::vector<long>>& vectors) {
  if (vectors.empty()) return 0;
  std::vector<std::vector<Rational>> rows;
  for (const auto& v : vectors) {
    std::vector<Rational> row;
    for (long c : v) row.emplace_back(static_cast<std::int64_t>(c));
    rows.push_back(std::move(row));
  }
  const std::size_t cols = rows.front().size();
  int rank = 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    for (std::size_t k = r + 1; k < rows.size(); ++k) {
      if (rows[k][c].is_zero()) continue;
      const Rational f = rows[k][c] / rows[r][c];
      for (std::size_t t = c; t < cols; ++t) rows[k][t] -= f * rows[r][t];
    }
    ++r;
    ++rank;
  }
  return rank;
}

int SolutionSpaceRank(const LinearFormsMatrix& a, const WindowRecord& w,
                      std::uint64_t max_points) {
  std::vector<std::vector<long>> v;
  for (const IntegerWitness& s : AllYWindowSolutions(a, w, false, max_points)) {
    v.push_back(s.coords);
  }
  return IntegerRank(v);
}

CramerReport CramerCheck(const LinearFormsMatrix& a, const TheoremSchedule& s,
                         int i, std::uint64_t max_points) {
  const WindowRecord w = ScheduleWindows(s, i);
  const std::vector<IntegerWitness> sols =
      AllYWindowSolutions(a, w, true, max_points);
  CramerReport rep;
  rep.witnesses = sols.size();
  std::vector<std::vector<long>> ints;
  for (const auto& sol : sols) ints.push_back(sol.coords);
  rep.rank = IntegerRank(ints);
  const int n = a.N();
  rep.premise_holds = rep.rank <= n;
  if (!rep.premise_holds || sols.empty()) return rep;

  // Orthonormal basis of the span, completed to N vectors.
  const std::size_t l = static_cast<std::size_t>(a.L());
  Mat basis;
  auto add = [&](Vec v) {
    for (const Vec& b : basis) {
      const double d = Dot(v, b);
      for (std::size_t k = 0; k < l; ++k) v[k] -= d * b[k];
    }
    const double norm = std::sqrt(Dot(v, v));
    if (norm < 1e-9) return;
    for (double& x : v) x /= norm;
    basis.push_back(std::move(v));
  };
  for (const auto& v : ints) {
    if (static_cast<int>(basis.size()) == rep.rank) break;
    add(Vec(v.begin(), v.end()));
  }
  for (std::size_t k = 0; k < l && static_cast<int>(basis.size()) < n; ++k) {
    Vec e(l, 0.0);
    e[k] = 1.0;
    add(std::move(e));
  }
  const ExtendedVectors ev = MakeExtendedVectors(a);
  const Mat g = LeadingBlock(ev, basis, n);
  rep.det = Det(g);
  const Mat cof = Cofactors(g);
  for (const Vec& row : cof) {
    for (double c : row) rep.max_cofactor = std::max(rep.max_cofactor, std::abs(c));
  }
  const double b = w.b_bound;
  const double tol = 1e-9;
  for (const auto& v : ints) {
    const Vec y(v.begin(), v.end());
    for (int col = 0; col < n; ++col) {
      const double t = Dot(y, basis[static_cast<std::size_t>(col)]);
      double col_max = 0.0;
      for (int u = 0; u < n; ++u) {
        col_max = std::max(col_max, std::abs(cof[static_cast<std::size_t>(u)][static_cast<std::size_t>(col)]));
      }
      const double lhs = std::abs(t * rep.det);
      const double rhs = n * b * col_max;
      if (lhs > rhs * (1 + tol) + 1e-300) rep.cramer_holds = false;
      if (rhs > 0) rep.worst_cramer_slack = std::max(rep.worst_cramer_slack, lhs / rhs);
    }
  }
  const double last_rhs = n * std::sqrt(static_cast<double>(n)) * w.y_radius *
                          rep.max_cofactor;
  if (std::abs(rep.det) > last_rhs * (1 + tol) + 1e-300) rep.last_holds = false;
  return rep;
}

Rational FinalBadnessExponent(const TheoremSchedule& s) {
  return Rational(s.L()) * s.delta_exp - Rational(s.N * s.M) -
         Rational(s.M * s.M);
}

double FinalBadnessBound(const TheoremSchedule& s) {
  return s.Value(FinalBadnessExponent(s));
}

double TheoremConstants::PsiNu(int nu) const {
  return std::pow(epsilon0 / 2.0, nu) * psi;
}

double TheoremConstants::SqrtAlpha1Bound() const {
  double max_binom = 0.0;
  for (int k = 0; k <= N; ++k) max_binom = std::max(max_binom, Binomial(N, k));
  return std::min({0.5, 0.25 * PsiNu(N) * epsilon0 / (N * max_binom), C3_min,
                   (15.0 / 32.0) * C4 / psi});
}

nlohmann::json TheoremConstants::ToJson() const {
  nlohmann::json j{{"M", M},          {"N", N},          {"sigma", sigma},
                   {"psi", psi},      {"epsilon0", epsilon0},
                   {"alpha1", alpha1}, {"alpha2", alpha2}, {"C1", C1},
                   {"C2", C2},        {"C3_min", C3_min}, {"C4", C4},
                   {"mu", mu}};
  nlohmann::json psi_nu = nlohmann::json::array();
  for (int nu = 0; nu <= N; ++nu) psi_nu.push_back(PsiNu(nu));
  j["psi_nu"] = psi_nu;
  j["sqrt_alpha1_bound"] = SqrtAlpha1Bound();
  return j;
}

double SigmaFromPoints(const Mat& points) {
  double best = 0.0;
  for (const Vec& p : points) best = std::max(best, std::sqrt(Dot(p, p)));
  return 3.0 * best;
}

double CorollaryPsi(int l, double epsilon0) {
  return l * std::sqrt(static_cast<double>(l)) * std::pow(2.0 / epsilon0, l);
}

}  // namespace schmidt
