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

#ifndef SCHMIDT_TESTS_ORACLES_H_
#define SCHMIDT_TESTS_ORACLES_H_

// Independent reference computations shared by unit and acceptance tests.
// They use only Rational arithmetic and textbook recurrences.

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "schmidt/rational.h"

namespace schmidt::oracle {

// q^2 dist([lo, hi], p/q) minimized over p, for one q >= 1.
inline Rational WeightedGap(const Rational& lo, const Rational& hi, long q) {
  const Rational qq(q);
  const BigInt a = (lo * qq).ceil();
  const BigInt b = (hi * qq).floor();
  if (a <= b) return Rational(0);
  // No multiple of 1/q in [lo, hi]; nearest are floor(q lo)/q and ceil(q hi)/q.
  const Rational left = lo - Rational(BigInt(a - 1)) / qq;
  const Rational right = Rational(BigInt(b + 1)) / qq - hi;
  return qq * qq * std::min(left, right);
}

// min over 1 <= q <= cap of q^2 dist([lo, hi], p/q), by enumeration.
inline Rational BruteWeightedMin(const Rational& lo, const Rational& hi,
                                 long cap) {
  Rational best = WeightedGap(lo, hi, 1);
  for (long q = 2; q <= cap && best.sign() > 0; ++q) {
    best = std::min(best, WeightedGap(lo, hi, q));
  }
  return best;
}

// Convergents and intermediate fractions of x with denominator <= cap.
// A fraction with |x - p/q| < 1/q^2 is a convergent or an intermediate
// fraction with k = 1 or k = a - 1, so those (plus all k when a <= 3) are
// kept.
inline std::vector<std::pair<BigInt, BigInt>> Semiconvergents(
    const Rational& x, const BigInt& cap) {
  std::vector<std::pair<BigInt, BigInt>> out;
  BigInt p2 = 0, q2 = 1;  // p_{n-2}, q_{n-2}
  BigInt p1 = 1, q1 = 0;  // p_{n-1}, q_{n-1}
  BigInt num = x.num(), den = x.den();
  while (den != 0) {
    BigInt a;
    mpz_fdiv_q(a.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    BigInt r = num - a * den;
    num = den;
    den = r;
    std::vector<BigInt> ks;
    if (a <= 3) {
      for (BigInt k = 1; k <= a; ++k) ks.push_back(k);
    } else {
      ks = {BigInt(1), BigInt(a - 1), a};
    }
    for (const BigInt& k : ks) {
      const BigInt q = q2 + k * q1;
      const BigInt p = p2 + k * p1;
      if (q >= 1 && q <= cap) out.emplace_back(p, q);
    }
    const BigInt pn = a * p1 + p2, qn = a * q1 + q2;
    p2 = p1;
    q2 = q1;
    p1 = pn;
    q1 = qn;
    if (q1 > cap) break;
  }
  return out;
}

struct CertificateCheck {
  bool sound = false;
  bool conclusive = false;  // b + r cap^2 < 1, so the candidate set is complete
  Rational observed;        // smallest q^2 dist found
};

// Checks that every p/q with q <= cap satisfies q^2 dist([c - r, c + r], p/q)
// >= b. Denominators up to `brute_cap` are enumerated; beyond that only
// fractions within 1/q^2 of c can violate the bound (given b + r cap^2 < 1),
// and those are semiconvergents of c.
inline CertificateCheck CheckCertificate(const Rational& c, const Rational& r,
                                         const BigInt& cap, const Rational& b,
                                         long brute_cap = 2000) {
  CertificateCheck out;
  const Rational lo = c - r, hi = c + r;
  const long brute = cap < brute_cap ? cap.get_si() : brute_cap;
  out.observed = BruteWeightedMin(lo, hi, brute);
  out.conclusive = b + r * Rational(BigInt(cap * cap)) < Rational(1);
  if (cap > brute) {
    for (const auto& [p, q] : Semiconvergents(c, cap)) {
      if (q <= brute) continue;
      const Rational f(p, q);
      Rational d(0);
      if (f < lo) d = lo - f;
      if (f > hi) d = f - hi;
      out.observed = std::min(out.observed, Rational(BigInt(q * q)) * d);
    }
  }
  out.sound = out.conclusive && out.observed >= b;
  return out;
}

// min over 1 <= q <= cap of q <q x> for every x in [lo, hi] (equivalently the
// weighted gap); 0 when some p/q with q <= cap lies in the interval.
inline Rational MinQDistOverInterval(const Rational& lo, const Rational& hi,
                                     long cap) {
  return BruteWeightedMin(lo, hi, cap);
}

}  // namespace schmidt::oracle

#endif  // SCHMIDT_TESTS_ORACLES_H_
