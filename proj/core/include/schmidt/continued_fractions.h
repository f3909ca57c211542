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

#ifndef SCHMIDT_CONTINUED_FRACTIONS_H_
#define SCHMIDT_CONTINUED_FRACTIONS_H_

// Continuants, cylinder intervals of the continued fraction expansion on
// [0, 1], and Stern-Brocot searches for fractions of bounded denominator.

#include <optional>
#include <utility>
#include <vector>

#include "schmidt/game.h"
#include "schmidt/rational.h"

namespace schmidt {

// Partial quotients a_1, ..., a_n of [0; a_1, ..., a_n]; every digit >= 1.
using CfWord = std::vector<BigInt>;

CfWord MakeWord(const std::vector<long>& digits);
std::string WordToString(const CfWord& w);  // "1,1,1,3"

struct Continuants {
  BigInt q_n;
  BigInt q_prev;
};

// q_{-1} = 0, q_0 = 1, q_n = a_n q_{n-1} + q_{n-2}.
Continuants ContinuantsOf(const CfWord& word);

// Convergents p_k / q_k for k = 0..n as (p, q) pairs; p_0 / q_0 = 0 / 1.
std::vector<std::pair<BigInt, BigInt>> Convergents(const CfWord& word);

struct Cylinder {
  CfWord word;
  Rational lo;
  Rational hi;
  BigInt q_n;
  BigInt q_prev;

  Rational length() const { return hi - lo; }
};

// Closed set of x in [0, 1] whose expansion starts with `word`. Throws
// std::invalid_argument on an empty word or a digit below 1.
Cylinder CylinderInterval(const CfWord& word);

// All words of length `depth` over `alphabet`, lexicographic.
std::vector<CfWord> AllWords(const std::vector<long>& alphabet, int depth);

struct RatioReport {
  int max_depth = 0;
  std::size_t pairs_checked = 0;
  Rational min_ratio;
  Rational max_ratio;
  CfWord argmin;  // child word attaining min_ratio
  CfWord argmax;
  // Every child/parent length ratio lies strictly in (1/12, 1/2).
  bool within_bounds = false;
  // At every parent the child ending in the largest digit is the shortest.
  bool largest_digit_shortest = false;
  // Ratio of the depth-1 cylinders to [0, 1]; reported separately because
  // the parent there is the whole interval.
  Rational root_max_ratio;
};

// Exact check over every parent word of length 1..max_depth and each of its
// children. Throws std::invalid_argument if max_depth < 1.
RatioReport RatioBoundsCheck(int max_depth,
                             const std::vector<long>& alphabet = {1, 3});

// Canonical expansion of x in [0, 1]: last digit >= 2, except 1 = [0; 1] and
// 0 = [0;]. Throws std::invalid_argument outside [0, 1].
CfWord CfOfRational(const Rational& x);

// Longest word w with [lo, hi] inside the cylinder of w. Requires
// 0 <= lo < hi <= 1.
CfWord CfPrefixOfInterval(const Rational& lo, const Rational& hi);

// Largest digit of the prefix forced by a ball in (0, 1]; empty when the ball
// meets 0, leaves (0, 1], or forces no digit.
std::optional<BigInt> QuotientBoundCertificate(const Ball& ball);

// Every reduced p/q in [lo, hi] with q <= max_den, ascending.
std::vector<Rational> FractionsInInterval(const Rational& lo,
                                          const Rational& hi,
                                          const BigInt& max_den);

// Fraction of least denominator in [lo, hi]; ties go to the smallest
// absolute value.
Rational SimplestRational(const Rational& lo, const Rational& hi);

// A set R of reduced fractions with q <= max_den such that for every closed
// interval W inside [lo, hi],
//   min over all p/q with q <= max_den of q^2 dist(W, p/q)
// is attained on R. Found by a Stern-Brocot descent that records mediants in
// [lo, hi], skips subtrees beyond it, and jumps over runs of same-direction
// moves keeping only the ends of each run.
std::vector<Rational> RelevantFractions(const Rational& lo, const Rational& hi,
                                        const BigInt& max_den);

// q^2 * dist([lo, hi], f) for f = p/q in lowest terms.
Rational WeightedDistance(const Rational& lo, const Rational& hi,
                          const Rational& f);

}  // namespace schmidt

#endif  // SCHMIDT_CONTINUED_FRACTIONS_H_
