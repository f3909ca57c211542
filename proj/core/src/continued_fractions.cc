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

#include "schmidt/continued_fractions.h"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <tuple>

namespace schmidt {
namespace {

void CheckDigits(const CfWord& word) {
  for (const BigInt& a : word) {
    if (a < 1) throw std::invalid_argument("continued fraction digit below 1");
  }
}

Rational Frac(const BigInt& p, const BigInt& q) { return Rational(p, q); }

BigInt CeilDiv(const Rational& x) { return x.ceil(); }

struct Node {
  BigInt a, b, c, d;  // open Stern-Brocot interval (a/b, c/d)
};

}  // namespace

CfWord MakeWord(const std::vector<long>& digits) {
  CfWord w;
  for (long d : digits) w.emplace_back(d);
  CheckDigits(w);
  return w;
}

std::string WordToString(const CfWord& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ',';
    s += w[i].get_str();
  }
  return s;
}

Continuants ContinuantsOf(const CfWord& word) {
  CheckDigits(word);
  BigInt prev = 0;
  BigInt cur = 1;
  for (const BigInt& a : word) {
    BigInt next = a * cur + prev;
    prev = cur;
    cur = next;
  }
  return {cur, prev};
}

std::vector<std::pair<BigInt, BigInt>> Convergents(const CfWord& word) {
  CheckDigits(word);
  std::vector<std::pair<BigInt, BigInt>> out{{BigInt(0), BigInt(1)}};
  BigInt pp = 1, qp = 0, p = 0, q = 1;
  for (const BigInt& a : word) {
    BigInt pn = a * p + pp;
    BigInt qn = a * q + qp;
    pp = p;
    qp = q;
    p = pn;
    q = qn;
    out.emplace_back(p, q);
  }
  return out;
}

Cylinder CylinderInterval(const CfWord& word) {
  if (word.empty()) throw std::invalid_argument("cylinder of the empty word");
  const auto conv = Convergents(word);
  const auto& [p, q] = conv[conv.size() - 1];
  const auto& [pp, qp] = conv[conv.size() - 2];
  const Rational x = Frac(p, q);
  const Rational y = Frac(p + pp, q + qp);
  Cylinder c{word, std::min(x, y), std::max(x, y), q, qp};
  return c;
}

std::vector<CfWord> AllWords(const std::vector<long>& alphabet, int depth) {
  std::vector<long> sorted = alphabet;
  std::sort(sorted.begin(), sorted.end());
  std::vector<CfWord> words{{}};
  for (int k = 0; k < depth; ++k) {
    std::vector<CfWord> next;
    next.reserve(words.size() * sorted.size());
    for (const CfWord& w : words) {
      for (long d : sorted) {
        CfWord v = w;
        v.emplace_back(d);
        next.push_back(std::move(v));
      }
    }
    words = std::move(next);
  }
  for (const CfWord& w : words) CheckDigits(w);
  return words;
}

RatioReport RatioBoundsCheck(int max_depth, const std::vector<long>& alphabet) {
  if (max_depth < 1) throw std::invalid_argument("max_depth must be >= 1");
  if (alphabet.empty()) throw std::invalid_argument("empty alphabet");
  std::vector<long> sorted = alphabet;
  std::sort(sorted.begin(), sorted.end());
  const Rational lower(1, 12);
  const Rational upper(1, 2);
  RatioReport r;
  r.max_depth = max_depth;
  r.within_bounds = true;
  r.largest_digit_shortest = true;
  bool first = true;
  for (long d : sorted) {
    r.root_max_ratio =
        std::max(r.root_max_ratio, CylinderInterval(MakeWord({d})).length());
  }
  // Breadth-first over parents, carrying (q_n, q_{n-1}) so that each length
  // is 1 / (q_n (q_n + q_{n-1})).
  struct Item {
    CfWord word;
    BigInt q, qp;
  };
  std::vector<Item> level;
  for (long d : sorted) level.push_back({MakeWord({d}), BigInt(d), BigInt(1)});
  for (int depth = 1; depth <= max_depth; ++depth) {
    std::vector<Item> next;
    for (const Item& parent : level) {
      const BigInt parent_den = parent.q * (parent.q + parent.qp);
      Rational shortest;
      Rational largest_digit_len;
      bool have = false;
      for (long d : sorted) {
        Item child{parent.word, d * parent.q + parent.qp, parent.q};
        child.word.emplace_back(d);
        const BigInt child_den = child.q * (child.q + child.qp);
        const Rational ratio(parent_den, child_den);
        ++r.pairs_checked;
        if (!(lower < ratio && ratio < upper)) r.within_bounds = false;
        if (first || ratio < r.min_ratio) {
          r.min_ratio = ratio;
          r.argmin = child.word;
        }
        if (first || ratio > r.max_ratio) {
          r.max_ratio = ratio;
          r.argmax = child.word;
        }
        first = false;
        const Rational len(BigInt(1), child_den);
        if (!have || len < shortest) shortest = len;
        have = true;
        if (d == sorted.back()) largest_digit_len = len;
        if (depth < max_depth) next.push_back(std::move(child));
      }
      if (sorted.size() > 1) {
        // The largest digit must be strictly shorter than every sibling.
        for (long d : sorted) {
          if (d == sorted.back()) continue;
          const BigInt q = d * parent.q + parent.qp;
          if (!(largest_digit_len < Rational(BigInt(1), q * (q + parent.q)))) {
            r.largest_digit_shortest = false;
          }
        }
      }
    }
    level = std::move(next);
  }
  return r;
}

CfWord CfOfRational(const Rational& x) {
  if (x < Rational(0) || x > Rational(1)) {
    throw std::invalid_argument("expansion requires 0 <= x <= 1");
  }
  CfWord w;
  BigInt p = x.num();
  BigInt q = x.den();
  while (p != 0) {
    BigInt a = q / p;
    BigInt r = q - a * p;
    w.push_back(a);
    q = p;
    p = r;
  }
  return w;
}

CfWord CfPrefixOfInterval(const Rational& lo, const Rational& hi) {
  if (!(Rational(0) <= lo && lo < hi && hi <= Rational(1))) {
    throw std::invalid_argument("prefix requires 0 <= lo < hi <= 1");
  }
  CfWord w;
  Rational ylo = lo;
  Rational yhi = hi;
  while (ylo.sign() > 0) {
    const BigInt a = yhi.reciprocal().floor();
    if (ylo < Rational(BigInt(1), a + 1)) break;
    w.push_back(a);
    const Rational nlo = yhi.reciprocal() - Rational(a);
    const Rational nhi = ylo.reciprocal() - Rational(a);
    ylo = nlo;
    yhi = nhi;
  }
  return w;
}

std::optional<BigInt> QuotientBoundCertificate(const Ball& ball) {
  if (ball.dim() != 1) throw std::invalid_argument("ball must be 1-dimensional");
  const Rational lo = ball.center()[0] - ball.radius();
  const Rational hi = ball.center()[0] + ball.radius();
  if (lo <= Rational(0) || hi > Rational(1)) return std::nullopt;
  const CfWord w = CfPrefixOfInterval(lo, hi);
  if (w.empty()) return std::nullopt;
  return *std::max_element(w.begin(), w.end());
}

std::vector<Rational> FractionsInInterval(const Rational& lo,
                                          const Rational& hi,
                                          const BigInt& max_den) {
  std::vector<Rational> out;
  if (lo > hi || max_den < 1) return out;
  for (BigInt n = lo.ceil(); Rational(n) <= hi; ++n) out.emplace_back(n);
  std::vector<Node> stack;
  for (BigInt n = lo.floor(); Rational(n) < hi; ++n) {
    stack.push_back({n, BigInt(1), n + 1, BigInt(1)});
  }
  while (!stack.empty()) {
    const Node node = stack.back();
    stack.pop_back();
    if (node.b + node.d > max_den) continue;
    if (Frac(node.c, node.d) <= lo || Frac(node.a, node.b) >= hi) continue;
    const BigInt mp = node.a + node.c;
    const BigInt mq = node.b + node.d;
    const Rational m = Frac(mp, mq);
    if (lo <= m && m <= hi) out.push_back(m);
    stack.push_back({node.a, node.b, mp, mq});
    stack.push_back({mp, mq, node.c, node.d});
  }
  std::sort(out.begin(), out.end());
  return out;
}

Rational SimplestRational(const Rational& lo, const Rational& hi) {
  if (lo > hi) throw std::invalid_argument("empty interval");
  if (lo <= Rational(0) && Rational(0) <= hi) return Rational(0);
  if (hi < Rational(0)) return -SimplestRational(-hi, -lo);
  const BigInt c = lo.ceil();
  if (Rational(c) <= hi) return Rational(c);
  Node node{lo.floor(), BigInt(1), lo.floor() + 1, BigInt(1)};
  while (true) {
    const Rational m = Frac(node.a + node.c, node.b + node.d);
    if (lo <= m && m <= hi) return m;
    if (m < lo) {
      // Largest k with (a + k c) / (b + k d) < lo.
      const Rational lo_b = lo * Rational(node.b);
      const Rational lo_d = lo * Rational(node.d);
      const BigInt k =
          CeilDiv((lo_b - Rational(node.a)) / (Rational(node.c) - lo_d)) - 1;
      node.a += k * node.c;
      node.b += k * node.d;
    } else {
      const Rational hi_b = hi * Rational(node.b);
      const Rational hi_d = hi * Rational(node.d);
      const BigInt k =
          CeilDiv((Rational(node.c) - hi_d) / (hi_b - Rational(node.a))) - 1;
      node.c += k * node.a;
      node.d += k * node.b;
    }
  }
}

std::vector<Rational> RelevantFractions(const Rational& lo, const Rational& hi,
                                        const BigInt& max_den) {
  if (lo > hi) throw std::invalid_argument("empty interval");
  if (max_den < 1) throw std::invalid_argument("max_den must be >= 1");
  std::vector<Rational> out;
  const BigInt first = lo.floor();
  const BigInt last = hi.ceil();
  if (last - first > BigInt(1 << 20)) throw std::length_error("interval too wide");
  for (BigInt n = first; n <= last; ++n) out.emplace_back(n);
  std::vector<Node> stack;
  for (BigInt n = first; n < last; ++n) {
    stack.push_back({n, BigInt(1), n + 1, BigInt(1)});
  }
  while (!stack.empty()) {
    const Node node = stack.back();
    stack.pop_back();
    if (node.b + node.d > max_den) continue;
    // Fractions strictly inside (a/b, c/d) all have larger denominators than
    // both ends; if the interval misses [lo, hi] the nearer end dominates.
    if (Frac(node.c, node.d) <= lo || Frac(node.a, node.b) >= hi) continue;
    const BigInt mp = node.a + node.c;
    const BigInt mq = node.b + node.d;
    const Rational m = Frac(mp, mq);
    out.push_back(m);
    if (lo <= m && m <= hi) {
      stack.push_back({node.a, node.b, mp, mq});
      stack.push_back({mp, mq, node.c, node.d});
    } else if (m < lo) {
      // f_k = (a + k c) / (b + k d) stays below lo for k <= run. Along the
      // run q^2 (x - f_k) is concave in q, so f_1 = m and the last f_k bound
      // every skipped term, and each skipped left subtree is dominated by
      // its right end.
      const BigInt run = CeilDiv((lo * Rational(node.b) - Rational(node.a)) /
                                 (Rational(node.c) - lo * Rational(node.d))) -
                         1;
      const BigInt cap = (max_den - node.b) / node.d;
      const BigInt k = std::min(run, cap);
      out.push_back(Frac(node.a + k * node.c, node.b + k * node.d));
      if (k == run) {
        stack.push_back({node.a + k * node.c, node.b + k * node.d, node.c,
                         node.d});
      }
    } else {
      const BigInt run = CeilDiv((Rational(node.c) - hi * Rational(node.d)) /
                                 (hi * Rational(node.b) - Rational(node.a))) -
                         1;
      const BigInt cap = (max_den - node.d) / node.b;
      const BigInt k = std::min(run, cap);
      out.push_back(Frac(k * node.a + node.c, k * node.b + node.d));
      if (k == run) {
        stack.push_back({node.a, node.b, k * node.a + node.c,
                         k * node.b + node.d});
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Rational WeightedDistance(const Rational& lo, const Rational& hi,
                          const Rational& f) {
  Rational dist;
  if (f < lo) {
    dist = lo - f;
  } else if (f > hi) {
    dist = f - hi;
  }
  const Rational q(f.den());
  return q * q * dist;
}

}  // namespace schmidt
