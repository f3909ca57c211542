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

#ifndef SCHMIDT_RATIONAL_H_
#define SCHMIDT_RATIONAL_H_

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace schmidt {

// Arbitrary-precision integer; GMP's C++ class is used directly.
using BigInt = mpz_class;

// Exact rational number. Always reduced, denominator strictly positive.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value);  // NOLINT(runtime/explicit)
  Rational(std::int64_t num, std::int64_t den);
  Rational(const BigInt& num, const BigInt& den);
  explicit Rational(const BigInt& value);
  explicit Rational(mpq_class value);

  // Accepts "p/q", "p", and finite decimals such as "-0.125" or "2.5e-3".
  // Throws std::invalid_argument on malformed input or a zero denominator.
  static Rational Parse(std::string_view text);

  // Exact binary value of a finite double.
  static Rational FromDouble(double value);

  BigInt num() const { return value_.get_num(); }
  BigInt den() const { return value_.get_den(); }
  const mpq_class& mpq() const { return value_; }

  double ToDouble() const { return value_.get_d(); }
  // Always "p/q" (integers print as "p/1").
  std::string ToString() const;

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  Rational abs() const;
  // Largest integer <= value.
  BigInt floor() const;
  BigInt ceil() const;
  Rational reciprocal() const;

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a);

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater
                          : std::strong_ordering::equal);
  }

 private:
  mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

// base^exponent for a non-negative exponent; negative exponents invert.
Rational Pow(const Rational& base, long exponent);

// Nearest integer, ties toward +infinity.
BigInt RoundNearest(const Rational& r);

// Distance from r to the nearest integer, in [0, 1/2].
Rational DistanceToInteger(const Rational& r);

// floor(sqrt(n)) for n >= 0.
BigInt IntegerSqrt(const BigInt& n);

}  // namespace schmidt

#endif  // SCHMIDT_RATIONAL_H_
