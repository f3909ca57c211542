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

#include "schmidt/rational.h"

#include <cctype>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace schmidt {
namespace {

bool AllDigits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

BigInt ParseInteger(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!AllDigits(s)) {
    throw std::invalid_argument("malformed integer: '" + std::string(s) + "'");
  }
  BigInt value(std::string(s), 10);
  return negative ? BigInt(-value) : value;
}

Rational ParseDecimal(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    exponent = ParseInteger(s.substr(e + 1)).get_si();
    s = s.substr(0, e);
  }
  std::string digits;
  long frac_digits = 0;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view whole = s.substr(0, dot);
    std::string_view frac = s.substr(dot + 1);
    if ((!whole.empty() && !AllDigits(whole)) ||
        (!frac.empty() && !AllDigits(frac)) || (whole.empty() && frac.empty())) {
      throw std::invalid_argument("malformed decimal: '" + std::string(text) +
                                  "'");
    }
    digits = std::string(whole) + std::string(frac);
    frac_digits = static_cast<long>(frac.size());
  } else {
    if (!AllDigits(s)) {
      throw std::invalid_argument("malformed decimal: '" + std::string(text) +
                                  "'");
    }
    digits = std::string(s);
  }
  BigInt mantissa(digits, 10);
  if (negative) mantissa = -mantissa;
  return Rational(mantissa) * Pow(Rational(10), exponent - frac_digits);
}

}  // namespace

Rational::Rational(std::int64_t value) : value_(BigInt(static_cast<long>(value))) {}

Rational::Rational(std::int64_t num, std::int64_t den)
    : Rational(BigInt(static_cast<long>(num)), BigInt(static_cast<long>(den))) {}

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(const BigInt& value) : value_(value) {}

Rational::Rational(mpq_class value) : value_(std::move(value)) {
  if (value_.get_den() == 0) throw std::invalid_argument("zero denominator");
  value_.canonicalize();
}

Rational Rational::Parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("empty rational");
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    return Rational(ParseInteger(text.substr(0, slash)),
                    ParseInteger(text.substr(slash + 1)));
  }
  if (text.find_first_of(".eE") != std::string_view::npos) {
    return ParseDecimal(text);
  }
  return Rational(ParseInteger(text));
}

Rational Rational::FromDouble(double value) {
  if (!std::isfinite(value)) {
    throw std::invalid_argument("non-finite double has no rational value");
  }
  return Rational(mpq_class(value));
}

std::string Rational::ToString() const {
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

BigInt Rational::floor() const {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return q;
}

BigInt Rational::ceil() const {
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return q;
}

Rational Rational::reciprocal() const {
  if (is_zero()) throw std::domain_error("reciprocal of zero");
  return Rational(mpq_class(1 / value_));
}

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}
Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}
Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}
Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  value_ /= o.value_;
  return *this;
}

Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.ToString();
}

Rational Pow(const Rational& base, long exponent) {
  if (exponent < 0) return Pow(base.reciprocal(), -exponent);
  BigInt num, den;
  mpz_pow_ui(num.get_mpz_t(), base.num().get_mpz_t(),
             static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), base.den().get_mpz_t(),
             static_cast<unsigned long>(exponent));
  return Rational(num, den);
}

BigInt RoundNearest(const Rational& r) {
  return (r + Rational(1, 2)).floor();
}

Rational DistanceToInteger(const Rational& r) {
  return (r - Rational(RoundNearest(r))).abs();
}

BigInt IntegerSqrt(const BigInt& n) {
  if (n < 0) throw std::domain_error("IntegerSqrt of a negative number");
  BigInt root;
  mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
  return root;
}

}  // namespace schmidt
