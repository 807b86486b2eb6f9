// Copyright 2026 The tailsum Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TAILSUM_RATIONAL_HPP
#define TAILSUM_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>

#include "tailsum/error.hpp"

namespace tailsum {

/// Arbitrary-precision signed integer.
using Integer = mpz_class;

/// Exact rational number of unbounded magnitude.
///
/// Always stored in lowest terms with a strictly positive denominator;
/// every constructor and operator preserves that normal form.
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(long value) : q_(static_cast<signed long>(value)) {}  // NOLINT: implicit by design
  Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}
  explicit Rational(const Integer& value) : q_(value) {}
  Rational(const Integer& num, const Integer& den);

  /// Parses "p", "p/q" or a plain decimal such as "2.5" / "-0.125".
  static Rational from_string(const std::string& text);

  Integer numerator() const { return q_.get_num(); }
  Integer denominator() const { return q_.get_den(); }
  int sign() const { return sgn(q_); }
  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }

  /// "p/q", or just "p" when the denominator is 1.
  std::string to_string() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
  friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
  friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
  friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }

  friend bool operator==(const Rational& a, const Rational& b) { return ::cmp(a.q_, b.q_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return ::cmp(a.q_, b.q_) <=> 0;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  mpq_class q_;
};

Rational abs(const Rational& r);

/// Exact integer power; negative exponents invert (zero base rejected).
Rational pow(const Rational& base, long exponent);

/// 2^k - 1 as an exact integer, k >= 0.
Integer pow2_minus_1(unsigned long k);

}  // namespace tailsum

#endif  // TAILSUM_RATIONAL_HPP
