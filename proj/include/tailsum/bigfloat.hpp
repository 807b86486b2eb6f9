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

#ifndef TAILSUM_BIGFLOAT_HPP
#define TAILSUM_BIGFLOAT_HPP

#include <mpfr.h>

#include <compare>
#include <string>

#include "tailsum/rational.hpp"

namespace tailsum {

/// High-precision binary float for the approximate numeric mode.
///
/// A thin RAII wrapper over mpfr_t. Every operation rounds to nearest;
/// binary operations produce results at the wider operand precision.
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t precision_bits);
  BigFloat(const Rational& value, mpfr_prec_t precision_bits);
  BigFloat(long value, mpfr_prec_t precision_bits);
  BigFloat(const BigFloat& o);
  BigFloat(BigFloat&& o) noexcept;
  BigFloat& operator=(const BigFloat& o);
  BigFloat& operator=(BigFloat&& o) noexcept;
  ~BigFloat();

  static mpfr_prec_t bits_for_digits(long decimal_digits);
  mpfr_prec_t precision_bits() const { return mpfr_get_prec(v_); }

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  bool is_integer() const { return mpfr_integer_p(v_) != 0; }
  long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }

  BigFloat operator-() const;
  friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
  BigFloat& operator+=(const BigFloat& o) { return *this = *this + o; }
  BigFloat& operator-=(const BigFloat& o) { return *this = *this - o; }
  BigFloat& operator*=(const BigFloat& o) { return *this = *this * o; }
  BigFloat& operator/=(const BigFloat& o) { return *this = *this / o; }

  friend bool operator==(const BigFloat& a, const BigFloat& b) {
    return mpfr_cmp(a.v_, b.v_) == 0;
  }
  friend std::strong_ordering operator<=>(const BigFloat& a, const BigFloat& b) {
    return mpfr_cmp(a.v_, b.v_) <=> 0;
  }

  /// base^exponent for positive base (general real exponent).
  static BigFloat pow(const BigFloat& base, const BigFloat& exponent);
  static BigFloat pow(const BigFloat& base, long exponent);

  /// Plain decimal rendering ("0.001953125"), rounded to the requested
  /// count of significant digits.
  std::string to_decimal(long significant_digits) const;

 private:
  mpfr_t v_;
};

BigFloat abs(const BigFloat& x);

}  // namespace tailsum

#endif  // TAILSUM_BIGFLOAT_HPP
