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

#include "tailsum/bigfloat.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace tailsum {

namespace {

mpfr_prec_t clamp_precision(mpfr_prec_t bits) {
  return std::max<mpfr_prec_t>(bits, MPFR_PREC_MIN);
}

}  // namespace

BigFloat::BigFloat(mpfr_prec_t precision_bits) {
  mpfr_init2(v_, clamp_precision(precision_bits));
  mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(const Rational& value, mpfr_prec_t precision_bits) {
  mpfr_init2(v_, clamp_precision(precision_bits));
  mpq_class q(value.numerator(), value.denominator());
  mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(long value, mpfr_prec_t precision_bits) {
  mpfr_init2(v_, clamp_precision(precision_bits));
  mpfr_set_si(v_, value, MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& o) {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& o) noexcept {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_swap(v_, o.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& o) {
  if (this != &o) {
    mpfr_set_prec(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& o) noexcept {
  if (this != &o) {
    mpfr_swap(v_, o.v_);
  }
  return *this;
}

BigFloat::~BigFloat() {
  mpfr_clear(v_);
}

mpfr_prec_t BigFloat::bits_for_digits(long decimal_digits) {
  // log2(10) = 3.3219...; a few guard bits on top.
  const double bits = static_cast<double>(decimal_digits) * 3.3219280948873626;
  return clamp_precision(static_cast<mpfr_prec_t>(bits) + 16);
}

BigFloat BigFloat::operator-() const {
  BigFloat r(precision_bits());
  mpfr_neg(r.v_, v_, MPFR_RNDN);
  return r;
}

namespace {

mpfr_prec_t joint_precision(const BigFloat& a, const BigFloat& b) {
  return std::max(a.precision_bits(), b.precision_bits());
}

}  // namespace

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
  BigFloat r(joint_precision(a, b));
  mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigFloat operator-(const BigFloat& a, const BigFloat& b) {
  BigFloat r(joint_precision(a, b));
  mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigFloat operator*(const BigFloat& a, const BigFloat& b) {
  BigFloat r(joint_precision(a, b));
  mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigFloat operator/(const BigFloat& a, const BigFloat& b) {
  if (b.is_zero()) {
    throw InvalidArgument("bigfloat: division by zero");
  }
  BigFloat r(joint_precision(a, b));
  mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::pow(const BigFloat& base, const BigFloat& exponent) {
  BigFloat r(joint_precision(base, exponent));
  mpfr_pow(r.v_, base.v_, exponent.v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::pow(const BigFloat& base, long exponent) {
  BigFloat r(base.precision_bits());
  mpfr_pow_si(r.v_, base.v_, exponent, MPFR_RNDN);
  return r;
}

std::string BigFloat::to_decimal(long significant_digits) const {
  if (significant_digits < 1) {
    throw InvalidArgument("to_decimal: digit count must be positive");
  }
  if (is_zero()) return "0";

  mpfr_exp_t exp = 0;
  char* raw = mpfr_get_str(nullptr, &exp, 10,
                           static_cast<size_t>(significant_digits), v_,
                           MPFR_RNDN);
  std::string digits(raw);
  mpfr_free_str(raw);

  std::string sign;
  if (!digits.empty() && digits[0] == '-') {
    sign = "-";
    digits.erase(0, 1);
  }

  // exp = number of digits before the decimal point.
  std::string out;
  if (exp <= 0) {
    out = "0." + std::string(static_cast<size_t>(-exp), '0') + digits;
  } else if (static_cast<size_t>(exp) >= digits.size()) {
    out = digits + std::string(static_cast<size_t>(exp) - digits.size(), '0');
  } else {
    out = digits.substr(0, static_cast<size_t>(exp)) + "." +
          digits.substr(static_cast<size_t>(exp));
  }
  return sign + out;
}

BigFloat abs(const BigFloat& x) {
  return x.sign() < 0 ? -x : x;
}

}  // namespace tailsum
