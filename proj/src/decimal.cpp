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

#include "tailsum/decimal.hpp"

namespace tailsum {

namespace {

Integer pow10(long k) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, static_cast<unsigned long>(k));
  return r;
}

// Largest d with 10^d <= a/b, for positive a, b.
long decimal_exponent(const Integer& a, const Integer& b) {
  long la = static_cast<long>(mpz_sizeinbase(a.get_mpz_t(), 10));
  long lb = static_cast<long>(mpz_sizeinbase(b.get_mpz_t(), 10));
  long d = la - lb + 1;  // upper candidate; sizeinbase may overshoot by one
  auto at_least = [&](long e) {
    // a/b >= 10^e  <=>  a * 10^max(0,-e) >= b * 10^max(0,e)
    Integer lhs = a;
    Integer rhs = b;
    if (e >= 0) {
      rhs *= pow10(e);
    } else {
      lhs *= pow10(-e);
    }
    return lhs >= rhs;
  };
  while (!at_least(d)) --d;
  return d;
}

}  // namespace

std::string to_decimal(const Rational& value, long significant_digits) {
  if (significant_digits < 1) {
    throw InvalidArgument("to_decimal: digit count must be positive");
  }
  if (value.is_zero()) return "0";

  const bool negative = value.sign() < 0;
  Integer a = value.numerator();
  if (negative) a = -a;
  const Integer b = value.denominator();

  long d = decimal_exponent(a, b);  // first significant digit at 10^d
  // Round a/b to significant_digits digits: scaled = round(a/b * 10^s)
  // with s chosen so scaled has exactly significant_digits digits.
  long s = significant_digits - 1 - d;
  Integer num = a;
  Integer den = b;
  if (s >= 0) {
    num *= pow10(s);
  } else {
    den *= pow10(-s);
  }
  Integer q, rem;
  mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  Integer twice = rem * 2;
  if (twice > den || (twice == den && mpz_odd_p(q.get_mpz_t()))) {
    q += 1;
  }
  if (q == pow10(significant_digits)) {  // rounding carried into a new digit
    q = pow10(significant_digits - 1);
    ++d;
  }

  std::string digits = q.get_str();
  std::string out;
  if (d >= 0) {
    const auto ip = static_cast<size_t>(d) + 1;
    if (ip >= digits.size()) {
      out = digits + std::string(ip - digits.size(), '0');
    } else {
      out = digits.substr(0, ip) + "." + digits.substr(ip);
    }
  } else {
    out = "0." + std::string(static_cast<size_t>(-d) - 1, '0') + digits;
  }
  return negative ? "-" + out : out;
}

Rational rational_from_decimal(const std::string& text) {
  return Rational::from_string(text);
}

}  // namespace tailsum
