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

#include "tailsum/rational.hpp"

#include <cctype>
#include <ostream>

namespace tailsum {

Rational::Rational(const Integer& num, const Integer& den) {
  if (sgn(den) == 0) {
    throw InvalidArgument("rational: zero denominator");
  }
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) {
    throw InvalidArgument("rational: division by zero");
  }
  q_ /= o.q_;
  return *this;
}

Rational Rational::operator-() const {
  Rational r;
  r.q_ = -q_;
  return r;
}

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

Integer integer_from_digits(const std::string& s) {
  return Integer(s, 10);
}

}  // namespace

Rational Rational::from_string(const std::string& text) {
  std::string s = text;
  bool negative = false;
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
    negative = (s[0] == '-');
    s.erase(0, 1);
  }
  if (s.empty()) {
    throw InvalidArgument("rational: cannot parse '" + text + "'");
  }

  Rational result;
  if (auto slash = s.find('/'); slash != std::string::npos) {
    std::string num = s.substr(0, slash);
    std::string den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
      throw InvalidArgument("rational: cannot parse '" + text + "'");
    }
    result = Rational(integer_from_digits(num), integer_from_digits(den));
  } else if (auto dot = s.find('.'); dot != std::string::npos) {
    std::string ip = s.substr(0, dot);
    std::string fp = s.substr(dot + 1);
    if (ip.empty()) ip = "0";
    if (fp.empty()) fp = "0";
    if (!all_digits(ip) || !all_digits(fp)) {
      throw InvalidArgument("rational: cannot parse '" + text + "'");
    }
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, fp.size());
    Integer num = integer_from_digits(ip) * scale + integer_from_digits(fp);
    result = Rational(num, scale);
  } else {
    if (!all_digits(s)) {
      throw InvalidArgument("rational: cannot parse '" + text + "'");
    }
    result = Rational(integer_from_digits(s));
  }
  return negative ? -result : result;
}

std::string Rational::to_string() const {
  std::string s = q_.get_num().get_str();
  if (q_.get_den() != 1) {
    s += "/" + q_.get_den().get_str();
  }
  return s;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.to_string();
}

Rational abs(const Rational& r) {
  return r.sign() < 0 ? -r : r;
}

Rational pow(const Rational& base, long exponent) {
  if (exponent == 0) return Rational(1);
  if (exponent < 0) {
    if (base.is_zero()) {
      throw DomainViolation("pow: zero base with negative exponent");
    }
    return pow(Rational(base.denominator(), base.numerator()), -exponent);
  }
  Integer num;
  Integer den;
  mpz_pow_ui(num.get_mpz_t(), base.numerator().get_mpz_t(),
             static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), base.denominator().get_mpz_t(),
             static_cast<unsigned long>(exponent));
  return Rational(num, den);
}

Integer pow2_minus_1(unsigned long k) {
  Integer one = 1;
  return (one << k) - 1;
}

}  // namespace tailsum
