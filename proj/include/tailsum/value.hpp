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

#ifndef TAILSUM_VALUE_HPP
#define TAILSUM_VALUE_HPP

#include <string>
#include <variant>

#include "tailsum/bigfloat.hpp"
#include "tailsum/decimal.hpp"
#include "tailsum/rational.hpp"

namespace tailsum {

/// A computed quantity in one of the two numeric modes: exact rational or
/// high-precision float. A summation run never mixes the two; reports carry
/// Value so both modes share one result type.
class Value {
 public:
  Value() : v_(Rational(0)) {}
  Value(Rational r) : v_(std::move(r)) {}    // NOLINT: implicit by design
  Value(BigFloat f) : v_(std::move(f)) {}    // NOLINT: implicit by design

  bool is_exact() const { return std::holds_alternative<Rational>(v_); }

  const Rational& rational() const {
    if (!is_exact()) throw InvalidArgument("value: not in exact mode");
    return std::get<Rational>(v_);
  }
  const BigFloat& real() const {
    if (is_exact()) throw InvalidArgument("value: not in approx mode");
    return std::get<BigFloat>(v_);
  }

  bool is_zero() const {
    return is_exact() ? std::get<Rational>(v_).is_zero()
                      : std::get<BigFloat>(v_).is_zero();
  }

  std::string to_decimal(long significant_digits) const {
    return is_exact() ? tailsum::to_decimal(std::get<Rational>(v_), significant_digits)
                      : std::get<BigFloat>(v_).to_decimal(significant_digits);
  }

 private:
  std::variant<Rational, BigFloat> v_;
};

/// Scalar operations the summation engines need, uniform over the two
/// numeric modes. `like` supplies the precision context in approx mode.
template <typename Num>
struct NumOps;

template <>
struct NumOps<Rational> {
  static Rational lift(const Rational& r, const Rational& /*like*/) { return r; }
  static Rational zero(const Rational& /*like*/) { return Rational(0); }
  static Rational abs(const Rational& v) { return tailsum::abs(v); }
  static Rational pow_int(const Rational& base, long k) { return tailsum::pow(base, k); }
  static bool is_nonneg_integer(const Rational& v) {
    return v.is_integer() && v.sign() >= 0;
  }
  static long to_long(const Rational& v) { return v.numerator().get_si(); }
};

template <>
struct NumOps<BigFloat> {
  static BigFloat lift(const Rational& r, const BigFloat& like) {
    return BigFloat(r, like.precision_bits());
  }
  static BigFloat zero(const BigFloat& like) { return BigFloat(like.precision_bits()); }
  static BigFloat abs(const BigFloat& v) { return tailsum::abs(v); }
  static BigFloat pow_int(const BigFloat& base, long k) { return BigFloat::pow(base, k); }
  static bool is_nonneg_integer(const BigFloat& v) {
    return v.is_integer() && v.sign() >= 0;
  }
  static long to_long(const BigFloat& v) { return v.to_long(); }
};

}  // namespace tailsum

#endif  // TAILSUM_VALUE_HPP
