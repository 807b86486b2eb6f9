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

#include "tailsum/term_function.hpp"

#include <algorithm>

namespace tailsum {

InversePower::InversePower(long exponent) : exponent_(exponent) {
  if (exponent < 1) {
    throw InvalidArgument("inverse power: exact mode requires an integer exponent >= 1");
  }
}

Rational InversePower::derivative(int k, const Rational& x) const {
  if (k < 0) {
    throw InvalidArgument("inverse power: derivative order must be >= 0");
  }
  if (x.sign() <= 0) {
    throw DomainViolation("inverse power: abscissa must be positive");
  }
  Integer rising = 1;  // n(n+1)...(n+k-1)
  for (int i = 0; i < k; ++i) {
    rising *= exponent_ + i;
  }
  if (k % 2 == 1) rising = -rising;
  return Rational(rising) / pow(x, exponent_ + k);
}

Rational InversePower::tail_integral(const Rational& x) const {
  if (exponent_ <= 1) {
    throw DivergentSeries(
        "inverse power: tail integral diverges for exponent <= 1 "
        "(the series has no finite sum)");
  }
  if (x.sign() <= 0) {
    throw DomainViolation("inverse power: abscissa must be positive");
  }
  return Rational(1) / (Rational(exponent_ - 1) * pow(x, exponent_ - 1));
}

std::string InversePower::description() const {
  return "1/x^" + std::to_string(exponent_);
}

InversePowerApprox::InversePowerApprox(const Rational& exponent,
                                       mpfr_prec_t precision_bits)
    : exponent_(exponent, precision_bits) {
  if (exponent.sign() <= 0) {
    throw InvalidArgument("inverse power: exponent must be positive");
  }
}

BigFloat InversePowerApprox::derivative(int k, const BigFloat& x) const {
  if (k < 0) {
    throw InvalidArgument("inverse power: derivative order must be >= 0");
  }
  if (x.sign() <= 0) {
    throw DomainViolation("inverse power: abscissa must be positive");
  }
  const mpfr_prec_t prec = std::max(exponent_.precision_bits(), x.precision_bits());
  BigFloat rising(1, prec);
  for (int i = 0; i < k; ++i) {
    rising *= exponent_ + BigFloat(i, prec);
  }
  if (k % 2 == 1) rising = -rising;
  return rising / BigFloat::pow(x, exponent_ + BigFloat(k, prec));
}

BigFloat InversePowerApprox::tail_integral(const BigFloat& x) const {
  if (!supports_tail_integral()) {
    throw DivergentSeries(
        "inverse power: tail integral diverges for exponent <= 1 "
        "(the series has no finite sum)");
  }
  if (x.sign() <= 0) {
    throw DomainViolation("inverse power: abscissa must be positive");
  }
  const mpfr_prec_t prec = std::max(exponent_.precision_bits(), x.precision_bits());
  const BigFloat one(1, prec);
  const BigFloat nm1 = exponent_ - one;
  return one / (nm1 * BigFloat::pow(x, nm1));
}

bool InversePowerApprox::supports_tail_integral() const {
  return BigFloat(1, exponent_.precision_bits()) < exponent_;
}

std::string InversePowerApprox::description() const {
  return "1/x^n (approx mode)";
}

}  // namespace tailsum
