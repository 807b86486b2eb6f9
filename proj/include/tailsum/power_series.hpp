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

#ifndef TAILSUM_POWER_SERIES_HPP
#define TAILSUM_POWER_SERIES_HPP

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "tailsum/rational.hpp"

namespace tailsum {

/// Truncated formal power series over exact rationals.
///
/// coefficient(k) is the coefficient of z^k; order() is the count of
/// retained coefficients. Arithmetic truncates to the shorter operand —
/// never silently extends.
class PowerSeries {
 public:
  PowerSeries() = default;
  explicit PowerSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {}
  PowerSeries(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) {}

  static PowerSeries zero(std::size_t order);

  std::size_t order() const { return coeffs_.size(); }
  bool empty() const { return coeffs_.empty(); }
  const Rational& operator[](std::size_t k) const { return coeffs_[k]; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational& at(std::size_t k) { return coeffs_.at(k); }

  PowerSeries truncated(std::size_t order) const;

  /// Substitutes z -> c*z (coefficient k picks up the factor c^k).
  PowerSeries scaled_argument(const Rational& c) const;

  /// Formal d/dz; result has order() - 1.
  PowerSeries derivative() const;

  friend bool operator==(const PowerSeries& a, const PowerSeries& b) = default;

 private:
  std::vector<Rational> coeffs_;
};

/// Cauchy product, truncated to min(order(a), order(b)).
PowerSeries ps_mul(const PowerSeries& a, const PowerSeries& b);

PowerSeries ps_add(const PowerSeries& a, const PowerSeries& b);
PowerSeries ps_sub(const PowerSeries& a, const PowerSeries& b);
PowerSeries ps_scale(const PowerSeries& a, const Rational& c);

/// Multiplicative inverse: ps_mul(a, ps_reciprocal(a)) is the unit series
/// to full retained order. Requires a nonzero constant term.
PowerSeries ps_reciprocal(const PowerSeries& a);

/// (1, 0, 0, ..., 0) of the given order.
PowerSeries unit_series(std::size_t order);

/// 1 + z/2 + z^2/6 + z^3/24 + ...; coefficient k is 1/(k+1)!.
/// This is (e^z - 1)/z, the multiplier whose reciprocal carries the
/// direct-summation weights.
PowerSeries em_aux(std::size_t order);

/// 2 + z + z^2/2 + z^3/6 + ...; the expansion of 1 + e^z, whose
/// reciprocal carries the alternating-summation weights.
PowerSeries boole_aux(std::size_t order);

/// A series with a single 1/t pole: principal/t + regular(t).
/// Houses the odd auxiliary series u of both summation cases
/// (principal 1 for the direct case, 0 for the alternating case).
struct LaurentLike {
  Rational principal;
  PowerSeries regular;

  friend bool operator==(const LaurentLike& a, const LaurentLike& b) = default;
};

/// du/dt + u*u - 1, computed exactly. The 1/t^2 contributions
/// (principal^2 - principal) cancel symbolically whenever principal is
/// 0 or 1; any other principal is rejected since the result could not
/// be represented. The returned principal is the residual's 1/t
/// coefficient; the regular part is truncated one order below u.
LaurentLike ode_residual(const LaurentLike& u);

}  // namespace tailsum

#endif  // TAILSUM_POWER_SERIES_HPP
