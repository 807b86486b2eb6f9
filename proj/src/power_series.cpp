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

#include "tailsum/power_series.hpp"

#include <algorithm>

namespace tailsum {

PowerSeries PowerSeries::zero(std::size_t order) {
  return PowerSeries(std::vector<Rational>(order, Rational(0)));
}

PowerSeries PowerSeries::truncated(std::size_t order) const {
  if (order > coeffs_.size()) {
    throw InvalidArgument("power series: truncation cannot extend the series");
  }
  return PowerSeries(std::vector<Rational>(coeffs_.begin(),
                                           coeffs_.begin() + static_cast<long>(order)));
}

PowerSeries PowerSeries::scaled_argument(const Rational& c) const {
  std::vector<Rational> out(coeffs_.size());
  Rational factor(1);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    out[k] = coeffs_[k] * factor;
    factor *= c;
  }
  return PowerSeries(std::move(out));
}

PowerSeries PowerSeries::derivative() const {
  if (coeffs_.empty()) {
    throw InvalidArgument("power series: derivative of empty series");
  }
  std::vector<Rational> out;
  out.reserve(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) {
    out.push_back(coeffs_[k] * Rational(static_cast<long>(k)));
  }
  return PowerSeries(std::move(out));
}

namespace {

std::size_t common_order(const PowerSeries& a, const PowerSeries& b) {
  if (a.empty() || b.empty()) {
    throw InvalidArgument("power series: operation on empty series");
  }
  return std::min(a.order(), b.order());
}

}  // namespace

PowerSeries ps_mul(const PowerSeries& a, const PowerSeries& b) {
  const std::size_t n = common_order(a, b);
  std::vector<Rational> out(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < n; ++j) {
      out[i + j] += a[i] * b[j];
    }
  }
  return PowerSeries(std::move(out));
}

PowerSeries ps_add(const PowerSeries& a, const PowerSeries& b) {
  const std::size_t n = common_order(a, b);
  std::vector<Rational> out(n);
  for (std::size_t k = 0; k < n; ++k) out[k] = a[k] + b[k];
  return PowerSeries(std::move(out));
}

PowerSeries ps_sub(const PowerSeries& a, const PowerSeries& b) {
  const std::size_t n = common_order(a, b);
  std::vector<Rational> out(n);
  for (std::size_t k = 0; k < n; ++k) out[k] = a[k] - b[k];
  return PowerSeries(std::move(out));
}

PowerSeries ps_scale(const PowerSeries& a, const Rational& c) {
  std::vector<Rational> out(a.order());
  for (std::size_t k = 0; k < a.order(); ++k) out[k] = a[k] * c;
  return PowerSeries(std::move(out));
}

PowerSeries ps_reciprocal(const PowerSeries& a) {
  if (a.empty()) {
    throw InvalidArgument("power series: reciprocal of empty series");
  }
  if (a[0].is_zero()) {
    throw NonInvertibleSeries("power series: zero constant term has no reciprocal");
  }
  const std::size_t n = a.order();
  std::vector<Rational> r(n);
  const Rational inv0 = Rational(1) / a[0];
  r[0] = inv0;
  for (std::size_t m = 1; m < n; ++m) {
    Rational acc(0);
    for (std::size_t i = 1; i <= m; ++i) {
      acc += a[i] * r[m - i];
    }
    r[m] = -acc * inv0;
  }
  return PowerSeries(std::move(r));
}

PowerSeries unit_series(std::size_t order) {
  if (order == 0) {
    throw InvalidArgument("power series: order must be positive");
  }
  std::vector<Rational> c(order, Rational(0));
  c[0] = Rational(1);
  return PowerSeries(std::move(c));
}

PowerSeries em_aux(std::size_t order) {
  if (order == 0) {
    throw InvalidArgument("em_aux: order must be positive");
  }
  std::vector<Rational> c(order);
  Integer factorial = 1;  // (k+1)! by running product
  for (std::size_t k = 0; k < order; ++k) {
    factorial *= static_cast<long>(k + 1);
    c[k] = Rational(Integer(1), factorial);
  }
  return PowerSeries(std::move(c));
}

PowerSeries boole_aux(std::size_t order) {
  if (order == 0) {
    throw InvalidArgument("boole_aux: order must be positive");
  }
  std::vector<Rational> c(order);
  c[0] = Rational(2);
  Integer factorial = 1;
  for (std::size_t k = 1; k < order; ++k) {
    factorial *= static_cast<long>(k);
    c[k] = Rational(Integer(1), factorial);
  }
  return PowerSeries(std::move(c));
}

LaurentLike ode_residual(const LaurentLike& u) {
  const Rational& p = u.principal;
  const std::size_t n = u.regular.order();
  if (n == 0) {
    throw InvalidArgument("ode_residual: u must have a regular part");
  }
  // The t^-2 contributions are -p (from du/dt) and p^2 (from u*u); they
  // cancel exactly when p is 0 or 1, the two shapes u takes here.
  if (!(p * p - p).is_zero()) {
    throw InvalidArgument("ode_residual: 1/t^2 terms do not cancel for this principal");
  }
  if (n == 1 && !p.is_zero()) {
    throw InvalidArgument("ode_residual: regular part too short");
  }

  const std::size_t out_order = (n == 1) ? 1 : n - 1;
  const PowerSeries square = ps_mul(u.regular, u.regular).truncated(out_order);

  std::vector<Rational> reg(out_order, Rational(0));
  for (std::size_t m = 0; m < out_order; ++m) {
    Rational v = square[m];
    if (m + 1 < n) {
      // d/dt of the regular part, plus the 2p/t * regular cross terms.
      v += u.regular[m + 1] * Rational(static_cast<long>(m + 1));
      v += Rational(2) * p * u.regular[m + 1];
    }
    if (m == 0) v -= Rational(1);
    reg[m] = v;
  }
  return LaurentLike{Rational(2) * p * u.regular[0], PowerSeries(std::move(reg))};
}

}  // namespace tailsum
