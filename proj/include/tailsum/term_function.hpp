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

#ifndef TAILSUM_TERM_FUNCTION_HPP
#define TAILSUM_TERM_FUNCTION_HPP

#include <memory>
#include <string>

#include "tailsum/value.hpp"

namespace tailsum {

/// The term-function contract: a function X of x with derivatives of any
/// order and, when it exists in closed form, the tail integral over
/// [x, infinity). Instances are immutable and freely shareable.
///
/// Num is the run's scalar type: Rational for the exact mode, BigFloat
/// for the approximate mode. The two are never mixed within one run.
template <typename Num>
class TermFunction {
 public:
  virtual ~TermFunction() = default;

  Num eval(const Num& x) const { return derivative(0, x); }

  /// d^k X / dx^k at x, k >= 0.
  virtual Num derivative(int k, const Num& x) const = 0;

  /// integral of X over [x, infinity); throws DivergentSeries when
  /// supports_tail_integral() is false.
  virtual Num tail_integral(const Num& x) const = 0;

  virtual bool supports_tail_integral() const = 0;

  virtual std::string description() const = 0;
};

/// X = 1/x^n with integer n >= 1, fully exact over rationals.
/// derivative(k, x) = (-1)^k * n(n+1)...(n+k-1) / x^(n+k);
/// tail_integral(x) = 1/((n-1) x^(n-1)), defined only for n > 1.
class InversePower final : public TermFunction<Rational> {
 public:
  explicit InversePower(long exponent);

  Rational derivative(int k, const Rational& x) const override;
  Rational tail_integral(const Rational& x) const override;
  bool supports_tail_integral() const override { return exponent_ > 1; }
  std::string description() const override;

  long exponent() const { return exponent_; }

 private:
  long exponent_;
};

/// X = 1/x^n for positive real n, evaluated in high-precision floats.
class InversePowerApprox final : public TermFunction<BigFloat> {
 public:
  InversePowerApprox(const Rational& exponent, mpfr_prec_t precision_bits);

  BigFloat derivative(int k, const BigFloat& x) const override;
  BigFloat tail_integral(const BigFloat& x) const override;
  bool supports_tail_integral() const override;
  std::string description() const override;

  mpfr_prec_t precision_bits() const { return exponent_.precision_bits(); }

 private:
  BigFloat exponent_;
};

/// |analytic k-th derivative - k-th central finite difference| at x with
/// step h. For a correct provider the residual scales as O(h^2); this is
/// the independent check for any derivative implementation.
template <typename Num>
Num fd_derivative_check(const TermFunction<Num>& f, int k, const Num& x, const Num& h);

// --- implementation ---

namespace detail {

inline Integer binomial(long n, long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

}  // namespace detail

template <typename Num>
Num fd_derivative_check(const TermFunction<Num>& f, int k, const Num& x, const Num& h) {
  using Ops = NumOps<Num>;
  if (k < 1) {
    throw InvalidArgument("fd_derivative_check: derivative order must be >= 1");
  }
  const Num zero = Ops::zero(x);
  if (!(zero < h)) {
    throw InvalidArgument("fd_derivative_check: step must be positive");
  }

  // k-th power of the central difference operator:
  //   sum_{i=0}^{k} (-1)^i C(k,i) f(x + (k/2 - i) h) / h^k
  Num acc = Ops::zero(x);
  for (int i = 0; i <= k; ++i) {
    Rational coeff = Rational(detail::binomial(k, i));
    if (i % 2 == 1) coeff = -coeff;
    const Rational offset(k - 2 * i, 2);
    const Num xi = x + Ops::lift(offset, x) * h;
    acc += Ops::lift(coeff, x) * f.eval(xi);
  }
  const Num fd = acc / Ops::pow_int(h, k);
  return Ops::abs(f.derivative(k, x) - fd);
}

}  // namespace tailsum

#endif  // TAILSUM_TERM_FUNCTION_HPP
