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

#include "tailsum/zeta.hpp"

#include <vector>

namespace tailsum {

namespace {

// 200 significant digits, rounded; cross-checked against standard
// tabulations of the constant.
constexpr const char* kPiDigits =
    "3."
    "14159265358979323846264338327950288419716939937510"
    "58209749445923078164062862089986280348253421170679"
    "82148086513282306647093844609550582231725359408128"
    "48111745028410270193852110555964462294895493038196";

}  // namespace

const char* pi_digits() { return kPiDigits; }

const char* pi_provenance() {
  return "embedded 200-significant-digit constant, verified against "
         "published high-precision tabulations; never computed at runtime";
}

const Rational& pi_rational() {
  static const Rational value = Rational::from_string(kPiDigits);
  return value;
}

namespace {

Rational power_of_ten(unsigned long k) {
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, k);
  return Rational(p);
}

OutputRecord record_from_report(SummationReport&& rep, long split) {
  OutputRecord rec;
  rec.value = rep.value;
  if (rep.value.is_exact()) {
    rec.exact = rep.value.rational();
    rec.mode = "exact";
  } else {
    rec.mode = "approx";
  }
  rec.terms_used = static_cast<long>(rep.terms.size());
  rec.k_star = rep.k_star;
  rec.error_estimate = rep.error_estimate;
  rec.split = split;
  rec.diverged = rep.diverged_before_converging;
  rec.detail = std::move(rep);
  return rec;
}

}  // namespace

OutputRecord zeta(long n, const RunOptions& options) {
  if (n <= 1) {
    throw DivergentSeries(
        "zeta(" + std::to_string(n) + ") diverges: at n = 1 this is the "
        "harmonic series, whose partial sums grow without bound");
  }
  if (options.split < 2) {
    throw InvalidArgument("zeta: split must be at least 2");
  }
  InversePower f(n);
  SummationReport rep = split_sum<Rational>(f, Rational(1), Rational(options.split),
                                            options.policy, /*alternating=*/false);
  return record_from_report(std::move(rep), options.split);
}

OutputRecord zeta_via_pi(long n) {
  if (n < 2 || n % 2 != 0) {
    throw InvalidArgument(
        "zeta_via_pi: the pi-power closed form exists for even n >= 2 only");
  }
  const Rational coefficient = bernoulli_like(static_cast<std::size_t>(n / 2))
                                   .values[static_cast<std::size_t>(n / 2 - 1)];
  const Rational value = coefficient * pow(pi_rational(), n);

  OutputRecord rec;
  rec.value = value;
  rec.exact = value;
  rec.mode = "exact";
  // The only inaccuracy is the 200-digit truncation of pi itself:
  // |d(c*pi^n)| <= c * n * pi^(n-1) * 5e-200, bounded loosely here.
  rec.error_estimate = Value(value * Rational(n) / power_of_ten(199));
  return rec;
}

OutputRecord eta(long n, const RunOptions& options) {
  if (n < 1) {
    throw InvalidArgument("eta: exponent must be a positive integer");
  }
  if (options.split < 2) {
    throw InvalidArgument("eta: split must be at least 2");
  }
  InversePower f(n);
  SummationReport rep = split_sum<Rational>(f, Rational(1), Rational(options.split),
                                            options.policy, /*alternating=*/true);
  return record_from_report(std::move(rep), options.split);
}

OutputRecord sum_inverse_power(const Rational& exponent, bool alternating,
                               long start, long split,
                               const TruncationPolicy& policy,
                               long precision_digits) {
  if (exponent.sign() <= 0) {
    throw InvalidArgument("sum: exponent must be positive");
  }
  if (split < start) {
    throw InvalidArgument("sum: split must not precede start");
  }

  if (exponent.is_integer()) {
    InversePower f(exponent.numerator().get_si());
    SummationReport rep = split_sum<Rational>(f, Rational(start), Rational(split),
                                              policy, alternating);
    return record_from_report(std::move(rep), split);
  }

  if (precision_digits < 10) precision_digits = 10;
  const mpfr_prec_t bits = BigFloat::bits_for_digits(precision_digits);
  InversePowerApprox f(exponent, bits);
  SummationReport rep = split_sum<BigFloat>(f, BigFloat(start, bits),
                                            BigFloat(split, bits), policy, alternating);
  return record_from_report(std::move(rep), split);
}

namespace {

// Repeated adjacent averaging of the alternating partial sums of
// sum (-1)^(m-1)/m^n. Exact, brute-force, independent of the engines;
// with 64 terms it is good to roughly 1e-20.
Rational averaged_alternating_reference(long n, int terms) {
  std::vector<Rational> sums;
  sums.reserve(static_cast<std::size_t>(terms));
  Rational acc(0);
  for (int m = 1; m <= terms; ++m) {
    Rational term = Rational(1) / pow(Rational(m), n);
    acc += (m % 2 == 1) ? term : -term;
    sums.push_back(acc);
  }
  const Rational half(1, 2);
  while (sums.size() > 1) {
    for (std::size_t i = 0; i + 1 < sums.size(); ++i) {
      sums[i] = (sums[i] + sums[i + 1]) * half;
    }
    sums.pop_back();
  }
  return sums.front();
}

void add_closeness_check(CheckReport& report, const std::string& name,
                         const Rational& got, const Rational& want,
                         const Rational& tolerance) {
  const Rational err = abs(got - want);
  const bool ok = err <= tolerance;
  report.add(name, ok,
             ok ? "" : "error " + to_decimal(err, 3) + " exceeds " + to_decimal(tolerance, 3));
}

}  // namespace

CheckReport verify_suite(const VerifyOptions& options) {
  CheckReport report = cross_check(options.order, make_tables(options.order, options.inject_fault));

  const std::string prefix(pi_digits(), 21);  // "3." plus 19 more digits
  report.add("pi-constant-prefix", prefix == "3.1415926535897932384",
             prefix == "3.1415926535897932384" ? "" : "unexpected leading digits: " + prefix);

  const Rational rel_tol = Rational(1) / power_of_ten(18);
  for (long n : {2L, 4L, 6L, 8L, 10L}) {
    const Rational direct = *zeta(n).exact;
    const Rational via_pi = *zeta_via_pi(n).exact;
    const Rational rel = abs(direct - via_pi) / via_pi;
    const bool ok = rel <= rel_tol;
    report.add("zeta-" + std::to_string(n) + "-pi-identity", ok,
               ok ? "" : "relative error " + to_decimal(rel, 3));
  }

  const Rational eta_tol = Rational(1) / power_of_ten(12);
  add_closeness_check(report, "eta-1-ln2", *eta(1).exact,
                      averaged_alternating_reference(1, 64), eta_tol);
  add_closeness_check(report, "eta-2-pi-identity", *eta(2).exact,
                      *zeta_via_pi(2).exact / Rational(2), eta_tol);

  return report;
}

}  // namespace tailsum
