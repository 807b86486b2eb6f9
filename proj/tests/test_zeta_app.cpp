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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <vector>

#include "tailsum/decimal.hpp"
#include "tailsum/zeta.hpp"

using tailsum::OutputRecord;
using tailsum::Rational;

namespace {

Rational relative_error(const Rational& got, const Rational& want) {
  return abs(got - want) / abs(want);
}

Rational tolerance(long exponent10) {
  return pow(Rational(10), -exponent10);
}

// Independent ln-2 oracle: averaged alternating partial sums of the
// alternating harmonic series; exact and good to ~1e-20 at 64 terms.
Rational averaged_ln2() {
  std::vector<Rational> sums;
  Rational acc(0);
  for (int m = 1; m <= 64; ++m) {
    Rational term(1, m);
    acc += (m % 2 == 1) ? term : -term;
    sums.push_back(acc);
  }
  while (sums.size() > 1) {
    for (std::size_t i = 0; i + 1 < sums.size(); ++i) {
      sums[i] = (sums[i] + sums[i + 1]) * Rational(1, 2);
    }
    sums.pop_back();
  }
  return sums.front();
}

}  // namespace

TEST_CASE("the embedded pi constant") {
  // 201 significant digits (the leading 3 plus 200 decimals) and the point.
  CHECK(std::strlen(tailsum::pi_digits()) == 202);
  CHECK(std::string(tailsum::pi_digits(), 21) == "3.1415926535897932384");
  CHECK(std::string(tailsum::pi_provenance()).size() > 0);
  const Rational& p = tailsum::pi_rational();
  CHECK(p > Rational(3));
  CHECK(p < Rational(22, 7));
  CHECK(p == Rational::from_string(tailsum::pi_digits()));
  // Against an independent 30-digit literal.
  const Rational approx = Rational::from_string("3.14159265358979323846264338328");
  CHECK(abs(p - approx) < pow(Rational(10), -28));
}

TEST_CASE("zeta(2) reproduces pi^2/6") {
  OutputRecord rec = tailsum::zeta(2);
  CHECK(rec.mode == "exact");
  REQUIRE(rec.exact.has_value());
  CHECK(rec.split == 10);
  CHECK(rec.value_decimal(21) == "1.64493406684822643647");

  OutputRecord via = tailsum::zeta_via_pi(2);
  CHECK(relative_error(*rec.exact, *via.exact) <= tolerance(18));
}

TEST_CASE("zeta agrees with the pi identities for n = 2, 4, 6, 8, 10") {
  for (long n : {2L, 4L, 6L, 8L, 10L}) {
    OutputRecord direct = tailsum::zeta(n);
    OutputRecord via = tailsum::zeta_via_pi(n);
    CHECK(relative_error(*direct.exact, *via.exact) <= tolerance(18));
  }
}

TEST_CASE("the identities extend to the 34th power") {
  for (long k = 1; k <= 17; ++k) {
    OutputRecord direct = tailsum::zeta(2 * k);
    OutputRecord via = tailsum::zeta_via_pi(2 * k);
    CHECK(relative_error(*direct.exact, *via.exact) <= tolerance(18));
  }
}

TEST_CASE("zeta_via_pi values") {
  CHECK(*tailsum::zeta_via_pi(2).exact ==
        Rational(1, 6) * pow(tailsum::pi_rational(), 2));
  CHECK(*tailsum::zeta_via_pi(6).exact ==
        Rational(1, 945) * pow(tailsum::pi_rational(), 6));
  // 18 significant digits of pi^4/90.
  CHECK(tailsum::zeta_via_pi(4).value_decimal(18) == "1.08232323371113819");
  CHECK_THROWS_AS(tailsum::zeta_via_pi(3), tailsum::InvalidArgument);
  CHECK_THROWS_AS(tailsum::zeta_via_pi(0), tailsum::InvalidArgument);
}

TEST_CASE("zeta rejects divergent exponents with a harmonic-series message") {
  CHECK_THROWS_WITH_AS(tailsum::zeta(1),
                       doctest::Contains("harmonic"), tailsum::DivergentSeries);
  CHECK_THROWS_AS(tailsum::zeta(0), tailsum::DivergentSeries);
  CHECK_THROWS_AS(tailsum::zeta(-4), tailsum::DivergentSeries);
}

TEST_CASE("eta(1) lands on ln 2") {
  OutputRecord rec = tailsum::eta(1);
  REQUIRE(rec.exact.has_value());
  const Rational ln2 = averaged_ln2();
  CHECK(tailsum::to_decimal(ln2, 20) == "0.69314718055994530942");
  CHECK(abs(*rec.exact - ln2) <= tolerance(12));
  CHECK(abs(*rec.exact - ln2) <= rec.error_estimate.rational());
}

TEST_CASE("eta(2) lands on pi^2/12") {
  OutputRecord rec = tailsum::eta(2);
  const Rational reference = *tailsum::zeta_via_pi(2).exact / Rational(2);
  CHECK(abs(*rec.exact - reference) <= tolerance(12));
}

TEST_CASE("eta matches (1 - 2^(1-n)) zeta for even n") {
  for (long n : {2L, 4L, 6L}) {
    OutputRecord rec = tailsum::eta(n);
    const Rational factor = Rational(1) - pow(Rational(2), 1 - n);
    const Rational reference = factor * *tailsum::zeta_via_pi(n).exact;
    CHECK(relative_error(*rec.exact, reference) <= tolerance(12));
  }
}

TEST_CASE("eta splits agree within summed estimates") {
  tailsum::RunOptions wide;
  wide.split = 20;
  OutputRecord a = tailsum::eta(2);
  OutputRecord b = tailsum::eta(2, wide);
  CHECK(abs(*a.exact - *b.exact) <=
        a.error_estimate.rational() + b.error_estimate.rational());
}

TEST_CASE("eta input validation") {
  CHECK_THROWS_AS(tailsum::eta(0), tailsum::InvalidArgument);
  tailsum::RunOptions bad;
  bad.split = 1;
  CHECK_THROWS_AS(tailsum::eta(2, bad), tailsum::InvalidArgument);
}

TEST_CASE("record bookkeeping") {
  OutputRecord rec = tailsum::zeta(2);
  CHECK(rec.terms_used == rec.k_star + 1);
  CHECK(rec.k_star == 39);
  CHECK(rec.error_estimate.rational() > Rational(0));
  REQUIRE(rec.detail.has_value());
  Rational acc = rec.detail->base_value.rational();
  for (const auto& t : rec.detail->terms) acc += t.rational();
  CHECK(acc == *rec.exact);
}

TEST_CASE("generic runs choose the numeric mode by exponent integrality") {
  OutputRecord exact_run = tailsum::sum_inverse_power(
      Rational(3), false, 1, 10, tailsum::TruncationPolicy::smallest_term(40));
  CHECK(exact_run.mode == "exact");
  CHECK(exact_run.exact.has_value());

  OutputRecord approx_run = tailsum::sum_inverse_power(
      Rational(5, 2), false, 1, 10, tailsum::TruncationPolicy::smallest_term(40));
  CHECK(approx_run.mode == "approx");
  CHECK_FALSE(approx_run.exact.has_value());
  // zeta(5/2) reference to 20 digits.
  const Rational reference = Rational::from_string("1.3414872572509171798");
  tailsum::BigFloat diff =
      abs(approx_run.value.real() -
          tailsum::BigFloat(reference, approx_run.value.real().precision_bits()));
  CHECK(diff < tailsum::BigFloat(tolerance(10), 64));

  CHECK_THROWS_AS(tailsum::sum_inverse_power(
                      Rational(1, 2), false, 1, 10,
                      tailsum::TruncationPolicy::smallest_term(40)),
                  tailsum::DivergentSeries);
  CHECK_THROWS_AS(tailsum::sum_inverse_power(
                      Rational(-2), true, 1, 10,
                      tailsum::TruncationPolicy::smallest_term(40)),
                  tailsum::InvalidArgument);
}

TEST_CASE("verify suite passes and the fault fixture fails") {
  tailsum::CheckReport clean = tailsum::verify_suite();
  CHECK(clean.all_passed());
  CHECK(clean.checks.size() >= 16);

  tailsum::VerifyOptions degenerate;
  degenerate.order = 2;
  CHECK(tailsum::verify_suite(degenerate).all_passed());

  tailsum::VerifyOptions faulty;
  faulty.order = 12;
  faulty.inject_fault = "bernoulli";
  tailsum::CheckReport broken = tailsum::verify_suite(faulty);
  CHECK_FALSE(broken.all_passed());
  bool ratio_failed = false;
  for (const auto& c : broken.checks) {
    if (c.name == "ratio-law" && !c.passed) ratio_failed = true;
  }
  CHECK(ratio_failed);
}
