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

#include <random>
#include <vector>

#include "tailsum/power_series.hpp"

using tailsum::LaurentLike;
using tailsum::PowerSeries;
using tailsum::Rational;

namespace {

PowerSeries random_series(std::mt19937& rng, std::size_t order) {
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 9);
  std::vector<Rational> c(order);
  for (auto& x : c) x = Rational(num(rng), den(rng));
  return PowerSeries(std::move(c));
}

// The auxiliary series u of the direct case through t^9, from the first
// five table values A=1/6, B=1/90, C=1/945, D=1/9450, E=1/93555:
// u = 1/t + 2At - 2Bt^3 + 2Ct^5 - 2Dt^7 + 2Et^9.
LaurentLike direct_case_u() {
  std::vector<Rational> reg(10, Rational(0));
  reg[1] = Rational(2) * Rational(1, 6);
  reg[3] = Rational(-2) * Rational(1, 90);
  reg[5] = Rational(2) * Rational(1, 945);
  reg[7] = Rational(-2) * Rational(1, 9450);
  reg[9] = Rational(2) * Rational(1, 93555);
  return LaurentLike{Rational(1), PowerSeries(std::move(reg))};
}

// u of the alternating case through t^9: t - t^3/3 + 2t^5/15 - 17t^7/315
// + 62t^9/2835.
LaurentLike alternating_case_u() {
  std::vector<Rational> reg(10, Rational(0));
  reg[1] = Rational(1);
  reg[3] = Rational(-1, 3);
  reg[5] = Rational(2, 15);
  reg[7] = Rational(-17, 315);
  reg[9] = Rational(62, 2835);
  return LaurentLike{Rational(0), PowerSeries(std::move(reg))};
}

bool all_zero(const PowerSeries& s) {
  for (std::size_t k = 0; k < s.order(); ++k) {
    if (!s[k].is_zero()) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("ps_mul on the unit series is the identity") {
  std::mt19937 rng(3);
  PowerSeries a = random_series(rng, 3);
  CHECK(ps_mul(tailsum::unit_series(3), a) == a);
}

TEST_CASE("ps_mul truncates to the shorter order") {
  PowerSeries a{Rational(1), Rational(1)};
  CHECK(ps_mul(a, a) == PowerSeries{Rational(1), Rational(2)});

  PowerSeries longer{Rational(1), Rational(1), Rational(1)};
  CHECK(ps_mul(a, longer).order() == 2);
}

TEST_CASE("ps_mul rejects empty series") {
  CHECK_THROWS_AS(ps_mul(PowerSeries{}, tailsum::unit_series(2)),
                  tailsum::InvalidArgument);
}

TEST_CASE("em_aux holds the shifted inverse factorials") {
  CHECK(tailsum::em_aux(1) == PowerSeries{Rational(1)});
  CHECK(tailsum::em_aux(4) ==
        PowerSeries{Rational(1), Rational(1, 2), Rational(1, 6), Rational(1, 24)});
  CHECK(tailsum::em_aux(6)[5] == Rational(1, 720));
  CHECK_THROWS_AS(tailsum::em_aux(0), tailsum::InvalidArgument);
}

TEST_CASE("boole_aux holds the expansion of 1 + e^z") {
  CHECK(tailsum::boole_aux(1) == PowerSeries{Rational(2)});
  CHECK(tailsum::boole_aux(5) ==
        PowerSeries{Rational(2), Rational(1), Rational(1, 2), Rational(1, 6),
                    Rational(1, 24)});
}

TEST_CASE("reciprocal inverts exactly") {
  CHECK(tailsum::ps_reciprocal(PowerSeries{Rational(1)}) == PowerSeries{Rational(1)});

  // Oracle for the frozen value: multiplying back must give the unit.
  PowerSeries a{Rational(1), Rational(1), Rational(1, 2)};
  PowerSeries r = tailsum::ps_reciprocal(a);
  CHECK(r == PowerSeries{Rational(1), Rational(-1), Rational(1, 2)});
  CHECK(ps_mul(a, r) == tailsum::unit_series(3));
}

TEST_CASE("reciprocal of em_aux carries the direct weights") {
  PowerSeries v = tailsum::ps_reciprocal(tailsum::em_aux(8));
  CHECK(v == PowerSeries{Rational(1), Rational(-1, 2), Rational(1, 12), Rational(0),
                         Rational(-1, 720), Rational(0), Rational(1, 30240),
                         Rational(0)});
  CHECK(ps_mul(v, tailsum::em_aux(8)) == tailsum::unit_series(8));
}

TEST_CASE("reciprocal of boole_aux multiplies back to the unit") {
  PowerSeries v = tailsum::ps_reciprocal(tailsum::boole_aux(6));
  CHECK(ps_mul(tailsum::boole_aux(6), v) == tailsum::unit_series(6));
}

TEST_CASE("reciprocal rejects a zero constant term") {
  CHECK_THROWS_AS(tailsum::ps_reciprocal(PowerSeries{Rational(0), Rational(1)}),
                  tailsum::NonInvertibleSeries);
}

TEST_CASE("reciprocal round-trips for both auxiliaries at every order up to 40") {
  for (std::size_t n = 1; n <= 40; ++n) {
    CHECK(ps_mul(tailsum::em_aux(n), tailsum::ps_reciprocal(tailsum::em_aux(n))) ==
          tailsum::unit_series(n));
    CHECK(ps_mul(tailsum::boole_aux(n), tailsum::ps_reciprocal(tailsum::boole_aux(n))) ==
          tailsum::unit_series(n));
  }
}

TEST_CASE("multiplication is commutative and associative up to truncation") {
  std::mt19937 rng(20260809);
  std::uniform_int_distribution<std::size_t> order(1, 16);
  for (int i = 0; i < 60; ++i) {
    PowerSeries a = random_series(rng, order(rng));
    PowerSeries b = random_series(rng, order(rng));
    PowerSeries c = random_series(rng, order(rng));
    CHECK(ps_mul(a, b) == ps_mul(b, a));
    CHECK(ps_mul(ps_mul(a, b), c) == ps_mul(a, ps_mul(b, c)));
    CHECK(ps_add(a, b) == ps_add(b, a));
    CHECK(ps_sub(ps_add(a, b), b).truncated(1) == a.truncated(1));
  }
}

TEST_CASE("every produced coefficient is in lowest terms") {
  std::mt19937 rng(11);
  PowerSeries a = random_series(rng, 8);
  a.at(0) = Rational(3, 7);  // keep it invertible
  PowerSeries r = tailsum::ps_reciprocal(a);
  for (std::size_t k = 0; k < r.order(); ++k) {
    tailsum::Integer g;
    mpz_gcd(g.get_mpz_t(), r[k].numerator().get_mpz_t(),
            r[k].denominator().get_mpz_t());
    CHECK((r[k].is_zero() || g == 1));
    CHECK(r[k].denominator() > 0);
  }
}

TEST_CASE("derivative and argument scaling") {
  PowerSeries s{Rational(5), Rational(3), Rational(1, 2)};
  CHECK(s.derivative() == PowerSeries{Rational(3), Rational(1)});
  CHECK(s.scaled_argument(Rational(1, 2)) ==
        PowerSeries{Rational(5), Rational(3, 2), Rational(1, 8)});
}

TEST_CASE("ode residual of the zero function is -1") {
  LaurentLike u{Rational(0), PowerSeries{Rational(0)}};
  LaurentLike r = tailsum::ode_residual(u);
  CHECK(r.principal == Rational(0));
  CHECK(r.regular.order() == 1);
  CHECK(r.regular[0] == Rational(-1));
}

TEST_CASE("ode residual vanishes for the direct-case table through t^8") {
  LaurentLike r = tailsum::ode_residual(direct_case_u());
  CHECK(r.principal == Rational(0));
  CHECK(r.regular.order() == 9);
  CHECK(all_zero(r.regular));
}

TEST_CASE("ode residual vanishes for the alternating-case table through t^8") {
  LaurentLike r = tailsum::ode_residual(alternating_case_u());
  CHECK(r.principal == Rational(0));
  CHECK(all_zero(r.regular));
}

TEST_CASE("ode residual rejects principals other than 0 and 1") {
  LaurentLike u{Rational(2), PowerSeries{Rational(0), Rational(0)}};
  CHECK_THROWS_AS(tailsum::ode_residual(u), tailsum::InvalidArgument);
}

TEST_CASE("direct-case bridge: t*u - t re-expanded in z matches the reciprocal") {
  // With u in the variable t, the series t*u - t is
  // 1 - t + 2At^2 - 2Bt^4 + 2Ct^6 - ...; substituting t = z/2 must give
  // the reciprocal of em_aux coefficient by coefficient.
  LaurentLike u = direct_case_u();
  std::vector<Rational> tu(u.regular.order() + 1, Rational(0));
  tu[0] = u.principal;  // t * (1/t)
  for (std::size_t k = 0; k < u.regular.order(); ++k) {
    tu[k + 1] = u.regular[k];
  }
  tu[1] -= Rational(1);  // minus t
  PowerSeries in_z = PowerSeries(std::move(tu)).scaled_argument(Rational(1, 2));
  CHECK(in_z == tailsum::ps_reciprocal(tailsum::em_aux(in_z.order())));
}
