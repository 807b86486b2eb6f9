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

#ifndef TAILSUM_COEFFICIENTS_HPP
#define TAILSUM_COEFFICIENTS_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "tailsum/power_series.hpp"
#include "tailsum/rational.hpp"

namespace tailsum {

enum class TableKind {
  bernoulli_like,  // A, B, C, ... (zeta(2k) = entry * pi^2k)
  tangent_like,    // the odd tanh-quotient coefficients
  em_weight,       // derivative weights of the direct tail formula
  boole_weight,    // derivative weights of the alternating tail formula
};

const char* table_kind_name(TableKind kind);
TableKind table_kind_from_name(const std::string& name);

/// An immutable prefix of one coefficient family.
struct CoefficientTable {
  TableKind kind = TableKind::bernoulli_like;
  std::vector<Rational> values;

  std::size_t count() const { return values.size(); }
  const Rational& operator[](std::size_t i) const { return values[i]; }

  friend bool operator==(const CoefficientTable& a, const CoefficientTable& b) = default;
};

/// First `count` entries A, B, C, D, E, ... generated by the quadratic
/// recurrence of the direct case: with u = 1/t + 2At - 2Bt^3 + 2Ct^5 - ...
/// substituted into du/dt + u*u - 1 = 0, matching powers of t gives
/// 6A = 1, 10B = 4AA, 14C = 8AB, 18D = 8AC + 4BB, 22E = 8(AD + BC), ...
/// All entries are strictly positive. Results are cached and extended
/// monotonically; repeated calls return identical values.
CoefficientTable bernoulli_like(std::size_t count);

/// First `count` entries of the alternating-case family generated from
/// u = t - At^3 + Bt^5 - Ct^7 + ... in the same differential equation:
/// 3A = 1, 5B = 2A, 7C = 2B + AA, 9D = 2C + 2AB, ...
CoefficientTable tangent_like(std::size_t count);

/// Signed derivative weights of the direct tail formula
///   S = integral + (1/2)X - (A/2) X' + (B/8) X''' - (C/32) X^(5) + ...
/// weight[0] = 1/2, weight[2k-1] = (-1)^k * bernoulli_like[k-1] / 2^(2k-1),
/// every even index >= 2 is zero.
CoefficientTable em_weights(std::size_t count);

/// Signed derivative weights of the alternating tail formula
///   S = (1/2)X - (1/4) X' + (A/16) X''' - (B/64) X^(5) + ...
/// weight[0] = 1/2, weight[1] = -1/4,
/// weight[2k-1] = (-1)^k * tangent_like[k-2] / 4^k for k >= 2,
/// every even index >= 2 is zero.
CoefficientTable boole_weights(std::size_t count);

/// The alternating weights rebuilt through the ratio law instead of the
/// tangent-family table: weight[2k-1] = (2^(2k) - 1) * em_weight[2k-1].
/// Must agree with boole_weights entry for entry.
CoefficientTable boole_weights_via_ratio(std::size_t count);

/// Entry k-1 is boole_weight[2k-1] / em_weight[2k-1], which equals
/// 2^(2k) - 1 exactly, for k = 1..count.
std::vector<Rational> weight_ratio_table(std::size_t count);

/// The auxiliary series u of each case over variable t, built from the
/// coefficient tables (direct case has the 1/t pole).
LaurentLike case1_u(std::size_t order);
LaurentLike case2_u(std::size_t order);

/// The weight generating functions over variable z, built from the
/// coefficient tables. These must reproduce ps_reciprocal(em_aux) and
/// ps_reciprocal(boole_aux) respectively.
PowerSeries em_v_series(std::size_t order);
PowerSeries boole_v_series(std::size_t order);

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;  // empty on pass
};

struct CheckReport {
  std::vector<CheckResult> checks;

  bool all_passed() const;
  void add(std::string name, bool passed, std::string detail = "");
};

/// The four tables used by one consistency run. `fault` optionally
/// corrupts one core entry before the dependent weights are derived,
/// so a checker self-test can observe the failure: "" (none),
/// "bernoulli" or "tangent".
struct TableSet {
  CoefficientTable bernoulli;
  CoefficientTable tangent;
  CoefficientTable em_w;
  CoefficientTable boole_w;
};

TableSet make_tables(std::size_t order, const std::string& fault = "");

/// Verifies the recurrence-built tables against the independent
/// power-series construction at the given order: unit products of the
/// generating functions, weight-vs-reciprocal agreement, the ratio law,
/// the ratio-built weight path, and both ODE residuals. Failures are
/// reported, not thrown.
CheckReport cross_check(std::size_t order);
CheckReport cross_check(std::size_t order, const TableSet& tables);

}  // namespace tailsum

#endif  // TAILSUM_COEFFICIENTS_HPP
