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

#include "tailsum/coefficients.hpp"

#include <algorithm>
#include <mutex>
#include <utility>

namespace tailsum {

const char* table_kind_name(TableKind kind) {
  switch (kind) {
    case TableKind::bernoulli_like: return "bernoulli-like";
    case TableKind::tangent_like: return "tangent-like";
    case TableKind::em_weight: return "em-weights";
    case TableKind::boole_weight: return "boole-weights";
  }
  throw InvalidArgument("unknown table kind");
}

TableKind table_kind_from_name(const std::string& name) {
  if (name == "bernoulli-like") return TableKind::bernoulli_like;
  if (name == "tangent-like") return TableKind::tangent_like;
  if (name == "em-weights") return TableKind::em_weight;
  if (name == "boole-weights") return TableKind::boole_weight;
  throw InvalidArgument("unknown table kind '" + name + "'");
}

namespace {

// Both recurrences come from matching powers of t in du/dt + uu - 1 = 0
// for an odd series u = principal/t + sum c_m t^(2m-1):
//   (2m - 1 + 2*principal) c_m = [m == 1] - sum_{i+j=m, i,j>=1} c_i c_j.
// The direct case (principal 1) gives c_m = 2*(-1)^(m+1)*T_m; the
// alternating case (principal 0) gives c_1 = 1 and then
// c_m = (-1)^(m+1)*G_(m-1) over the tangent-like entries G.
void extend_odd_series_coeffs(std::vector<Rational>& c, std::size_t count, long principal) {
  c.reserve(count);
  for (std::size_t m = c.size() + 1; m <= count; ++m) {
    Rational acc = (m == 1) ? Rational(1) : Rational(0);
    for (std::size_t i = 1; i < m; ++i) {
      acc -= c[i - 1] * c[m - i - 1];
    }
    c.push_back(acc / Rational(2 * static_cast<long>(m) - 1 + 2 * principal));
  }
}

// Monotonically growing, write-once-per-prefix cache of one family.
class TableCache {
 public:
  template <typename Extend>
  std::vector<Rational> prefix(std::size_t count, const Extend& extend) {
    std::scoped_lock lock(mu_);
    if (values_.size() < count) {
      extend(values_, count);
    }
    return {values_.begin(), values_.begin() + static_cast<long>(count)};
  }

 private:
  std::mutex mu_;
  std::vector<Rational> values_;
};

std::vector<Rational> bernoulli_values(std::size_t count) {
  static TableCache cache;
  return cache.prefix(count, [](std::vector<Rational>& v, std::size_t n) {
    // Rebuild the raw odd-series coefficients from the stored prefix,
    // extend, and append only the new table entries.
    std::vector<Rational> c;
    c.reserve(n);
    for (std::size_t m = 1; m <= v.size(); ++m) {
      Rational sign((m % 2 == 1) ? 1 : -1);
      c.push_back(Rational(2) * sign * v[m - 1]);
    }
    extend_odd_series_coeffs(c, n, /*principal=*/1);
    for (std::size_t m = v.size() + 1; m <= n; ++m) {
      Rational sign((m % 2 == 1) ? 1 : -1);
      v.push_back(sign * c[m - 1] / Rational(2));
    }
  });
}

std::vector<Rational> tangent_values(std::size_t count) {
  static TableCache cache;
  return cache.prefix(count, [](std::vector<Rational>& v, std::size_t n) {
    std::vector<Rational> c;
    c.reserve(n + 1);
    c.push_back(Rational(1));  // leading t coefficient
    for (std::size_t m = 2; m <= v.size() + 1; ++m) {
      Rational sign((m % 2 == 0) ? -1 : 1);
      c.push_back(sign * v[m - 2]);
    }
    extend_odd_series_coeffs(c, n + 1, /*principal=*/0);
    for (std::size_t m = v.size() + 2; m <= n + 1; ++m) {
      Rational sign((m % 2 == 0) ? -1 : 1);
      v.push_back(sign * c[m - 1]);
    }
  });
}

std::vector<Rational> em_weight_values_from(const std::vector<Rational>& core,
                                            std::size_t count) {
  std::vector<Rational> w(count, Rational(0));
  if (count > 0) w[0] = Rational(1, 2);
  for (std::size_t k = 1; 2 * k - 1 < count; ++k) {
    Rational sign((k % 2 == 1) ? -1 : 1);
    w[2 * k - 1] = sign * core[k - 1] / Rational(Integer(1) << (2 * k - 1));
  }
  return w;
}

std::vector<Rational> boole_weight_values_from(const std::vector<Rational>& core,
                                               std::size_t count) {
  std::vector<Rational> w(count, Rational(0));
  if (count > 0) w[0] = Rational(1, 2);
  if (count > 1) w[1] = Rational(-1, 4);
  for (std::size_t k = 2; 2 * k - 1 < count; ++k) {
    Rational sign((k % 2 == 1) ? -1 : 1);
    w[2 * k - 1] = sign * core[k - 2] / Rational(Integer(1) << (2 * k));
  }
  return w;
}

std::size_t core_entries_for_weights(std::size_t weight_count) {
  // weight index 2k-1 < count  =>  k <= count/2
  return weight_count / 2 + 1;
}

LaurentLike case1_u_from(const CoefficientTable& bern, std::size_t order) {
  std::vector<Rational> reg(order, Rational(0));
  for (std::size_t k = 1; 2 * k - 1 < order; ++k) {
    Rational sign((k % 2 == 1) ? 1 : -1);
    reg[2 * k - 1] = Rational(2) * sign * bern[k - 1];
  }
  return LaurentLike{Rational(1), PowerSeries(std::move(reg))};
}

LaurentLike case2_u_from(const CoefficientTable& tang, std::size_t order) {
  std::vector<Rational> reg(order, Rational(0));
  if (order > 1) reg[1] = Rational(1);
  for (std::size_t k = 2; 2 * k - 1 < order; ++k) {
    Rational sign((k % 2 == 0) ? -1 : 1);
    reg[2 * k - 1] = sign * tang[k - 2];
  }
  return LaurentLike{Rational(0), PowerSeries(std::move(reg))};
}

// V = t*u - t re-expanded in z via t = z/2:
// 1 - z/2 + A z^2/2 - B z^4/8 + C z^6/32 - ...
PowerSeries em_v_from(const CoefficientTable& bern, std::size_t order) {
  std::vector<Rational> c(order, Rational(0));
  if (order > 0) c[0] = Rational(1);
  if (order > 1) c[1] = Rational(-1, 2);
  for (std::size_t k = 1; 2 * k < order; ++k) {
    Rational sign((k % 2 == 1) ? 1 : -1);
    c[2 * k] = sign * bern[k - 1] / Rational(Integer(1) << (2 * k - 1));
  }
  return PowerSeries(std::move(c));
}

}  // namespace

CoefficientTable bernoulli_like(std::size_t count) {
  if (count == 0) throw InvalidArgument("bernoulli_like: count must be positive");
  return {TableKind::bernoulli_like, bernoulli_values(count)};
}

CoefficientTable tangent_like(std::size_t count) {
  if (count == 0) throw InvalidArgument("tangent_like: count must be positive");
  return {TableKind::tangent_like, tangent_values(count)};
}

CoefficientTable em_weights(std::size_t count) {
  if (count == 0) throw InvalidArgument("em_weights: count must be positive");
  static TableCache cache;
  auto values = cache.prefix(count, [](std::vector<Rational>& v, std::size_t n) {
    auto full = em_weight_values_from(bernoulli_values(core_entries_for_weights(n)), n);
    v.insert(v.end(), full.begin() + static_cast<long>(v.size()), full.end());
  });
  return {TableKind::em_weight, std::move(values)};
}

CoefficientTable boole_weights(std::size_t count) {
  if (count == 0) throw InvalidArgument("boole_weights: count must be positive");
  static TableCache cache;
  auto values = cache.prefix(count, [](std::vector<Rational>& v, std::size_t n) {
    auto full = boole_weight_values_from(tangent_values(core_entries_for_weights(n)), n);
    v.insert(v.end(), full.begin() + static_cast<long>(v.size()), full.end());
  });
  return {TableKind::boole_weight, std::move(values)};
}

CoefficientTable boole_weights_via_ratio(std::size_t count) {
  CoefficientTable em = em_weights(count);
  std::vector<Rational> w(count, Rational(0));
  if (count > 0) w[0] = em[0];
  for (std::size_t k = 1; 2 * k - 1 < count; ++k) {
    w[2 * k - 1] = Rational(pow2_minus_1(2 * k)) * em[2 * k - 1];
  }
  return {TableKind::boole_weight, std::move(w)};
}

std::vector<Rational> weight_ratio_table(std::size_t count) {
  if (count == 0) throw InvalidArgument("weight_ratio_table: count must be positive");
  const std::size_t weight_count = 2 * count;
  CoefficientTable em = em_weights(weight_count);
  CoefficientTable bo = boole_weights(weight_count);
  std::vector<Rational> ratios;
  ratios.reserve(count);
  for (std::size_t k = 1; k <= count; ++k) {
    const Rational& denom = em[2 * k - 1];
    if (denom.is_zero()) {
      throw InternalInconsistency("weight_ratio_table: zero direct weight at odd index");
    }
    ratios.push_back(bo[2 * k - 1] / denom);
  }
  return ratios;
}

LaurentLike case1_u(std::size_t order) {
  return case1_u_from(bernoulli_like(order / 2 + 1), order);
}

LaurentLike case2_u(std::size_t order) {
  return case2_u_from(tangent_like(order / 2 + 1), order);
}

PowerSeries em_v_series(std::size_t order) {
  return em_v_from(bernoulli_like(order / 2 + 1), order);
}

PowerSeries boole_v_series(std::size_t order) {
  // V = 1/2 - u/2 at t = z/2; the coefficients are the alternating weights.
  CoefficientTable bw = boole_weights(order);
  return PowerSeries(bw.values);
}

bool CheckReport::all_passed() const {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

void CheckReport::add(std::string name, bool passed, std::string detail) {
  checks.push_back(CheckResult{std::move(name), passed, std::move(detail)});
}

TableSet make_tables(std::size_t order, const std::string& fault) {
  const std::size_t weight_count = order + 3;
  const std::size_t core_count = core_entries_for_weights(weight_count);

  TableSet t;
  t.bernoulli = bernoulli_like(core_count);
  t.tangent = tangent_like(core_count);
  if (fault == "bernoulli") {
    t.bernoulli.values[std::min<std::size_t>(2, core_count - 1)] += Rational(1, 1000000);
  } else if (fault == "tangent") {
    t.tangent.values[std::min<std::size_t>(2, core_count - 1)] += Rational(1, 1000000);
  } else if (!fault.empty()) {
    throw InvalidArgument("make_tables: unknown fault '" + fault + "'");
  }
  t.em_w = {TableKind::em_weight, em_weight_values_from(t.bernoulli.values, weight_count)};
  t.boole_w = {TableKind::boole_weight,
               boole_weight_values_from(t.tangent.values, weight_count)};
  return t;
}

namespace {

bool laurent_residual_is_zero(const LaurentLike& r) {
  if (!r.principal.is_zero()) return false;
  for (std::size_t k = 0; k < r.regular.order(); ++k) {
    if (!r.regular[k].is_zero()) return false;
  }
  return true;
}

std::string mismatch_detail(std::size_t index, const Rational& got, const Rational& want) {
  return "index " + std::to_string(index) + ": got " + got.to_string() +
         ", expected " + want.to_string();
}

}  // namespace

CheckReport cross_check(std::size_t order) {
  return cross_check(order, make_tables(order));
}

CheckReport cross_check(std::size_t order, const TableSet& tables) {
  if (order < 2) throw InvalidArgument("cross_check: order must be at least 2");
  CheckReport report;

  // Unit products of the generating functions built from the tables.
  {
    PowerSeries v = em_v_from(tables.bernoulli, order);
    bool ok = ps_mul(v, em_aux(order)) == unit_series(order);
    report.add("em-generating-product", ok,
               ok ? "" : "V * (e^z - 1)/z is not the unit series");
  }
  {
    PowerSeries v(tables.boole_w.values);
    bool ok = ps_mul(v.truncated(order), boole_aux(order)) == unit_series(order);
    report.add("boole-generating-product", ok,
               ok ? "" : "V * (1 + e^z) is not the unit series");
  }

  // Weights against the series reciprocals (independent construction).
  {
    PowerSeries recip = ps_reciprocal(em_aux(order + 1));
    bool ok = true;
    std::string detail;
    for (std::size_t k = 0; k < order; ++k) {
      Rational want = -recip[k + 1];
      if (tables.em_w[k] != want) {
        ok = false;
        detail = mismatch_detail(k, tables.em_w[k], want);
        break;
      }
    }
    report.add("em-weights-match-series", ok, detail);
  }
  {
    PowerSeries recip = ps_reciprocal(boole_aux(order));
    bool ok = true;
    std::string detail;
    for (std::size_t k = 0; k < order; ++k) {
      if (tables.boole_w[k] != recip[k]) {
        ok = false;
        detail = mismatch_detail(k, tables.boole_w[k], recip[k]);
        break;
      }
    }
    report.add("boole-weights-match-series", ok, detail);
  }

  // Ratio law between the two weight families.
  {
    bool ok = true;
    std::string detail;
    try {
      for (std::size_t k = 1; 2 * k - 1 < order; ++k) {
        const Rational& denom = tables.em_w[2 * k - 1];
        if (denom.is_zero()) {
          throw InternalInconsistency("zero direct weight at index " +
                                      std::to_string(2 * k - 1));
        }
        Rational ratio = tables.boole_w[2 * k - 1] / denom;
        Rational want(pow2_minus_1(2 * k));
        if (ratio != want) {
          ok = false;
          detail = mismatch_detail(k, ratio, want);
          break;
        }
      }
    } catch (const InternalInconsistency& e) {
      ok = false;
      detail = e.what();
    }
    report.add("ratio-law", ok, detail);
  }

  // Alternating weights rebuilt through the ratio factors.
  {
    bool ok = true;
    std::string detail;
    for (std::size_t k = 1; 2 * k - 1 < order; ++k) {
      Rational via = Rational(pow2_minus_1(2 * k)) * tables.em_w[2 * k - 1];
      if (via != tables.boole_w[2 * k - 1]) {
        ok = false;
        detail = mismatch_detail(2 * k - 1, via, tables.boole_w[2 * k - 1]);
        break;
      }
    }
    report.add("ratio-built-weights-match", ok, detail);
  }

  // Both series satisfy the defining differential equation exactly.
  {
    LaurentLike r = ode_residual(case1_u_from(tables.bernoulli, order));
    bool ok = laurent_residual_is_zero(r);
    report.add("em-ode-residual", ok, ok ? "" : "du/dt + uu - 1 != 0");
  }
  {
    LaurentLike r = ode_residual(case2_u_from(tables.tangent, order));
    bool ok = laurent_residual_is_zero(r);
    report.add("boole-ode-residual", ok, ok ? "" : "du/dt + uu - 1 != 0");
  }

  return report;
}

}  // namespace tailsum
