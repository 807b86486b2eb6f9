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

#ifndef TAILSUM_SUMMATION_HPP
#define TAILSUM_SUMMATION_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "tailsum/coefficients.hpp"
#include "tailsum/term_function.hpp"
#include "tailsum/value.hpp"

namespace tailsum {

/// When to stop the derivative series. Both formulas are asymptotic:
/// their terms typically shrink to a smallest magnitude and then grow
/// without bound, so some stopping rule is mandatory.
struct TruncationPolicy {
  enum class Mode {
    fixed_order,    // include derivative orders 0..K unconditionally
    smallest_term,  // stop at the global magnitude minimum, scanning at most to K
  };

  Mode mode = Mode::smallest_term;
  std::size_t order = 40;  // K above; must be >= 1

  static TruncationPolicy fixed(std::size_t k) {
    return TruncationPolicy{Mode::fixed_order, k};
  }
  static TruncationPolicy smallest_term(std::size_t max_order) {
    return TruncationPolicy{Mode::smallest_term, max_order};
  }
};

/// Everything one engine run produced. The numeric identity
///   value = base_value + sum(terms)
/// holds exactly in exact mode (to working precision in approx mode);
/// base_value is the contribution outside the derivative-term trace
/// (tail integral and/or head partial sum).
struct SummationReport {
  Value value;
  long k_star = 0;                        // last included derivative order
  std::vector<Value> terms;               // dense trace, indices 0..k_star
  Value error_estimate;                   // |first omitted nonzero term|; a heuristic, not a bound
  bool diverged_before_converging = false;  // term growth observed within the scan budget
  Value split_point;                      // abscissa the tail was expanded at
  Value base_value;
};

namespace detail {

template <typename Num>
struct EngineResult {
  Num value;
  long k_star;
  std::vector<Num> terms;  // dense, 0..k_star
  Num error_estimate;
  bool diverged;
  Num base;
};

// Shared core of both tail formulas: value = base + sum w[k] X^(k)(x0).
// Even-index weights >= 2 are structurally zero, so the magnitude scan
// runs over the nonzero-weight indices 0, 1, 3, 5, ...
template <typename Num>
EngineResult<Num> tail_engine(const TermFunction<Num>& f, const Num& x0,
                              const TruncationPolicy& policy,
                              const CoefficientTable& weights, Num base) {
  using Ops = NumOps<Num>;
  if (policy.order < 1) {
    throw InvalidArgument("summation: policy order must be >= 1");
  }
  const std::size_t cap = policy.order;
  if (weights.count() < cap + 3) {
    throw InvalidArgument("summation: weight table too short for the policy");
  }

  auto term_at = [&](std::size_t k) {
    return Ops::lift(weights[k], x0) * f.derivative(static_cast<int>(k), x0);
  };
  auto next_nonzero_index = [](std::size_t k) { return k == 0 ? 1 : k + 2; };

  // Nonzero-weight term values in scan order.
  std::vector<std::pair<std::size_t, Num>> scan;
  std::size_t best = 0;
  int consecutive_up = 0;
  bool diverged = false;

  for (std::size_t k = 0; k <= cap; k = next_nonzero_index(k)) {
    scan.emplace_back(k, term_at(k));
    const std::size_t i = scan.size() - 1;
    if (i == 0) continue;
    const Num mag = Ops::abs(scan[i].second);
    if (mag < Ops::abs(scan[best].second)) {
      best = i;
      consecutive_up = 0;
    } else if (Ops::abs(scan[i - 1].second) < mag) {
      if (++consecutive_up >= 2) {
        diverged = true;
        if (policy.mode == TruncationPolicy::Mode::smallest_term) break;
      }
    } else {
      consecutive_up = 0;
    }
  }

  std::size_t last;  // index into scan of the final included term
  if (policy.mode == TruncationPolicy::Mode::smallest_term) {
    last = best;
  } else {
    last = scan.size() - 1;
  }

  const long k_star = policy.mode == TruncationPolicy::Mode::smallest_term
                          ? static_cast<long>(scan[last].first)
                          : static_cast<long>(cap);

  Num value = base;
  std::vector<Num> dense(static_cast<std::size_t>(k_star) + 1, Ops::zero(x0));
  for (std::size_t i = 0; i <= last; ++i) {
    value = value + scan[i].second;
    dense[scan[i].first] = scan[i].second;
  }

  const std::size_t omitted = next_nonzero_index(scan[last].first);
  Num estimate = Ops::zero(x0);
  bool found = false;
  for (const auto& [k, t] : scan) {
    if (k == omitted) {
      estimate = Ops::abs(t);
      found = true;
      break;
    }
  }
  if (!found) estimate = Ops::abs(term_at(omitted));

  return EngineResult<Num>{std::move(value), k_star, std::move(dense),
                           std::move(estimate), diverged, std::move(base)};
}

template <typename Num>
SummationReport to_report(EngineResult<Num>&& r, Num split_point) {
  SummationReport rep;
  rep.value = Value(std::move(r.value));
  rep.k_star = r.k_star;
  rep.terms.reserve(r.terms.size());
  for (auto& t : r.terms) rep.terms.emplace_back(std::move(t));
  rep.error_estimate = Value(std::move(r.error_estimate));
  rep.diverged_before_converging = r.diverged;
  rep.split_point = Value(std::move(split_point));
  rep.base_value = Value(std::move(r.base));
  return rep;
}

template <typename Num>
EngineResult<Num> em_tail_engine(const TermFunction<Num>& f, const Num& x0,
                                 const TruncationPolicy& policy,
                                 const CoefficientTable& weights) {
  if (!f.supports_tail_integral()) {
    throw DivergentSeries("direct tail: " + f.description() +
                          " has no convergent tail integral");
  }
  return tail_engine<Num>(f, x0, policy, weights, f.tail_integral(x0));
}

template <typename Num>
EngineResult<Num> boole_tail_engine(const TermFunction<Num>& f, const Num& x0,
                                    const TruncationPolicy& policy,
                                    const CoefficientTable& weights) {
  return tail_engine<Num>(f, x0, policy, weights, NumOps<Num>::zero(x0));
}

}  // namespace detail

/// Direct tail: sum of f(x0) + f(x0+1) + f(x0+2) + ... as
/// tail_integral(x0) + sum em_weight[k] f^(k)(x0), truncated per policy.
template <typename Num>
SummationReport em_tail(const TermFunction<Num>& f, const Num& x0,
                        const TruncationPolicy& policy,
                        const CoefficientTable& weights) {
  return detail::to_report(detail::em_tail_engine(f, x0, policy, weights), x0);
}

template <typename Num>
SummationReport em_tail(const TermFunction<Num>& f, const Num& x0,
                        const TruncationPolicy& policy) {
  return em_tail(f, x0, policy, em_weights(policy.order + 3));
}

/// Alternating tail: f(x0) - f(x0+1) + f(x0+2) - ... as
/// sum boole_weight[k] f^(k)(x0); no integral term.
template <typename Num>
SummationReport boole_tail(const TermFunction<Num>& f, const Num& x0,
                           const TruncationPolicy& policy,
                           const CoefficientTable& weights) {
  return detail::to_report(detail::boole_tail_engine(f, x0, policy, weights), x0);
}

template <typename Num>
SummationReport boole_tail(const TermFunction<Num>& f, const Num& x0,
                           const TruncationPolicy& policy) {
  return boole_tail(f, x0, policy, boole_weights(policy.order + 3));
}

/// Head-plus-tail assembly: the terms at start, start+1, ..., split-1 are
/// summed directly (exactly, in exact mode) and the engine handles the rest
/// from the split point on. In alternating mode the tail enters with sign
/// (-1)^(split-start) to continue the head's alternation.
template <typename Num>
SummationReport split_sum(const TermFunction<Num>& f, const Num& start,
                          const Num& split, const TruncationPolicy& policy,
                          bool alternating) {
  using Ops = NumOps<Num>;
  const Num gap = split - start;
  if (!Ops::is_nonneg_integer(gap)) {
    throw InvalidArgument(
        "split_sum: split must be start plus a nonnegative whole number of unit steps");
  }
  const long steps = Ops::to_long(gap);

  Num head = Ops::zero(start);
  Num x = start;
  const Num one = Ops::lift(Rational(1), start);
  for (long j = 0; j < steps; ++j) {
    const Num term = f.eval(x);
    head = (alternating && j % 2 == 1) ? head - term : head + term;
    x = x + one;
  }

  detail::EngineResult<Num> inner =
      alternating
          ? detail::boole_tail_engine(f, split, policy, boole_weights(policy.order + 3))
          : detail::em_tail_engine(f, split, policy, em_weights(policy.order + 3));

  const bool negate = alternating && steps % 2 == 1;
  if (negate) {
    inner.value = -inner.value;
    inner.base = -inner.base;
    for (auto& t : inner.terms) t = -t;
  }
  inner.value = head + inner.value;
  inner.base = head + inner.base;
  return detail::to_report(std::move(inner), split);
}

}  // namespace tailsum

#endif  // TAILSUM_SUMMATION_HPP
