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

#ifndef TAILSUM_ZETA_HPP
#define TAILSUM_ZETA_HPP

#include <optional>
#include <string>

#include "tailsum/summation.hpp"

namespace tailsum {

/// pi to 200 decimal places (201 significant digits), as text ("3.14159...").
const char* pi_digits();

/// Where the constant comes from (it is embedded, never computed here).
const char* pi_provenance();

/// The embedded constant as an exact rational, below the true pi by
/// less than 1e-200.
const Rational& pi_rational();

/// One summation result ready for serialization. `exact` is present iff
/// the run was in exact mode (then it equals `value`).
struct OutputRecord {
  Value value;
  std::optional<Rational> exact;
  long terms_used = 0;
  long k_star = -1;
  Value error_estimate;
  long split = 0;
  std::string mode;  // "exact" | "approx"
  bool diverged = false;
  std::optional<SummationReport> detail;

  std::string value_decimal(long significant_digits) const {
    return value.to_decimal(significant_digits);
  }
};

struct RunOptions {
  long split = 10;
  TruncationPolicy policy = TruncationPolicy::smallest_term(40);
};

/// zeta(n) = sum over m >= 1 of 1/m^n, integer n >= 2, computed as an
/// exact head over m < split plus the accelerated direct tail.
/// Throws DivergentSeries for n <= 1.
OutputRecord zeta(long n, const RunOptions& options = {});

/// zeta(n) for even n >= 2 via the closed form bernoulli_like[n/2-1] * pi^n,
/// using the embedded pi constant. Odd n is rejected: the closed form
/// covers even powers only.
OutputRecord zeta_via_pi(long n);

/// eta(n) = sum over m >= 1 of (-1)^(m-1)/m^n, integer n >= 1, via the
/// alternating engine (converges even at n = 1).
OutputRecord eta(long n, const RunOptions& options = {});

/// The generic engine entry: 1/x^m for a positive rational or decimal
/// exponent. Integer exponents run exactly; anything else runs in
/// high-precision floats at `precision_digits` significant digits.
OutputRecord sum_inverse_power(const Rational& exponent, bool alternating,
                               long start, long split,
                               const TruncationPolicy& policy,
                               long precision_digits = 60);

struct VerifyOptions {
  std::size_t order = 40;
  std::string inject_fault;  // "", "bernoulli" or "tangent"
};

/// The full self-check battery: cross_check at the requested order plus
/// the desk-scale zeta/eta identities against the embedded pi constant
/// and an averaging oracle for ln 2. All failures are reported, never
/// thrown.
CheckReport verify_suite(const VerifyOptions& options = {});

}  // namespace tailsum

#endif  // TAILSUM_ZETA_HPP
