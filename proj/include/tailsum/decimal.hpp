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

#ifndef TAILSUM_DECIMAL_HPP
#define TAILSUM_DECIMAL_HPP

#include <string>

#include "tailsum/rational.hpp"

namespace tailsum {

/// Plain decimal rendering of an exact rational, correctly rounded
/// (round half to even) at `significant_digits` significant digits.
/// No exponent notation; small magnitudes render as "0.000...ddd".
std::string to_decimal(const Rational& value, long significant_digits);

/// Inverse of to_decimal for plain decimal strings; also accepts "p/q".
Rational rational_from_decimal(const std::string& text);

}  // namespace tailsum

#endif  // TAILSUM_DECIMAL_HPP
