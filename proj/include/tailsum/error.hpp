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

#ifndef TAILSUM_ERROR_HPP
#define TAILSUM_ERROR_HPP

#include <stdexcept>

namespace tailsum {

/// Malformed or out-of-contract call arguments.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A series with zero constant term has no reciprocal.
class NonInvertibleSeries : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// Operand outside a term function's domain (e.g. x <= 0 for 1/x^n).
class DomainViolation : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The requested sum or tail integral does not exist.
class DivergentSeries : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Internal tables failed their own consistency requirements.
class InternalInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace tailsum

#endif  // TAILSUM_ERROR_HPP
