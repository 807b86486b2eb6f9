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

#include "tailsum.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <utility>

#include "tailsum/coefficients.hpp"
#include "tailsum/decimal.hpp"
#include "tailsum/zeta.hpp"

struct ts_table {
  tailsum::CoefficientTable table;
};

struct ts_report {
  tailsum::OutputRecord record;
};

struct ts_verify_report {
  tailsum::CheckReport report;
};

namespace {

thread_local std::string g_last_error;

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out != nullptr) {
    std::memcpy(out, s.c_str(), s.size() + 1);
  }
  return out;
}

// Runs the body, mapping C++ exceptions onto status codes.
template <typename Fn>
ts_status guarded(const Fn& fn) {
  try {
    fn();
    return TS_OK;
  } catch (const tailsum::DivergentSeries& e) {
    g_last_error = e.what();
    return TS_EDIVERGENT;
  } catch (const tailsum::DomainViolation& e) {
    g_last_error = e.what();
    return TS_EDOMAIN;
  } catch (const tailsum::InvalidArgument& e) {
    g_last_error = e.what();
    return TS_EINVAL;
  } catch (const tailsum::InternalInconsistency& e) {
    g_last_error = e.what();
    return TS_EINTERNAL;
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return TS_EINTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return TS_EINTERNAL;
  }
}

tailsum::TruncationPolicy policy_from(long max_order, int fixed_order) {
  const std::size_t order = max_order > 0 ? static_cast<std::size_t>(max_order) : 40;
  return fixed_order != 0 ? tailsum::TruncationPolicy::fixed(order)
                          : tailsum::TruncationPolicy::smallest_term(order);
}

tailsum::RunOptions run_options(long split, long max_order) {
  tailsum::RunOptions opt;
  if (split > 0) opt.split = split;
  opt.policy = policy_from(max_order, 0);
  return opt;
}

}  // namespace

extern "C" {

const char* ts_status_name(ts_status status) {
  switch (status) {
    case TS_OK: return "ok";
    case TS_EINVAL: return "invalid-argument";
    case TS_EDIVERGENT: return "divergent-series";
    case TS_EDOMAIN: return "domain-violation";
    case TS_EINTERNAL: return "internal-error";
  }
  return "unknown";
}

const char* ts_last_error(void) {
  return g_last_error.c_str();
}

void ts_string_free(char* s) {
  std::free(s);
}

ts_status ts_table_create(const char* kind, size_t count, ts_table** out) {
  if (kind == nullptr || out == nullptr) {
    g_last_error = "null argument";
    return TS_EINVAL;
  }
  *out = nullptr;
  return guarded([&] {
    tailsum::CoefficientTable table;
    switch (tailsum::table_kind_from_name(kind)) {
      case tailsum::TableKind::bernoulli_like: table = tailsum::bernoulli_like(count); break;
      case tailsum::TableKind::tangent_like: table = tailsum::tangent_like(count); break;
      case tailsum::TableKind::em_weight: table = tailsum::em_weights(count); break;
      case tailsum::TableKind::boole_weight: table = tailsum::boole_weights(count); break;
    }
    *out = new ts_table{std::move(table)};
  });
}

size_t ts_table_count(const ts_table* table) {
  return table == nullptr ? 0 : table->table.count();
}

ts_status ts_table_entry(const ts_table* table, size_t index,
                         char** numerator, char** denominator) {
  if (table == nullptr || numerator == nullptr || denominator == nullptr) {
    g_last_error = "null argument";
    return TS_EINVAL;
  }
  if (index >= table->table.count()) {
    g_last_error = "table index out of range";
    return TS_EINVAL;
  }
  const tailsum::Rational& v = table->table[index];
  *numerator = duplicate(v.numerator().get_str());
  *denominator = duplicate(v.denominator().get_str());
  return TS_OK;
}

void ts_table_free(ts_table* table) {
  delete table;
}

ts_status ts_zeta(long n, long split, long max_order, ts_report** out) {
  if (out == nullptr) {
    g_last_error = "null argument";
    return TS_EINVAL;
  }
  *out = nullptr;
  return guarded([&] {
    *out = new ts_report{tailsum::zeta(n, run_options(split, max_order))};
  });
}

ts_status ts_eta(long n, long split, long max_order, ts_report** out) {
  if (out == nullptr) {
    g_last_error = "null argument";
    return TS_EINVAL;
  }
  *out = nullptr;
  return guarded([&] {
    *out = new ts_report{tailsum::eta(n, run_options(split, max_order))};
  });
}

ts_status ts_zeta_via_pi(long n, ts_report** out) {
  if (out == nullptr) {
    g_last_error = "null argument";
    return TS_EINVAL;
  }
  *out = nullptr;
  return guarded([&] { *out = new ts_report{tailsum::zeta_via_pi(n)}; });
}

ts_status ts_sum(const char* exponent, int alternating, long start, long split,
                 long max_order, int fixed_order, long precision_digits,
                 ts_report** out) {
  if (exponent == nullptr || out == nullptr) {
    g_last_error = "null argument";
    return TS_EINVAL;
  }
  *out = nullptr;
  return guarded([&] {
    const tailsum::Rational q = tailsum::Rational::from_string(exponent);
    *out = new ts_report{tailsum::sum_inverse_power(
        q, alternating != 0, start, split, policy_from(max_order, fixed_order),
        precision_digits > 0 ? precision_digits : 60)};
  });
}

ts_status ts_report_value(const ts_report* report, long digits, char** decimal) {
  if (report == nullptr || decimal == nullptr) {
    g_last_error = "null argument";
    return TS_EINVAL;
  }
  return guarded([&] { *decimal = duplicate(report->record.value_decimal(digits)); });
}

int ts_report_is_exact(const ts_report* report) {
  return (report != nullptr && report->record.exact.has_value()) ? 1 : 0;
}

ts_status ts_report_exact(const ts_report* report, char** numerator, char** denominator) {
  if (report == nullptr || numerator == nullptr || denominator == nullptr) {
    g_last_error = "null argument";
    return TS_EINVAL;
  }
  if (!report->record.exact.has_value()) {
    g_last_error = "run was not in exact mode";
    return TS_EINVAL;
  }
  *numerator = duplicate(report->record.exact->numerator().get_str());
  *denominator = duplicate(report->record.exact->denominator().get_str());
  return TS_OK;
}

long ts_report_k_star(const ts_report* report) {
  return report == nullptr ? -1 : report->record.k_star;
}

size_t ts_report_term_count(const ts_report* report) {
  return report == nullptr ? 0 : static_cast<size_t>(report->record.terms_used);
}

ts_status ts_report_term(const ts_report* report, size_t index, long digits,
                         char** decimal) {
  if (report == nullptr || decimal == nullptr) {
    g_last_error = "null argument";
    return TS_EINVAL;
  }
  if (!report->record.detail.has_value() ||
      index >= report->record.detail->terms.size()) {
    g_last_error = "term index out of range";
    return TS_EINVAL;
  }
  return guarded([&] {
    *decimal = duplicate(report->record.detail->terms[index].to_decimal(digits));
  });
}

ts_status ts_report_error_estimate(const ts_report* report, long digits, char** decimal) {
  if (report == nullptr || decimal == nullptr) {
    g_last_error = "null argument";
    return TS_EINVAL;
  }
  return guarded([&] {
    *decimal = duplicate(report->record.error_estimate.to_decimal(digits));
  });
}

long ts_report_split(const ts_report* report) {
  return report == nullptr ? 0 : report->record.split;
}

const char* ts_report_mode(const ts_report* report) {
  if (report == nullptr) return "";
  return report->record.mode == "exact" ? "exact" : "approx";
}

int ts_report_diverged(const ts_report* report) {
  return (report != nullptr && report->record.diverged) ? 1 : 0;
}

void ts_report_free(ts_report* report) {
  delete report;
}

ts_status ts_verify_run(long order, const char* inject_fault, ts_verify_report** out) {
  if (out == nullptr) {
    g_last_error = "null argument";
    return TS_EINVAL;
  }
  *out = nullptr;
  return guarded([&] {
    tailsum::VerifyOptions options;
    if (order > 0) options.order = static_cast<std::size_t>(order);
    if (inject_fault != nullptr) options.inject_fault = inject_fault;
    *out = new ts_verify_report{tailsum::verify_suite(options)};
  });
}

size_t ts_verify_check_count(const ts_verify_report* report) {
  return report == nullptr ? 0 : report->report.checks.size();
}

ts_status ts_verify_check(const ts_verify_report* report, size_t index,
                          const char** name, int* passed) {
  if (report == nullptr || name == nullptr || passed == nullptr) {
    g_last_error = "null argument";
    return TS_EINVAL;
  }
  if (index >= report->report.checks.size()) {
    g_last_error = "check index out of range";
    return TS_EINVAL;
  }
  *name = report->report.checks[index].name.c_str();
  *passed = report->report.checks[index].passed ? 1 : 0;
  return TS_OK;
}

const char* ts_verify_check_detail(const ts_verify_report* report, size_t index) {
  if (report == nullptr || index >= report->report.checks.size()) return "";
  return report->report.checks[index].detail.c_str();
}

int ts_verify_all_passed(const ts_verify_report* report) {
  return (report != nullptr && report->report.all_passed()) ? 1 : 0;
}

void ts_verify_free(ts_verify_report* report) {
  delete report;
}

}  // extern "C"
