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

// tailsum command line. Talks to the library exclusively through the
// C interface in tailsum.h.

#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "tailsum.h"

namespace {

using nlohmann::json;

// Owning wrapper for strings handed out by the C interface.
struct OwnedString {
  char* ptr = nullptr;
  ~OwnedString() { ts_string_free(ptr); }
  std::string str() const { return ptr == nullptr ? std::string() : std::string(ptr); }
};

int exit_code_for(ts_status status) {
  if (status == TS_OK) return 0;
  std::cerr << "tailsum: " << ts_status_name(status) << ": " << ts_last_error() << "\n";
  return status == TS_EINVAL ? 2 : 1;
}

int emit_table(const std::string& kind, size_t count, const std::string& format) {
  ts_table* table = nullptr;
  if (ts_status s = ts_table_create(kind.c_str(), count, &table); s != TS_OK) {
    return exit_code_for(s);
  }
  std::unique_ptr<ts_table, decltype(&ts_table_free)> guard(table, ts_table_free);

  json rows = json::array();
  for (size_t i = 0; i < ts_table_count(table); ++i) {
    OwnedString num, den;
    if (ts_status s = ts_table_entry(table, i, &num.ptr, &den.ptr); s != TS_OK) {
      return exit_code_for(s);
    }
    if (format == "csv") {
      std::cout << i << "," << num.str() << "," << den.str() << "\n";
    } else if (format == "plain") {
      std::cout << i << ": " << num.str()
                << (den.str() == "1" ? "" : "/" + den.str()) << "\n";
    } else {
      rows.push_back({{"index", i}, {"numerator", num.str()}, {"denominator", den.str()}});
    }
  }
  if (format == "json") {
    std::cout << rows.dump(2) << "\n";
  }
  return 0;
}

int emit_report(ts_report* report, long digits, const std::string& format) {
  std::unique_ptr<ts_report, decltype(&ts_report_free)> guard(report, ts_report_free);

  OwnedString value, err;
  if (ts_status s = ts_report_value(report, digits, &value.ptr); s != TS_OK) {
    return exit_code_for(s);
  }
  if (ts_status s = ts_report_error_estimate(report, 6, &err.ptr); s != TS_OK) {
    return exit_code_for(s);
  }
  OwnedString num, den;
  const bool exact = ts_report_is_exact(report) != 0;
  if (exact) {
    if (ts_status s = ts_report_exact(report, &num.ptr, &den.ptr); s != TS_OK) {
      return exit_code_for(s);
    }
  }
  const long k_star = ts_report_k_star(report);
  const size_t terms = ts_report_term_count(report);
  const long split = ts_report_split(report);
  const std::string mode = ts_report_mode(report);

  if (format == "json") {
    json j;
    j["value_decimal"] = value.str();
    j["exact"] = exact ? json{{"num", num.str()}, {"den", den.str()}} : json(nullptr);
    j["terms_used"] = terms;
    j["k_star"] = k_star;
    j["error_estimate"] = err.str();
    j["split"] = split;
    j["mode"] = mode;
    std::cout << j.dump(2) << "\n";
  } else if (format == "csv") {
    std::cout << value.str() << "," << (exact ? num.str() : "") << ","
              << (exact ? den.str() : "") << "," << terms << "," << k_star << ","
              << err.str() << "," << split << "," << mode << "\n";
  } else {
    std::cout << "value          = " << value.str() << "\n";
    if (exact) {
      std::cout << "exact          = " << num.str() << "/" << den.str() << "\n";
    }
    std::cout << "terms used     = " << terms << " (k* = " << k_star << ")\n"
              << "error estimate = " << err.str() << "\n"
              << "split          = " << split << "\n"
              << "mode           = " << mode << "\n";
  }
  return 0;
}

int run_verify(long order, const std::string& fault) {
  ts_verify_report* report = nullptr;
  if (ts_status s = ts_verify_run(order, fault.c_str(), &report); s != TS_OK) {
    return exit_code_for(s);
  }
  std::unique_ptr<ts_verify_report, decltype(&ts_verify_free)> guard(report, ts_verify_free);

  size_t failures = 0;
  for (size_t i = 0; i < ts_verify_check_count(report); ++i) {
    const char* name = nullptr;
    int passed = 0;
    ts_verify_check(report, i, &name, &passed);
    if (passed != 0) {
      std::cout << "PASS " << name << "\n";
    } else {
      ++failures;
      const char* detail = ts_verify_check_detail(report, i);
      std::cout << "FAIL " << name;
      if (detail != nullptr && detail[0] != '\0') std::cout << " (" << detail << ")";
      std::cout << "\n";
    }
  }
  std::cout << (failures == 0 ? "all checks passed" : std::to_string(failures) + " check(s) failed")
            << "\n";
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Accelerated tails of infinite series via the Euler-Maclaurin and "
               "Boole summation formulas, with exact rational coefficient tables"};
  app.require_subcommand(1);

  const std::vector<std::string> kinds{"bernoulli-like", "tangent-like", "em-weights",
                                       "boole-weights"};
  const std::vector<std::string> formats{"csv", "json", "plain"};

  auto* coeffs = app.add_subcommand("coeffs", "Emit a coefficient table");
  std::string coeffs_kind;
  size_t coeffs_count = 0;
  std::string coeffs_format = "csv";
  coeffs->add_option("--kind", coeffs_kind, "Coefficient family")
      ->required()
      ->check(CLI::IsMember(kinds));
  coeffs->add_option("--count", coeffs_count, "Number of entries")
      ->required()
      ->check(CLI::PositiveNumber);
  coeffs->add_option("--format", coeffs_format, "Output format")->check(CLI::IsMember(formats));

  long zeta_n = 0, eta_n = 0;
  long split = 10, max_order = 40, digits = 20;
  std::string run_format = "json";
  auto add_run_options = [&](CLI::App* cmd) {
    cmd->add_option("--split", split, "Head/tail split point (default 10)")
        ->check(CLI::Range(2L, 1000000L));
    cmd->add_option("--max-order", max_order,
                    "Smallest-term scan bound on the derivative order (default 40)")
        ->check(CLI::Range(1L, 2000L));
    cmd->add_option("--digits", digits, "Significant digits to render (default 20)")
        ->check(CLI::Range(1L, 1000L));
    cmd->add_option("--format", run_format, "Output format")->check(CLI::IsMember(formats));
  };

  auto* zeta_cmd = app.add_subcommand("zeta", "zeta(n) by split sum plus direct tail");
  zeta_cmd->add_option("n", zeta_n, "Integer exponent, n >= 2")->required();
  add_run_options(zeta_cmd);

  auto* eta_cmd = app.add_subcommand("eta", "eta(n) by split sum plus alternating tail");
  eta_cmd->add_option("n", eta_n, "Integer exponent, n >= 1")->required();
  add_run_options(eta_cmd);

  auto* sum_cmd = app.add_subcommand("sum", "Generic inverse-power summation");
  std::string family = "inverse-power";
  std::string exponent;
  bool alternating = false;
  long start = 1, precision = 60;
  sum_cmd->add_option("--family", family, "Term family")
      ->check(CLI::IsMember({"inverse-power"}));
  sum_cmd->add_option("--exponent", exponent, "Exponent: \"3\", \"5/2\" or \"2.5\"")
      ->required();
  sum_cmd->add_flag("--alternating", alternating, "Sum with alternating signs");
  sum_cmd->add_option("--start", start, "First index (default 1)")
      ->check(CLI::Range(1L, 1000000L));
  sum_cmd->add_option("--precision", precision,
                      "Working precision in significant digits for non-integer exponents "
                      "(default 60)")
      ->check(CLI::Range(10L, 10000L));
  add_run_options(sum_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "Run the full consistency battery");
  long verify_order = 40;
  std::string inject_fault;
  verify_cmd->add_option("--order", verify_order, "Check order (default 40)")
      ->check(CLI::Range(2L, 2000L));
  verify_cmd->add_option("--inject-fault", inject_fault,
                         "Corrupt one table entry first (checker self-test): "
                         "bernoulli | tangent")
      ->check(CLI::IsMember({"bernoulli", "tangent"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (coeffs->parsed()) {
    return emit_table(coeffs_kind, coeffs_count, coeffs_format);
  }
  if (zeta_cmd->parsed()) {
    ts_report* report = nullptr;
    if (ts_status s = ts_zeta(zeta_n, split, max_order, &report); s != TS_OK) {
      return exit_code_for(s);
    }
    return emit_report(report, digits, run_format);
  }
  if (eta_cmd->parsed()) {
    ts_report* report = nullptr;
    if (ts_status s = ts_eta(eta_n, split, max_order, &report); s != TS_OK) {
      return exit_code_for(s);
    }
    return emit_report(report, digits, run_format);
  }
  if (sum_cmd->parsed()) {
    ts_report* report = nullptr;
    if (ts_status s = ts_sum(exponent.c_str(), alternating ? 1 : 0, start, split,
                             max_order, 0, precision, &report);
        s != TS_OK) {
      return exit_code_for(s);
    }
    return emit_report(report, digits, run_format);
  }
  return run_verify(verify_order, inject_fault);
}
