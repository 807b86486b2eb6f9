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

#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "tailsum/coefficients.hpp"
#include "tailsum/decimal.hpp"
#include "tailsum/zeta.hpp"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

const char* cli_path() {
  const char* path = std::getenv("TAILSUM_CLI");
  REQUIRE_MESSAGE(path != nullptr, "TAILSUM_CLI must point at the built binary");
  return path;
}

RunResult run_cli(const std::string& args, bool keep_stderr = false) {
  const std::string cmd = std::string(cli_path()) + " " + args +
                          (keep_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  while (size_t n = fread(buf, 1, sizeof buf, pipe)) {
    r.out.append(buf, n);
    if (n < sizeof buf) {
      if (feof(pipe)) break;
    }
  }
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  return lines;
}

}  // namespace

TEST_CASE("coeffs emits exact CSV rows") {
  RunResult r = run_cli("coeffs --kind bernoulli-like --count 5 --format csv");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "0,1,6\n1,1,90\n2,1,945\n3,1,9450\n4,1,93555\n");
}

TEST_CASE("emitted CSV parses back to the exact table") {
  for (const std::string kind : {"bernoulli-like", "tangent-like", "em-weights",
                                 "boole-weights"}) {
    RunResult r = run_cli("coeffs --kind " + kind + " --count 9 --format csv");
    REQUIRE(r.exit_code == 0);
    const auto rows = lines_of(r.out);
    REQUIRE(rows.size() == 9);

    tailsum::CoefficientTable expected;
    switch (tailsum::table_kind_from_name(kind)) {
      case tailsum::TableKind::bernoulli_like: expected = tailsum::bernoulli_like(9); break;
      case tailsum::TableKind::tangent_like: expected = tailsum::tangent_like(9); break;
      case tailsum::TableKind::em_weight: expected = tailsum::em_weights(9); break;
      case tailsum::TableKind::boole_weight: expected = tailsum::boole_weights(9); break;
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const auto first = rows[i].find(',');
      const auto second = rows[i].find(',', first + 1);
      REQUIRE(second != std::string::npos);
      CHECK(std::stoul(rows[i].substr(0, first)) == i);
      const tailsum::Rational parsed(
          tailsum::Integer(rows[i].substr(first + 1, second - first - 1)),
          tailsum::Integer(rows[i].substr(second + 1)));
      CHECK(parsed == expected[i]);
    }
  }
}

TEST_CASE("coeffs json carries the same exact strings") {
  RunResult r = run_cli("coeffs --kind em-weights --count 4 --format json");
  REQUIRE(r.exit_code == 0);
  const nlohmann::json rows = nlohmann::json::parse(r.out);
  REQUIRE(rows.is_array());
  REQUIRE(rows.size() == 4);
  CHECK(rows[1]["numerator"] == "-1");
  CHECK(rows[1]["denominator"] == "12");
  CHECK(rows[3]["numerator"] == "1");
  CHECK(rows[3]["denominator"] == "720");
}

TEST_CASE("zeta emits the documented JSON record") {
  RunResult r = run_cli("zeta 2 --split 10 --digits 20");
  REQUIRE(r.exit_code == 0);
  const nlohmann::json j = nlohmann::json::parse(r.out);
  for (const char* field : {"value_decimal", "exact", "terms_used", "k_star",
                            "error_estimate", "split", "mode"}) {
    CHECK(j.contains(field));
  }
  CHECK(j["mode"] == "exact");
  CHECK(j["split"] == 10);
  CHECK(j["k_star"] == 39);

  // Round trip: the serialized exact rational is the library's value.
  const tailsum::Rational parsed(
      tailsum::Integer(j["exact"]["num"].get<std::string>()),
      tailsum::Integer(j["exact"]["den"].get<std::string>()));
  CHECK(parsed == *tailsum::zeta(2).exact);
  CHECK(j["value_decimal"].get<std::string>() ==
        tailsum::to_decimal(parsed, 20));
}

TEST_CASE("approx-mode JSON has a null exact field") {
  RunResult r = run_cli("sum --exponent 2.5 --split 10");
  REQUIRE(r.exit_code == 0);
  const nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["exact"].is_null());
  CHECK(j["mode"] == "approx");
}

TEST_CASE("eta agrees with the library") {
  RunResult r = run_cli("eta 2 --digits 18");
  REQUIRE(r.exit_code == 0);
  const nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["value_decimal"].get<std::string>() ==
        tailsum::eta(2).value_decimal(18));
}

TEST_CASE("divergent inputs exit 1 with a diagnostic on stderr") {
  RunResult quiet = run_cli("zeta 1");
  CHECK(quiet.exit_code == 1);
  CHECK(quiet.out.empty());
  RunResult loud = run_cli("zeta 1", /*keep_stderr=*/true);
  CHECK(loud.exit_code == 1);
  CHECK(loud.out.find("harmonic") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run_cli("frobnicate").exit_code == 2);
  CHECK(run_cli("zeta").exit_code == 2);
  CHECK(run_cli("zeta 2 --no-such-flag").exit_code == 2);
  CHECK(run_cli("coeffs --kind bogus --count 3").exit_code == 2);
  CHECK(run_cli("coeffs --kind bernoulli-like --count 0").exit_code == 2);
  CHECK(run_cli("sum --exponent abc").exit_code == 2);
  CHECK(run_cli("zeta two").exit_code == 2);
}

TEST_CASE("help exits 0") {
  CHECK(run_cli("--help").exit_code == 0);
  CHECK(run_cli("zeta --help").exit_code == 0);
}

TEST_CASE("verify passes and the fault fixture fails") {
  RunResult ok = run_cli("verify --order 8");
  CHECK(ok.exit_code == 0);
  CHECK(ok.out.find("PASS ratio-law") != std::string::npos);
  CHECK(ok.out.find("FAIL") == std::string::npos);

  RunResult bad = run_cli("verify --order 8 --inject-fault bernoulli");
  CHECK(bad.exit_code != 0);
  CHECK(bad.out.find("FAIL ratio-law") != std::string::npos);
}

TEST_CASE("plain format is line oriented") {
  RunResult r = run_cli("zeta 3 --format plain --digits 12");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find("value          = 1.20205690316") != std::string::npos);
  CHECK(r.out.find("mode           = exact") != std::string::npos);
}
