// Copyright 2026 The sepbit Authors.
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

/**
 * @file report.hpp
 * Uniform check/report records shared by the verification suites and the
 * CLI, with deterministic JSON serialization (fixed key order, numeric
 * values rounded to 12 significant digits at construction so that
 * serialize/parse round-trips are lossless and reruns are byte-identical).
 */

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace sepbit {

/// One verification check. `measured` and `expected` hold a number, a
/// boolean, an integer count, or an array of numbers; `passed` is fixed at
/// construction: |measured - expected| <= tolerance for numerics (max
/// deviation for arrays), exact equality for booleans/counts.
struct Check {
  std::string name;
  bool passed = false;
  nlohmann::ordered_json measured;
  nlohmann::ordered_json expected;
  double tolerance = 0.0;
  std::string provenance;

  static Check number(std::string name, double measured, double expected,
                      double tolerance, std::string provenance);
  static Check count(std::string name, long long measured, long long expected,
                     std::string provenance);
  static Check boolean(std::string name, bool measured, bool expected,
                       std::string provenance);
  static Check numbers(std::string name, const std::vector<double>& measured,
                       const std::vector<double>& expected, double tolerance,
                       std::string provenance);
};

struct SuiteReport {
  std::string suite_name;
  std::vector<Check> checks;
  std::uint64_t seed = 0;
  std::int64_t elapsed_ms = 0;

  bool all_passed() const;
};

/// Rounds to 12 significant digits (the serialization precision), so a
/// value stored in a Check re-parses to exactly itself.
double round_sig12(double x);

nlohmann::ordered_json to_json(const Check& c);
nlohmann::ordered_json to_json(const SuiteReport& r);

std::string serialize(const SuiteReport& r);
SuiteReport parse_report(const std::string& text);

}  // namespace sepbit
