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

#include "sepbit/report.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sepbit {

double round_sig12(double x) {
  if (x == 0.0 || !std::isfinite(x)) {
    return x == 0.0 ? 0.0 : x;  // normalize -0.0 as well
  }
  double magnitude = std::floor(std::log10(std::abs(x)));
  double scale = std::pow(10.0, 11.0 - magnitude);
  return std::round(x * scale) / scale;
}

Check Check::number(std::string name, double measured, double expected,
                    double tolerance, std::string provenance) {
  Check c;
  c.name = std::move(name);
  double m = round_sig12(measured);
  double e = round_sig12(expected);
  c.passed = std::abs(measured - expected) <= tolerance;
  c.measured = m;
  c.expected = e;
  c.tolerance = round_sig12(tolerance);
  c.provenance = std::move(provenance);
  return c;
}

Check Check::count(std::string name, long long measured, long long expected,
                   std::string provenance) {
  Check c;
  c.name = std::move(name);
  c.passed = measured == expected;
  c.measured = measured;
  c.expected = expected;
  c.tolerance = 0.0;
  c.provenance = std::move(provenance);
  return c;
}

Check Check::boolean(std::string name, bool measured, bool expected,
                     std::string provenance) {
  Check c;
  c.name = std::move(name);
  c.passed = measured == expected;
  c.measured = measured;
  c.expected = expected;
  c.tolerance = 0.0;
  c.provenance = std::move(provenance);
  return c;
}

Check Check::numbers(std::string name, const std::vector<double>& measured,
                     const std::vector<double>& expected, double tolerance,
                     std::string provenance) {
  Check c;
  c.name = std::move(name);
  c.passed = measured.size() == expected.size();
  auto m = nlohmann::ordered_json::array();
  auto e = nlohmann::ordered_json::array();
  for (double v : measured) {
    m.push_back(round_sig12(v));
  }
  for (double v : expected) {
    e.push_back(round_sig12(v));
  }
  if (c.passed) {
    for (std::size_t k = 0; k < measured.size(); ++k) {
      if (std::abs(measured[k] - expected[k]) > tolerance) {
        c.passed = false;
        break;
      }
    }
  }
  c.measured = std::move(m);
  c.expected = std::move(e);
  c.tolerance = round_sig12(tolerance);
  c.provenance = std::move(provenance);
  return c;
}

bool SuiteReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const Check& c) { return c.passed; });
}

nlohmann::ordered_json to_json(const Check& c) {
  nlohmann::ordered_json j;
  j["name"] = c.name;
  j["passed"] = c.passed;
  j["measured"] = c.measured;
  j["expected"] = c.expected;
  j["tolerance"] = c.tolerance;
  j["provenance"] = c.provenance;
  return j;
}

nlohmann::ordered_json to_json(const SuiteReport& r) {
  nlohmann::ordered_json j;
  j["suite_name"] = r.suite_name;
  j["seed"] = r.seed;
  j["elapsed_ms"] = r.elapsed_ms;
  auto checks = nlohmann::ordered_json::array();
  for (const Check& c : r.checks) {
    checks.push_back(to_json(c));
  }
  j["checks"] = std::move(checks);
  return j;
}

std::string serialize(const SuiteReport& r) { return to_json(r).dump(2); }

namespace {

Check check_from_json(const nlohmann::ordered_json& j) {
  Check c;
  c.name = j.at("name").get<std::string>();
  c.passed = j.at("passed").get<bool>();
  c.measured = j.at("measured");
  c.expected = j.at("expected");
  c.tolerance = j.at("tolerance").get<double>();
  c.provenance = j.at("provenance").get<std::string>();
  return c;
}

}  // namespace

SuiteReport parse_report(const std::string& text) {
  nlohmann::ordered_json j = nlohmann::ordered_json::parse(text);
  SuiteReport r;
  r.suite_name = j.at("suite_name").get<std::string>();
  r.seed = j.at("seed").get<std::uint64_t>();
  r.elapsed_ms = j.at("elapsed_ms").get<std::int64_t>();
  for (const auto& cj : j.at("checks")) {
    r.checks.push_back(check_from_json(cj));
  }
  return r;
}

}  // namespace sepbit
