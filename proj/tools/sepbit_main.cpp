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
 * CLI entry point binding every verification suite.
 *
 * JSON report on stdout (or --out FILE), human-readable summary on stderr.
 * Exit 0 iff all checks passed, 1 on any failed check, 2 on usage errors or
 * malformed input files. Identical invocations produce byte-identical
 * reports; wall-clock timing is therefore omitted from the JSON unless
 * --timing is given (the stderr summary always shows it).
 */

#include <cstdint>
#include <exception>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sepbit/report.hpp"
#include "sepbit/suites.hpp"

namespace {

struct CliOptions {
  std::uint64_t seed = 42;
  int rounds = 10000;
  double tol = 1e-9;
  long long budget = 1000000;
  std::string out;       // empty = stdout
  std::string ext_file;  // empty = no extension elements
  bool timing = false;
  // play-only
  int n = 12;
  std::string theory = "sep";
  int qubits = 0;
  std::string strategy = "auto";
};

void print_summary(const sepbit::SuiteReport& report) {
  std::size_t passed = 0;
  for (const auto& check : report.checks) {
    if (check.passed) {
      ++passed;
    }
  }
  std::cerr << report.suite_name << ": " << passed << "/"
            << report.checks.size() << " checks passed";
  for (const auto& check : report.checks) {
    if (!check.passed) {
      std::cerr << "\n  failed: " << check.name << " (measured "
                << check.measured.dump() << ", expected "
                << check.expected.dump() << ")";
    }
  }
  std::cerr << "\n";
}

/// Serializes the reports (one object, or an array for `all`), writes them
/// to stdout or --out, prints the stderr summary, and returns the exit
/// code: 0 when every check passed, 1 otherwise.
int emit(std::vector<sepbit::SuiteReport> reports, const CliOptions& cli) {
  bool all_passed = true;
  for (auto& report : reports) {
    std::int64_t elapsed = report.elapsed_ms;
    if (!cli.timing) {
      report.elapsed_ms = 0;
    }
    print_summary(report);
    std::cerr << "  seed " << report.seed << ", " << elapsed << " ms\n";
    all_passed = all_passed && report.all_passed();
  }

  std::string text;
  if (reports.size() == 1) {
    text = sepbit::serialize(reports.front());
    text.push_back('\n');
  } else {
    nlohmann::ordered_json array = nlohmann::ordered_json::array();
    for (const auto& report : reports) {
      array.push_back(sepbit::to_json(report));
    }
    text = array.dump(2);
    text.push_back('\n');
  }

  if (cli.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream file(cli.out, std::ios::binary);
    if (!file) {
      std::cerr << "error: cannot open --out file '" << cli.out << "'\n";
      return 2;
    }
    file << text;
  }
  std::cerr << "overall: " << (all_passed ? "PASS" : "FAIL") << "\n";
  return all_passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "sepbit: verification suites for two-qubit composites beyond the "
      "quantum cone"};
  app.require_subcommand(1);

  CliOptions cli;

  auto add_common = [&cli](CLI::App* cmd) {
    cmd->add_option("--seed", cli.seed, "Deterministic seed")
        ->capture_default_str();
    cmd->add_option("--tol", cli.tol, "Acceptance tolerance for checks")
        ->capture_default_str();
    cmd->add_option("--out", cli.out, "Write the JSON report here instead of stdout");
    cmd->add_flag("--timing", cli.timing,
                  "Include wall-clock elapsed_ms in the JSON (breaks "
                  "byte-identical reruns)");
  };

  CLI::App* verify_base =
      app.add_subcommand("verify-base", "Base two-outcome measurement checks");
  add_common(verify_base);

  CLI::App* table1 = app.add_subcommand(
      "table1-sweep", "All 66 matched-axis pair discriminations");
  add_common(table1);

  CLI::App* play =
      app.add_subcommand("play", "Pairwise-distinguishability game");
  add_common(play);
  play->add_option("--rounds", cli.rounds, "Rounds to simulate")
      ->capture_default_str();
  play->add_option("--n", cli.n, "Message-set size")->capture_default_str();
  play->add_option("--theory", cli.theory, "sep | quantum | classical")
      ->capture_default_str();
  play->add_option("--qubits", cli.qubits,
                   "Qubit count for quantum strategies (0 = minimal)")
      ->capture_default_str();
  play->add_option("--strategy", cli.strategy,
                   "auto | sep12 | sep-block | quantum-orthogonal | "
                   "helstrom12 | classical")
      ->capture_default_str();

  CLI::App* packing = app.add_subcommand(
      "packing", "Signed-basis packings and randomized search evidence");
  add_common(packing);
  packing->add_option("--budget", cli.budget, "Search step budget")
      ->capture_default_str();

  CLI::App* frozen = app.add_subcommand(
      "frozen", "Five-state discrimination surviving the frozen filter");
  add_common(frozen);

  CLI::App* squarebit =
      app.add_subcommand("squarebit", "Square-bit model checks");
  add_common(squarebit);
  squarebit->add_option("--ext-file", cli.ext_file,
                        "Entangled extension elements (plain text, nine "
                        "numbers per 3x3 block)");

  CLI::App* entropy =
      app.add_subcommand("entropy-demo", "Two-preparations entropy demo");
  add_common(entropy);

  CLI::App* all = app.add_subcommand("all", "Every suite, ordered by name");
  add_common(all);
  all->add_option("--rounds", cli.rounds, "Rounds to simulate")
      ->capture_default_str();
  all->add_option("--budget", cli.budget, "Search step budget")
      ->capture_default_str();
  all->add_option("--ext-file", cli.ext_file,
                  "Entangled extension elements for the squarebit suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      return app.exit(e);  // --help / --version
    }
    app.exit(e);
    return 2;
  }

  try {
    std::vector<sepbit::SuiteReport> reports;
    if (verify_base->parsed()) {
      reports.push_back(sepbit::run_verify_base_suite(cli.seed, cli.tol));
    } else if (table1->parsed()) {
      reports.push_back(sepbit::run_table1_sweep_suite(cli.seed, cli.tol));
    } else if (play->parsed()) {
      sepbit::PlayOptions opts;
      opts.n = cli.n;
      opts.theory = cli.theory;
      opts.qubits = cli.qubits;
      opts.strategy = cli.strategy;
      opts.rounds = cli.rounds;
      opts.seed = cli.seed;
      opts.tol = cli.tol;
      reports.push_back(sepbit::run_play_suite(opts));
    } else if (packing->parsed()) {
      reports.push_back(
          sepbit::run_packing_suite(cli.seed, cli.budget, cli.tol));
    } else if (frozen->parsed()) {
      reports.push_back(sepbit::run_frozen_suite(cli.seed, cli.tol));
    } else if (squarebit->parsed()) {
      reports.push_back(
          sepbit::run_squarebit_suite(cli.seed, cli.ext_file, cli.tol));
    } else if (entropy->parsed()) {
      reports.push_back(sepbit::run_entropy_demo_suite(cli.seed, cli.tol));
    } else {
      sepbit::AllSuitesOptions opts;
      opts.seed = cli.seed;
      opts.rounds = cli.rounds;
      opts.budget = cli.budget;
      opts.tol = cli.tol;
      opts.ext_file = cli.ext_file;
      reports = sepbit::run_all_suites(opts);
    }
    return emit(std::move(reports), cli);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
