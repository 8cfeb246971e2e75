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
 * @file suites.hpp
 * Verification suites: each bundles one batch of claims into a
 * SuiteReport. All suites are deterministic per seed; shared by the CLI
 * and the acceptance tests.
 */

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sepbit/report.hpp"

namespace sepbit {

/// Base-measurement validity: completeness, closed-form probabilities on
/// seeded random product states, range, see-saw cone membership.
SuiteReport run_verify_base_suite(std::uint64_t seed, double tol);

/// All 66 unordered pairs of the matched-axis encoding set: perfect
/// discrimination by the embedded pair-measurement table, with separable
/// cone membership of every constructed effect.
SuiteReport run_table1_sweep_suite(std::uint64_t seed, double tol);

/// Information dimension >= 12 versus measurement dimension 4 on the same
/// composite, with the (weak) check that no constructed measurement
/// simultaneously identifies more than 4 encoding states.
SuiteReport run_dimension_mismatch_suite(std::uint64_t seed, double tol);

struct PlayOptions {
  int n = 12;
  std::string theory = "sep";     // sep | quantum | classical
  int qubits = 0;                 // 0 = choose ceil(log2 n)
  std::string strategy = "auto";  // auto | sep12 | sep-block |
                                  // quantum-orthogonal | helstrom12 | classical
  int rounds = 10000;
  std::uint64_t seed = 42;
  double tol = 1e-9;
};

/// Seeded game simulation. Perfect strategies must reach success exactly
/// 1.0; the deliberately imperfect helstrom12 codebook is checked against
/// the quantum pair bound instead. Unsupported resource/message
/// combinations are recorded as a failed "unsupported-instance" check.
SuiteReport run_play_suite(const PlayOptions& opts);

/// Signed-basis packings for d = 1..8, the R^6 embedding of the encoding
/// set, the embedding/criterion equivalence on random pairs, and search
/// evidence that 2d+1 vectors are never found for d in {1,2,3,6}.
SuiteReport run_packing_suite(std::uint64_t seed, long long budget, double tol);

/// The five-state encoding set that survives the frozen composite: all 10
/// pairs perfectly discriminated with every effect non-negative on the
/// singlet.
SuiteReport run_frozen_suite(std::uint64_t seed, double tol);

/// Square-bit model: probability-table regression, complete binary
/// measurements, information dimension 4, factorizing product pairing,
/// pairwise distinguishability of all 16 product states. ext_file
/// optionally loads entangled extension elements (empty = none).
SuiteReport run_squarebit_suite(std::uint64_t seed, const std::string& ext_file,
                                double tol);

/// One mixed two-qubit state with two preparations of different Shannon
/// entropy (1.0 vs ~0.8113), both certified, plus the discriminability of
/// the preparing pair in the separable theory.
SuiteReport run_entropy_demo_suite(std::uint64_t seed, double tol);

struct AllSuitesOptions {
  std::uint64_t seed = 42;
  int rounds = 10000;
  long long budget = 1000000;
  double tol = 1e-9;
  std::string ext_file;
};

/// Every suite, ordered by suite name.
std::vector<SuiteReport> run_all_suites(const AllSuitesOptions& opts);

}  // namespace sepbit
