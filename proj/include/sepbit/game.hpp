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
 * @file game.hpp
 * Pairwise-distinguishability communication game.
 *
 * Per round, a referee draws a message eta uniformly from {0..n-1}, hands
 * it to Alice, draws a distinct alternative eta', and asks Bob — who holds
 * only Alice's encoded system — which of the (randomly ordered) pair
 * {eta, eta'} was sent. A strategy wins with certainty exactly when its
 * codewords are pairwise perfectly distinguishable, so the game separates
 * composites by information dimension rather than by state-space size.
 *
 * Strategies encode into one or more blocks (a block is a qubit register
 * or one two-qubit separable composite); decoding always measures a single
 * block chosen from the question alone.
 */

#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sepbit/cones.hpp"
#include "sepbit/operator_core.hpp"

namespace sepbit {

/// Raised when no perfect strategy exists for the requested resources
/// (e.g. more messages than the quantum information dimension 2^k allows).
struct UnsupportedInstanceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GameConfig {
  int n = 2;                // message-set size
  TheoryTag theory = TheoryTag::SepMin;
  int resource_count = 2;   // qubits (Quantum) or elementary SEP-bits
  int rounds = 10000;
  std::uint64_t seed = 42;
};

/// Bob's move for one question: measure `block` with `measurement` and
/// answer answers[outcome].
struct DecodePlan {
  int block = 0;
  Measurement measurement;
  std::vector<int> answers;
};

struct Strategy {
  std::string name;
  TheoryTag theory = TheoryTag::SepMin;
  int n_messages = 0;
  int resource_count = 0;  // qubits or SEP-bits consumed by one codeword
  int blocks = 1;
  /// message -> one state per block.
  std::function<std::vector<HermitianOperator>(int)> encode;
  /// ordered question (first, second) -> decode plan; answers must be a
  /// permutation-free subset of {first, second}.
  std::function<DecodePlan(int, int)> decode_plan;
};

struct PairStat {
  int i = 0;  // i < j, unordered message pair
  int j = 0;
  long long rounds = 0;
  long long wins = 0;
  double success = 0.0;
};

struct GameResult {
  long long rounds_played = 0;
  long long wins = 0;
  double success = 0.0;
  /// Only pairs that occurred, sorted by (i, j).
  std::vector<PairStat> per_pair;
};

/// Runs the seeded game. Each round derives its own substream from the
/// seed and round index, so results are independent of execution order and
/// bit-identical across reruns. Outcome probabilities within 1e-9 of 0 or
/// 1 are clamped before sampling so perfect strategies win exactly.
GameResult run_game(const GameConfig& cfg, const Strategy& strat);

/// Computational-basis codewords on k qubits; perfect for n <= 2^k.
/// Throws UnsupportedInstanceError when n > 2^k (no perfect quantum
/// strategy exists there).
Strategy quantum_orthogonal_strategy(int k_qubits, int n);

/// Classical baseline: n messages in ceil(log2 n) bits, represented as
/// diagonal (basis-state) codewords with the same interface.
Strategy classical_strategy(int n);

/// The twelve matched-axis product states on one separable composite
/// (two SEP-bits), decoded with the embedded pair-measurement table.
Strategy sep_strategy_12();

/// Block codewords: n = 12^k messages as base-12 digit strings, one
/// matched-axis state per block (2k SEP-bits total). Decoding measures
/// only the first block where the two candidate digit strings differ.
Strategy sep_block_strategy(int k);

/// The twelve matched-axis states decoded with optimal quantum (Helstrom)
/// pair measurements — deliberately imperfect; exercises the quantum
/// ceiling on the same codebook.
Strategy helstrom_omega12_strategy();

/// Minimal qubit count for n pairwise-distinguishable quantum codewords:
/// ceil(log2 n).
int qubit_requirement(int n);

struct SepVsQubitCount {
  int sep_bits = 0;
  int qubits = 0;
};

/// Resource comparison at block count k: 2k SEP-bits versus
/// 2k + ceil(k*log2(3)) qubits for the same 12^k messages. Computed in
/// exact integer arithmetic; verifies ceil(log2 12^k) = 2k + ceil(k log2 3).
SepVsQubitCount sep_vs_qubit_count(int k);

}  // namespace sepbit
