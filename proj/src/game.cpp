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

#include "sepbit/game.hpp"

#include <bit>
#include <map>
#include <stdexcept>
#include <utility>

#include "sepbit/distinguishability.hpp"
#include "sepbit/rng.hpp"

namespace sepbit {

namespace {

/// Probabilities this close to 0 or 1 are snapped exactly, so strategies
/// that are perfect up to float error win with probability exactly 1.
constexpr double kClampTol = 1e-9;

constexpr int kMaxQubits = 8;   // dense simulation limit (dim 256)
constexpr int kMaxBlocks = 8;   // 12^8 still fits in int

int checked_pow12(int k) {
  long long n = 1;
  for (int t = 0; t < k; ++t) {
    n *= 12;
  }
  return static_cast<int>(n);
}

std::vector<int> base12_digits(int message, int k) {
  std::vector<int> digits(k);
  for (int t = k - 1; t >= 0; --t) {
    digits[t] = message % 12;
    message /= 12;
  }
  return digits;
}

HermitianOperator basis_projector(int dim, int index) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  m(index, index) = 1.0;
  return HermitianOperator(m);
}

}  // namespace

GameResult run_game(const GameConfig& cfg, const Strategy& strat) {
  if (cfg.n < 2) {
    throw std::invalid_argument("run_game: need at least two messages");
  }
  if (cfg.rounds < 1) {
    throw std::invalid_argument("run_game: need at least one round");
  }
  if (strat.n_messages < cfg.n || strat.theory != cfg.theory ||
      strat.resource_count != cfg.resource_count) {
    throw std::invalid_argument("run_game: strategy/config mismatch");
  }

  std::vector<std::vector<HermitianOperator>> codewords;
  codewords.reserve(cfg.n);
  for (int i = 0; i < cfg.n; ++i) {
    codewords.push_back(strat.encode(i));
  }
  std::map<std::pair<int, int>, DecodePlan> plan_cache;
  std::map<std::pair<int, int>, PairStat> stats;

  GameResult result;
  for (int round = 0; round < cfg.rounds; ++round) {
    SplitMix64 rng = substream(cfg.seed, static_cast<std::uint64_t>(round));
    int eta = rng.next_int(cfg.n);
    int alt = rng.next_int(cfg.n - 1);
    if (alt >= eta) {
      ++alt;
    }
    bool flip = (rng.next_u64() & 1) != 0;
    int q1 = flip ? alt : eta;
    int q2 = flip ? eta : alt;

    auto it = plan_cache.find({q1, q2});
    if (it == plan_cache.end()) {
      it = plan_cache.emplace(std::make_pair(q1, q2), strat.decode_plan(q1, q2))
               .first;
    }
    const DecodePlan& plan = it->second;
    if (plan.block < 0 || plan.block >= static_cast<int>(codewords[eta].size())) {
      throw std::invalid_argument("run_game: decode plan addresses a missing block");
    }
    if (static_cast<int>(plan.answers.size()) !=
        plan.measurement.outcome_count()) {
      throw std::invalid_argument("run_game: decode plan answers/outcomes mismatch");
    }
    for (int answer : plan.answers) {
      if (answer != q1 && answer != q2) {
        throw std::invalid_argument(
            "run_game: decode plan answers outside the question pair");
      }
    }

    const HermitianOperator& received = codewords[eta][plan.block];
    double u = rng.next_double();
    double cumulative = 0.0;
    int outcome = plan.measurement.outcome_count() - 1;
    for (int k = 0; k < plan.measurement.outcome_count(); ++k) {
      double p = trace_product(plan.measurement.effect(k).op, received);
      if (p < kClampTol) {
        p = 0.0;
      } else if (p > 1.0 - kClampTol) {
        p = 1.0;
      }
      cumulative += p;
      if (u < cumulative) {
        outcome = k;
        break;
      }
    }

    bool win = plan.answers[outcome] == eta;
    ++result.rounds_played;
    result.wins += win ? 1 : 0;
    PairStat& ps = stats[{std::min(eta, alt), std::max(eta, alt)}];
    ++ps.rounds;
    ps.wins += win ? 1 : 0;
  }

  result.success =
      static_cast<double>(result.wins) / static_cast<double>(result.rounds_played);
  result.per_pair.reserve(stats.size());
  for (auto& [key, ps] : stats) {
    ps.i = key.first;
    ps.j = key.second;
    ps.success = static_cast<double>(ps.wins) / static_cast<double>(ps.rounds);
    result.per_pair.push_back(ps);
  }
  return result;
}

Strategy quantum_orthogonal_strategy(int k_qubits, int n) {
  if (k_qubits < 1 || k_qubits > kMaxQubits) {
    throw std::invalid_argument(
        "quantum_orthogonal_strategy: qubit count must be in [1, 8]");
  }
  if (n < 2) {
    throw std::invalid_argument("quantum_orthogonal_strategy: need n >= 2");
  }
  const int dim = 1 << k_qubits;
  if (n > dim) {
    throw UnsupportedInstanceError(
        "unsupported-instance: " + std::to_string(k_qubits) +
        " qubits admit at most " + std::to_string(dim) +
        " pairwise perfectly distinguishable messages, got n=" +
        std::to_string(n));
  }
  Strategy s;
  s.name = "quantum-orthogonal";
  s.theory = TheoryTag::Quantum;
  s.n_messages = n;
  s.resource_count = k_qubits;
  s.blocks = 1;
  s.encode = [dim](int message) {
    return std::vector<HermitianOperator>{basis_projector(dim, message)};
  };
  s.decode_plan = [dim](int q1, int q2) {
    HermitianOperator p = basis_projector(dim, q1);
    HermitianOperator rest(Eigen::MatrixXcd::Identity(dim, dim) - p.matrix());
    DecodePlan plan{0,
                    Measurement({Effect{p, TheoryTag::Quantum},
                                 Effect{rest, TheoryTag::Quantum}}),
                    {q1, q2}};
    return plan;
  };
  return s;
}

Strategy classical_strategy(int n) {
  // Basis-state codewords and diagonal readout are exactly an encoding
  // into ceil(log2 n) classical bits; only the name differs.
  Strategy s = quantum_orthogonal_strategy(qubit_requirement(n), n);
  s.name = "classical-bits";
  return s;
}

Strategy sep_strategy_12() {
  Strategy s;
  s.name = "sep-omega12";
  s.theory = TheoryTag::SepMin;
  s.n_messages = 12;
  s.resource_count = 2;
  s.blocks = 1;
  s.encode = [](int message) {
    return std::vector<HermitianOperator>{
        product_density(omega12_state(omega12_labels().at(message)))};
  };
  s.decode_plan = [](int q1, int q2) {
    const auto& labels = omega12_labels();
    DecodePlan plan{0, pair_measurement(labels.at(q1), labels.at(q2)),
                    {q1, q2}};
    return plan;
  };
  return s;
}

Strategy sep_block_strategy(int k) {
  if (k < 1 || k > kMaxBlocks) {
    throw std::invalid_argument("sep_block_strategy: k must be in [1, 8]");
  }
  Strategy s;
  s.name = "sep-block";
  s.theory = TheoryTag::SepMin;
  s.n_messages = checked_pow12(k);
  s.resource_count = 2 * k;
  s.blocks = k;
  s.encode = [k](int message) {
    std::vector<HermitianOperator> blocks;
    blocks.reserve(k);
    for (int digit : base12_digits(message, k)) {
      blocks.push_back(product_density(omega12_state(omega12_labels().at(digit))));
    }
    return blocks;
  };
  s.decode_plan = [k](int q1, int q2) {
    std::vector<int> d1 = base12_digits(q1, k);
    std::vector<int> d2 = base12_digits(q2, k);
    int block = -1;
    for (int t = 0; t < k; ++t) {
      if (d1[t] != d2[t]) {
        block = t;
        break;
      }
    }
    if (block < 0) {
      throw std::invalid_argument("sep_block_strategy: question pair is equal");
    }
    const auto& labels = omega12_labels();
    DecodePlan plan{block,
                    pair_measurement(labels.at(d1[block]), labels.at(d2[block])),
                    {q1, q2}};
    return plan;
  };
  return s;
}

Strategy helstrom_omega12_strategy() {
  Strategy s;
  s.name = "helstrom-omega12";
  s.theory = TheoryTag::Quantum;
  s.n_messages = 12;
  s.resource_count = 2;
  s.blocks = 1;
  s.encode = [](int message) {
    return std::vector<HermitianOperator>{
        product_density(omega12_state(omega12_labels().at(message)))};
  };
  s.decode_plan = [](int q1, int q2) {
    const auto& labels = omega12_labels();
    DecodePlan plan{0,
                    helstrom_measurement(
                        product_density(omega12_state(labels.at(q1))),
                        product_density(omega12_state(labels.at(q2)))),
                    {q1, q2}};
    return plan;
  };
  return s;
}

int qubit_requirement(int n) {
  if (n < 2) {
    throw std::invalid_argument("qubit_requirement: need n >= 2");
  }
  return std::bit_width(static_cast<unsigned>(n - 1));
}

SepVsQubitCount sep_vs_qubit_count(int k) {
  if (k < 1 || k > 17) {
    throw std::invalid_argument("sep_vs_qubit_count: k must be in [1, 17]");
  }
  std::uint64_t pow3 = 1, pow12 = 1;
  for (int t = 0; t < k; ++t) {
    pow3 *= 3;
    pow12 *= 12;
  }
  // ceil(log2 x) = bit_width(x - 1) in exact integer arithmetic.
  int ceil_k_log2_3 = std::bit_width(pow3 - 1);
  int ceil_log2_12k = std::bit_width(pow12 - 1);
  if (ceil_log2_12k != 2 * k + ceil_k_log2_3) {
    throw std::logic_error("sep_vs_qubit_count: resource identity violated");
  }
  return SepVsQubitCount{2 * k, 2 * k + ceil_k_log2_3};
}

}  // namespace sepbit
