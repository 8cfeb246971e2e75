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

// Acceptance sweep: ten end-to-end criteria, one [PASS]/[FAIL] line each.
// Exits 0 only when all ten hold. Each criterion re-derives its claim from
// the public API rather than trusting another layer's bookkeeping, and the
// slow ones carry explicit wall-clock budgets.

#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "sepbit/cones.hpp"
#include "sepbit/distinguishability.hpp"
#include "sepbit/game.hpp"
#include "sepbit/operator_core.hpp"
#include "sepbit/packing.hpp"
#include "sepbit/report.hpp"
#include "sepbit/rng.hpp"
#include "sepbit/squarebit.hpp"
#include "sepbit/suites.hpp"

namespace {

using namespace sepbit;
using Clock = std::chrono::steady_clock;

int g_failures = 0;

/// Runs one criterion, timing it and enforcing an optional budget.
void criterion(int index, const std::string& title,
               const std::function<bool()>& body, double budget_s = 0.0) {
  auto t0 = Clock::now();
  bool ok = false;
  std::string error;
  try {
    ok = body();
  } catch (const std::exception& e) {
    error = e.what();
  }
  double elapsed =
      std::chrono::duration<double>(Clock::now() - t0).count();
  if (budget_s > 0.0 && elapsed >= budget_s) {
    ok = false;
    error = "over budget of " + std::to_string(budget_s) + " s";
  }
  if (!ok) {
    ++g_failures;
  }
  std::printf("[%s] %2d  %s (%.2f s)%s%s\n", ok ? "PASS" : "FAIL", index,
              title.c_str(), elapsed, error.empty() ? "" : " -- ",
              error.c_str());
}

bool expect(bool condition, const char* what) {
  if (!condition) {
    std::printf("       failed: %s\n", what);
  }
  return condition;
}

double overlap_sq(const ProductPureState& s1, const ProductPureState& s2) {
  double fa = 0.5 * (1.0 + s1.a().dot(s2.a()));
  double fb = 0.5 * (1.0 + s1.b().dot(s2.b()));
  return fa * fb;
}

BlochVector random_unit(SplitMix64& rng) {
  for (;;) {
    Eigen::Vector3d v(rng.next_normal(), rng.next_normal(), rng.next_normal());
    if (v.norm() > 1e-8) {
      return BlochVector(v / v.norm());
    }
  }
}

// 1: the base two-outcome measurement is complete, matches its closed
// form on 10^4 seeded product states, and both effects certify as
// separable-composite effects.
bool criterion_base() {
  Measurement base = base_measurement();
  Eigen::Matrix4cd sum = base.effect(0).op.matrix() +
                         base.effect(1).op.matrix() -
                         Eigen::Matrix4cd::Identity();
  bool ok = expect(sum.cwiseAbs().maxCoeff() <= 1e-12, "completeness");

  SplitMix64 rng(42);
  double worst_dev = 0.0;
  double lo = 0.0, hi = 1.0;
  for (int t = 0; t < 10000; ++t) {
    BlochVector n = random_unit(rng);
    BlochVector m = random_unit(rng);
    HermitianOperator rho = product_density(ProductPureState(n, m));
    for (int which = 1; which <= 2; ++which) {
      double closed = product_expectation_closed_form(which, n, m);
      double traced = trace_product(base.effect(which - 1).op, rho);
      worst_dev = std::max(worst_dev, std::abs(closed - traced));
      lo = std::min(lo, closed);
      hi = std::max(hi, closed);
    }
  }
  ok = expect(worst_dev <= 1e-12, "closed form vs trace") && ok;
  ok = expect(lo >= -1e-12 && hi <= 1.0 + 1e-12, "probability range") && ok;

  for (int k = 0; k < 2; ++k) {
    ConeVerdict v = is_sep_effect(base.effect(k).op);
    ok = expect(v.accepted && v.min_value >= -1e-10,
                "see-saw cone membership") &&
         ok;
  }
  return ok;
}

// 2: all 66 unordered pairs of the twelve matched-axis states are
// perfectly discriminated, and every constructed effect stays inside the
// separable effect cone.
bool criterion_sweep() {
  const auto& labels = omega12_labels();
  bool ok = true;
  for (int i = 0; i < 12 && ok; ++i) {
    for (int j = i + 1; j < 12 && ok; ++j) {
      Measurement m = pair_measurement(labels[i], labels[j]);
      DiscriminationReport d = verify_perfect_discrimination(
          m, omega12_state(labels[i]), omega12_state(labels[j]), 1e-9);
      ok = expect(d.perfect && std::abs(d.p_correct_1 - 1.0) <= 1e-9 &&
                      std::abs(d.p_correct_2 - 1.0) <= 1e-9,
                  "perfect discrimination");
      SeesawOptions opts;
      opts.restarts = 16;
      opts.iters = 100;
      for (int k = 0; k < 2 && ok; ++k) {
        opts.seed = 42 + 2ULL * static_cast<std::uint64_t>(12 * i + j) +
                    static_cast<std::uint64_t>(k);
        ok = expect(is_sep_effect(m.effect(k).op, opts).accepted,
                    "effect cone membership");
      }
    }
  }
  return ok;
}

// 3: under the quantum composition only orthogonal pairs survive; the
// pair bound at the cross-axis overlap is 0.933013; four qubits (not
// three) fit twelve orthogonal codewords.
bool criterion_quantum_limit() {
  std::vector<Omega12Label> all(omega12_labels().begin(),
                                omega12_labels().end());
  PairwiseReport q = check_pairwise_set(all, TheoryTag::Quantum);
  std::vector<std::pair<int, int>> expected_failures;
  for (int i = 0; i < 12; ++i) {
    for (int j = i + 1; j < 12; ++j) {
      if (overlap_sq(omega12_state(all[i]), omega12_state(all[j])) > 1e-9) {
        expected_failures.push_back({i, j});
      }
    }
  }
  bool ok = expect(q.failures.size() == expected_failures.size(),
                   "failure count");
  for (size_t k = 0; ok && k < q.failures.size(); ++k) {
    ok = expect(q.failures[k].i == expected_failures[k].first &&
                    q.failures[k].j == expected_failures[k].second,
                "failures exactly on the non-orthogonal pairs");
  }

  double bound = helstrom_bound(omega12_state(all[0]), omega12_state(all[8]));
  ok = expect(std::abs(bound - 0.933013) <= 1e-6, "pair bound value") && ok;

  bool threw = false;
  try {
    quantum_orthogonal_strategy(3, 12);
  } catch (const UnsupportedInstanceError&) {
    threw = true;
  }
  ok = expect(threw, "three qubits rejected") && ok;

  Strategy s = quantum_orthogonal_strategy(4, 12);
  GameConfig cfg;
  cfg.n = 12;
  cfg.theory = TheoryTag::Quantum;
  cfg.resource_count = 4;
  cfg.rounds = 10000;
  cfg.seed = 42;
  GameResult r = run_game(cfg, s);
  ok = expect(r.rounds_played == 10000 && r.success == 1.0,
              "four qubits win every round") &&
       ok;
  return ok;
}

// 4: signed-basis packings are valid for d = 1..8, the twelve states
// embed to a valid R^6 packing, and a budget-10^6 search finds 2d but
// never 2d+1 vectors for d in {1,2,3,6}.
bool criterion_packing() {
  bool ok = true;
  for (int d = 1; d <= 8; ++d) {
    ok = expect(is_valid_packing(max_packing_construct(d)).valid,
                "signed basis valid") &&
         ok;
  }
  PackingInstance embedded = packing_from_states(omega12());
  ok = expect(embedded.dim == 6 && embedded.vectors.size() == 12 &&
                  is_valid_packing(embedded).valid,
              "twelve-state embedding") &&
       ok;
  for (int d : {1, 2, 3, 6}) {
    PackingSearchReport r = packing_search(d, 2 * d + 1, 1000000, 42);
    ok = expect(r.best_size == 2 * d, "search ceiling 2d") && ok;
    ok = expect(is_valid_packing(r.best_instance).valid, "search instance") &&
         ok;
  }
  return ok;
}

// 5: two-block codewords cover 144 messages perfectly over 10^3 seeded
// rounds, and the resource comparison (4 SEP-bits vs 8 qubits) follows
// the exact integer identity up to k = 10.
bool criterion_blocks() {
  Strategy s = sep_block_strategy(2);
  bool ok = expect(s.n_messages == 144, "codeword count");
  GameConfig cfg;
  cfg.n = 144;
  cfg.theory = TheoryTag::SepMin;
  cfg.resource_count = 4;
  cfg.rounds = 1000;
  cfg.seed = 42;
  GameResult r = run_game(cfg, s);
  ok = expect(r.rounds_played == 1000 && r.success == 1.0,
              "all question pairs answered") &&
       ok;

  SepVsQubitCount two = sep_vs_qubit_count(2);
  ok = expect(two.sep_bits == 4 && two.qubits == 8, "resource comparison") &&
       ok;
  for (int k = 1; k <= 10; ++k) {
    std::uint64_t pow3 = 1;
    for (int t = 0; t < k; ++t) {
      pow3 *= 3;
    }
    int ceil_k_log2_3 = static_cast<int>(std::bit_width(pow3 - 1));
    SepVsQubitCount c = sep_vs_qubit_count(k);  // throws if identity breaks
    ok = expect(c.sep_bits == 2 * k && c.qubits == 2 * k + ceil_k_log2_3,
                "integer identity") &&
         ok;
  }
  return ok;
}

// 6: one state, two preparations: spectrum {0.75, 0.25, 0, 0}, ensemble
// entropies 1.0 and 0.811278124459, and the preparing pair sits exactly
// on the discriminability boundary.
bool criterion_entropy() {
  EntropyAmbiguityReport r = entropy_ambiguity_demo();
  bool ok = expect(std::abs(r.spectral_weights[0] - 0.75) <= 1e-10 &&
                       std::abs(r.spectral_weights[1] - 0.25) <= 1e-10 &&
                       std::abs(r.spectral_weights[2]) <= 1e-10 &&
                       std::abs(r.spectral_weights[3]) <= 1e-10,
                   "spectrum");
  ok = expect(std::abs(r.entropy_mixture - 1.0) <= 1e-9, "mixture entropy") &&
       ok;
  ok = expect(std::abs(r.entropy_spectral - 0.811278124459) <= 1e-9,
              "spectral entropy") &&
       ok;

  ProductPureState zz(BlochVector(0, 0, 1), BlochVector(0, 0, 1));
  ProductPureState xx(BlochVector(1, 0, 0), BlochVector(1, 0, 0));
  ok = expect(arai_criterion(zz, xx), "criterion holds") && ok;
  ok = expect(std::abs(arai_dot_sum(zz, xx)) <= 1e-12, "dot sum zero") && ok;
  return ok;
}

// 7: the five-state family survives the frozen composite: every effect
// used on its 10 pairs is non-negative on the singlet, and all pairs
// remain perfectly discriminated.
bool criterion_frozen() {
  const auto& l = omega12_labels();
  std::vector<Omega12Label> five = {l[0], l[4], l[7], l[8], l[11]};
  bool ok = true;
  for (size_t i = 0; i < five.size(); ++i) {
    for (size_t j = i + 1; j < five.size(); ++j) {
      Measurement m = pair_measurement(five[i], five[j]);
      for (const Effect& e : m.effects()) {
        ok = expect(singlet_expectation(e.op) >= -1e-10,
                    "effect non-negative on the singlet") &&
             ok;
      }
      DiscriminationReport d = verify_perfect_discrimination(
          m, omega12_state(five[i]), omega12_state(five[j]), 1e-9);
      ok = expect(d.perfect, "pair still perfect") && ok;
    }
  }
  PairwiseReport frozen = check_pairwise_set(five, TheoryTag::Frozen);
  ok = expect(frozen.all_pairs_perfect, "frozen pairwise check") && ok;
  return ok;
}

// 8: square-bit regression: outcome table, information dimension 4 from
// two binary measurements, all 16 product states pairwise distinguished,
// factorizing pairing.
bool criterion_squarebit() {
  static constexpr double kTable[4][4] = {
      {1, 1, 0, 0},
      {0, 1, 1, 0},
      {0, 0, 1, 1},
      {1, 0, 0, 1},
  };
  const auto& states = square_states();
  const auto& effects = square_effects();
  bool ok = true;
  for (int k = 0; k < 4; ++k) {
    for (int i = 0; i < 4; ++i) {
      ok = expect(std::abs(square_prob(effects[k], states[i]) -
                           kTable[k][i]) <= 1e-12,
                  "outcome table") &&
           ok;
    }
  }

  SquareInfoDimensionWitness w = square_info_dimension();
  ok = expect(w.info_dimension == 4 && w.pairs.size() == 6,
              "information dimension") &&
       ok;
  for (const auto& pa : w.pairs) {
    double pi = square_prob(effects[pa.measurement.effect_0], states[pa.i]);
    double pj = square_prob(effects[pa.measurement.effect_0], states[pa.j]);
    ok = expect(pi == 1.0 && pj == 0.0, "pair witness") && ok;
  }

  auto pstates = square_product_states();
  auto peffects = square_product_effects();
  double worst = 0.0;
  for (const SquareProductElement& e : peffects) {
    for (const SquareProductElement& ws : pstates) {
      double joint = square_product_prob(e, ws);
      double factored = square_prob(effects[e.i], states[ws.i]) *
                        square_prob(effects[e.j], states[ws.j]);
      worst = std::max(worst, std::abs(joint - factored));
    }
  }
  ok = expect(worst <= 1e-12, "pairing factorizes") && ok;

  int distinguished = 0;
  for (int a = 0; a < 16; ++a) {
    for (int b = a + 1; b < 16; ++b) {
      for (const SquareProductElement& e : peffects) {
        double pa = square_product_prob(e, pstates[a]);
        double pb = square_product_prob(e, pstates[b]);
        if ((pa == 1.0 && pb == 0.0) || (pa == 0.0 && pb == 1.0)) {
          ++distinguished;
          break;
        }
      }
    }
  }
  ok = expect(distinguished == 120, "all product pairs distinguished") && ok;
  return ok;
}

// 9: the dimension-mismatch report: information dimension >= 12 next to
// measurement dimension 4, with the weak no-single-measurement check.
bool criterion_mismatch() {
  SuiteReport r = run_dimension_mismatch_suite(42, 1e-9);
  bool ok = expect(r.all_passed(), "report suite");
  long long info = -1, meas = -1;
  for (const Check& c : r.checks) {
    if (c.name == "info_dimension_witness") {
      info = c.measured.get<long long>();
    }
    if (c.name == "measurement_dimension_recorded") {
      meas = c.measured.get<long long>();
    }
  }
  ok = expect(info >= 12, "information dimension") && ok;
  ok = expect(meas == 4, "measurement dimension") && ok;
  return ok;
}

// 10: every suite rerun with the same seed serializes byte-identically
// (elapsed_ms normalized, as the CLI does by default).
bool criterion_determinism() {
  AllSuitesOptions opts;
  std::vector<SuiteReport> a = run_all_suites(opts);
  std::vector<SuiteReport> b = run_all_suites(opts);
  bool ok = expect(a.size() == b.size() && a.size() == 8, "suite count");
  for (size_t k = 0; ok && k < a.size(); ++k) {
    a[k].elapsed_ms = 0;
    b[k].elapsed_ms = 0;
    ok = expect(serialize(a[k]) == serialize(b[k]),
                ("byte identity: " + a[k].suite_name).c_str());
  }
  return ok;
}

}  // namespace

int main() {
  criterion(1, "base measurement: completeness, closed form, cone membership",
            criterion_base, 1.0);
  criterion(2, "all 66 encoding pairs perfectly discriminated by separable effects",
            criterion_sweep, 5.0);
  criterion(3, "quantum composition: only orthogonal pairs resolve; 4 qubits needed",
            criterion_quantum_limit);
  criterion(4, "packings: 2d constructions valid, search never exceeds 2d",
            criterion_packing, 60.0);
  criterion(5, "block codewords: 144 messages perfect, resource identity to k=10",
            criterion_blocks);
  criterion(6, "one state, two preparations with entropies 1.0 vs 0.8113",
            criterion_entropy);
  criterion(7, "frozen composite keeps the five-state family perfectly paired",
            criterion_frozen);
  criterion(8, "square bit: outcome table, info dimension 4, factorizing pairing",
            criterion_squarebit);
  criterion(9, "information dimension 12 beside measurement dimension 4",
            criterion_mismatch);
  criterion(10, "byte-identical reports on rerun for every suite",
            criterion_determinism);

  if (g_failures == 0) {
    std::printf("acceptance: 10/10 criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d criteria FAILED\n", g_failures);
  return 1;
}
