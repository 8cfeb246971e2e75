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
 * @file distinguishability.hpp
 * Perfect discrimination of pure product states under different
 * composition rules.
 *
 * Centerpiece: the twelve matched-axis product states (both qubits point
 * along the same Pauli axis, each with a free sign). Every pair of them is
 * perfectly distinguishable in the minimal tensor product composition —
 * orthogonal pairs by a projective measurement, non-orthogonal pairs by a
 * product-unitary conjugation of the base two-outcome measurement, looked
 * up in an embedded per-pair unitary table. Under the quantum composition
 * only orthogonal pairs can be discriminated perfectly (Helstrom bound
 * < 1 otherwise).
 *
 * The Arai criterion decides perfect separable distinguishability of an
 * arbitrary pure product pair: dot(a1, a2) + dot(b1, b2) <= 0.
 */

#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "sepbit/cones.hpp"
#include "sepbit/operator_core.hpp"

namespace sepbit {

const char* to_string(Axis axis);

/// Label of one of the twelve matched-axis product states: both factors on
/// `axis`, with signs sign_a (first qubit) and sign_b (second qubit).
struct Omega12Label {
  Axis axis;
  int sign_a;  // +1 or -1
  int sign_b;  // +1 or -1

  bool operator==(const Omega12Label& o) const {
    return axis == o.axis && sign_a == o.sign_a && sign_b == o.sign_b;
  }
};

/// Compact name, bar rendered as '~': xx, xx~, x~x, x~x~, yy, ...
std::string to_string(const Omega12Label& label);

/// The twelve labels in library order: axes x, y, z; per axis the sign
/// pairs (+,+), (+,-), (-,+), (-,-).
const std::array<Omega12Label, 12>& omega12_labels();

/// Bloch-vector form of a labeled state.
ProductPureState omega12_state(const Omega12Label& label);

/// All twelve states, parallel to omega12_labels().
std::vector<ProductPureState> omega12();

/// Arai criterion for perfect separable discrimination of two pure product
/// states: dot(a1,a2) + dot(b1,b2) <= tol.
bool arai_criterion(const ProductPureState& s1, const ProductPureState& s2,
                    double tol = kAlgebraTol);

/// The Bloch dot-product sum the criterion thresholds.
double arai_dot_sum(const ProductPureState& s1, const ProductPureState& s2);

/// Two-outcome separable measurement perfectly discriminating two distinct
/// labeled states; effects() [0] identifies s1, [1] identifies s2.
/// Orthogonal pairs get a projective measurement; the rest conjugate the
/// base measurement with the product unitary from the embedded pair table.
Measurement pair_measurement(const Omega12Label& s1, const Omega12Label& s2);

/// Generalization of pair_measurement to arbitrary pure product pairs in
/// the constructible family: orthogonal pairs (projective) and pairs
/// meeting the Arai criterion with equality (conjugated base measurement).
/// Returns nullopt outside that family.
std::optional<Measurement> construct_discriminating_measurement(
    const ProductPureState& s1, const ProductPureState& s2,
    double tol = kDefaultTol);

/// Outcome probabilities of a two-outcome measurement on a state pair
/// under the diagonal assignment (effect k identifies state k).
struct DiscriminationReport {
  double p_correct_1 = 0.0;
  double p_correct_2 = 0.0;
  bool perfect = false;
};

DiscriminationReport verify_perfect_discrimination(const Measurement& m,
                                                   const HermitianOperator& s1,
                                                   const HermitianOperator& s2,
                                                   double tol = kDefaultTol);
DiscriminationReport verify_perfect_discrimination(const Measurement& m,
                                                   const ProductPureState& s1,
                                                   const ProductPureState& s2,
                                                   double tol = kDefaultTol);

/// Optimal quantum success probability for equal-prior discrimination of
/// two pure states: (1 + sqrt(1 - overlap^2)) / 2.
double helstrom_bound(const ProductPureState& s1, const ProductPureState& s2);
double helstrom_bound_from_overlap_sq(double overlap_sq);

/// Optimal quantum (projective) measurement for an equal-prior pair:
/// projector onto the positive eigenspace of s1 - s2, and its complement.
Measurement helstrom_measurement(const HermitianOperator& s1,
                                 const HermitianOperator& s2);

struct PairFailure {
  int i = 0;
  int j = 0;
  std::string reason;
};

struct PairwiseReport {
  bool all_pairs_perfect = false;
  std::vector<PairFailure> failures;
};

/// Checks every unordered pair of the listed states for perfect
/// discrimination under the given theory: Quantum (orthogonality),
/// SepMin (constructed pair measurements), Frozen (pair measurements whose
/// effects all pass the frozen filter).
PairwiseReport check_pairwise_set(const std::vector<Omega12Label>& labels,
                                  TheoryTag theory, double tol = kDefaultTol);

/// Shannon entropy (bits) of a probability vector; validates p_i >= 0 and
/// sum(p) = 1 within 1e-9.
double shannon_entropy(const std::vector<double>& p);

/// The two-decompositions demonstration: the same rank-2 mixed state
/// written as an equal mixture of two product states and as its spectral
/// decomposition, with different ensemble entropies.
struct EntropyAmbiguityReport {
  std::array<double, 4> mixture_weights;   // preparation ensemble
  std::array<double, 4> spectral_weights;  // eigh eigenvalues, descending
  double entropy_mixture = 0.0;
  double entropy_spectral = 0.0;
  /// Max-abs residual of rebuilding the state from the closed-form
  /// spectral vectors (3,1,1,1)/sqrt(12) and (-1,1,1,1)/2.
  double eigenvector_residual = 0.0;
  /// Arai functional for the two preparation states.
  double bloch_dot_sum = 0.0;
  bool sep_distinguishable = false;
};

EntropyAmbiguityReport entropy_ambiguity_demo();

/// Heuristic maximum of the average success probability over *all*
/// product-unitary conjugations of the base measurement, computed by an
/// alternating Procrustes see-saw over the two local Bloch rotations.
/// Sound as a lower bound on the separable optimum; used to corroborate
/// that criterion-failing pairs stay below 1.
double seesaw_max_pair_success(const ProductPureState& s1,
                               const ProductPureState& s2, int restarts = 32,
                               std::uint64_t seed = 42);

}  // namespace sepbit
