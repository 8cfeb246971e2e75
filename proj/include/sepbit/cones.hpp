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
 * @file cones.hpp
 * State/effect cone membership for composites of two qubits.
 *
 * Three composition rules for the same pair of qubits are told apart by a
 * theory tag: the quantum composite (positive semidefinite operators), the
 * minimal tensor product (separable states; effect cone dual to it, i.e.
 * operators with non-negative expectation on every product state), and the
 * maximal tensor product (dual roles swapped). The frozen variant keeps
 * only effects that stay non-negative on the singlet state, and SquarePR
 * tags the square-bit composite handled in squarebit.hpp.
 *
 * Membership in the product-state dual cone ("block positivity") is decided
 * by a see-saw minimization of <a(x)b|E|a(x)b| over product unit vectors:
 * a negative minimum is a sound rejection certificate carried as a witness;
 * acceptance only says multi-start minimization found no violation, so it
 * is heuristic, and every ConeVerdict records that asymmetry.
 */

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sepbit/operator_core.hpp"

namespace sepbit {

/// Composition rule / theory a state or effect belongs to.
enum class TheoryTag { Quantum, SepMin, SepMax, Frozen, SquarePR };

const char* to_string(TheoryTag tag);

/// Effect operator tagged with the theory whose effect cone it lives in.
/// Cone-membership routines require dim 4 (the two-qubit composite); other
/// dimensions are allowed so the game strategies can reuse the type for
/// block and register measurements.
struct Effect {
  HermitianOperator op;
  TheoryTag theory;
};

/// Finite-outcome measurement: effects of equal dimension summing to the
/// identity (within 1e-10), all tagged with the same theory.
class Measurement {
 public:
  Measurement(std::vector<Effect> effects, double tol = 1e-10);

  const std::vector<Effect>& effects() const { return effects_; }
  const Effect& effect(int k) const { return effects_.at(k); }
  int outcome_count() const { return static_cast<int>(effects_.size()); }
  int dim() const { return effects_.front().op.dim(); }
  TheoryTag theory() const { return effects_.front().theory; }

 private:
  std::vector<Effect> effects_;
};

/// Verdict of a cone-membership test. Rejection is exact: `witness` is a
/// product state with trace pairing `min_value` < -tol. Acceptance is
/// heuristic (see-saw found no violation), flagged by `heuristic`.
struct ConeVerdict {
  bool accepted = false;
  double min_value = 0.0;
  std::optional<ProductPureState> witness;
  bool heuristic = false;
};

/// Options for the see-saw product minimization.
struct SeesawOptions {
  int restarts = 64;
  int iters = 200;
  double tol = 1e-10;
  std::uint64_t seed = 42;
};

/// Positive semidefiniteness within tolerance (all eigenvalues >= -tol).
bool is_positive_semidefinite(const HermitianOperator& h, double tol = kDefaultTol);

/// Quantum state test: positive semidefinite and unit trace within tol.
bool is_quantum_state(const HermitianOperator& h, double tol = kDefaultTol);

/// Closed-form expectation of base effect 1 or 2 on the product state with
/// Bloch vectors (n, m):  (1 + n1 m1 - n3 m3)/2  and  (1 - n1 m1 + n3 m3)/2.
double product_expectation_closed_form(int which, const BlochVector& n,
                                       const BlochVector& m);

/// The base two-outcome separable measurement {E1, E2}, E1 + E2 = I,
/// tagged SepMin. Both effects are block positive but not positive
/// semidefinite, so the measurement exists only beyond the quantum cone.
Measurement base_measurement();

/// See-saw block-positivity test: minimizes Tr(E * product state) over
/// pure product states. dim must be 4.
ConeVerdict is_sep_effect(const HermitianOperator& e,
                          const SeesawOptions& opts = {});

/// Frozen-model filter: keeps an effect iff its expectation on the singlet
/// state (|01> - |10>)/sqrt(2) is >= -tol. Boundary effects (expectation
/// exactly 0) are kept.
bool frozen_effect_filter(const Effect& e, double tol = 1e-10);

/// Value of the frozen filter functional <singlet|E|singlet>.
double singlet_expectation(const HermitianOperator& e);

/// Conjugates an effect by a product unitary, (Ua (x) Ub) E (Ua (x) Ub)^+,
/// which preserves the separable effect cone. The result is spot-checked
/// with a short see-saw; a rejection certificate (which would indicate a
/// genuine error) raises std::runtime_error.
Effect conjugated_effect_membership(const Effect& e, const UnitaryOperator& ua,
                                    const UnitaryOperator& ub);

/// Maximal-tensor-product state test: trace-one operator accepted by the
/// product-dual see-saw (everything block positive after normalization).
ConeVerdict is_sepmax_state(const HermitianOperator& h,
                            const SeesawOptions& opts = {});

/// Singlet state vector (|01> - |10>)/sqrt(2) and its projector.
Eigen::Vector4cd singlet_ket();
HermitianOperator singlet_projector();

}  // namespace sepbit
