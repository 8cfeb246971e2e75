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
 * @file packing.hpp
 * Vector packings with pairwise non-positive inner products.
 *
 * A pure product pair is perfectly discriminable in the separable theory
 * exactly when the concatenations (a, b) of its Bloch vectors have
 * non-positive dot product, so sets of pairwise-discriminable product
 * states embed into R^6 packings of this kind. In R^d at most 2d unit
 * vectors can be pairwise non-positively correlated (attained by a signed
 * orthogonal basis); this module provides the embedding, a verifier, the
 * maximal constructive sets, and a randomized search that corroborates the
 * 2d ceiling numerically.
 */

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "sepbit/operator_core.hpp"

namespace sepbit {

/// A set of unit vectors in R^dim (unit within 1e-10).
struct PackingInstance {
  int dim = 0;
  std::vector<Eigen::VectorXd> vectors;
};

/// Verdict of is_valid_packing. worst_pair is present whenever the
/// instance has at least two vectors, valid or not.
struct PackingVerdict {
  struct WorstPair {
    int i = 0;
    int j = 0;
    double dot = 0.0;
  };
  bool valid = false;
  std::optional<WorstPair> worst_pair;
};

/// Raw R^6 embedding of a pure product state: the concatenation of its two
/// Bloch vectors (norm sqrt(2)). Two states are pairwise discriminable in
/// the separable theory exactly when their embeddings have non-positive
/// dot product (the embedding dot equals the Bloch dot sum identically).
Eigen::VectorXd to_packing_vector(const ProductPureState& s);

/// R^6 packing instance of a state list: embeddings normalized to unit
/// length (the sign condition is scale-invariant).
PackingInstance packing_from_states(const std::vector<ProductPureState>& states);

/// valid iff every vector is unit within 1e-10 and every pairwise dot is
/// at most tol.
PackingVerdict is_valid_packing(const PackingInstance& p,
                                double tol = kDefaultTol);

/// The maximal construction {+e_i, -e_i : i < d}: 2d vectors, pairwise
/// dots in {0, -1}.
PackingInstance max_packing_construct(int d);

struct PackingSearchReport {
  int best_size = 0;
  PackingInstance best_instance;
  long long steps_used = 0;
};

/// Randomized search for a valid packing of `target` unit vectors in R^d:
/// repulsion sweeps (projected gradient descent on the sum of squared
/// positive dots, renormalizing each move) with random restarts whenever
/// the worst dot stops making geometric progress. The budget counts vector
/// moves. Falls back to smaller sizes (half the remaining budget each)
/// until a valid configuration is found; returns the largest size found.
/// Deterministic per seed. Evidence only: failure to find `target` does
/// not prove impossibility.
PackingSearchReport packing_search(int d, int target, long long budget,
                                   std::uint64_t seed);

}  // namespace sepbit
