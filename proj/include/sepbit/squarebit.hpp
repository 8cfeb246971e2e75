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
 * @file squarebit.hpp
 * The square bit: a minimal non-quantum system whose normalized state
 * space is the square with corners (±1, 0), (0, ±1) in homogeneous
 * coordinates (x, y, 1). It has four pure states and four ray-extremal
 * effects, information dimension 4 (each of the six pure-state pairs is
 * perfectly distinguished by one of two binary measurements) but
 * measurement dimension 2. Bipartite composition is modelled through the
 * sixteen product states/effects (outer products of the single-system
 * vectors) with a factorizing pairing; entangled extension elements can be
 * loaded from a data file.
 */

#pragma once

#include <array>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "sepbit/operator_core.hpp"

namespace sepbit {

/// Normalized square-bit state: (x, y, 1) with |x| + |y| <= 1.
struct SquareState {
  Eigen::Vector3d v;
};

/// Square-bit effect vector; pairing value must land in [0, 1] on every
/// normalized state.
struct SquareEffect {
  Eigen::Vector3d w;
};

/// Product state/effect of two square bits: the rank-one outer product of
/// the factor vectors, indexed 4*i + j.
struct SquareProductElement {
  Eigen::Matrix3d m;
  int i = 0;  // first factor index
  int j = 0;  // second factor index
};

/// The four pure states (1,0,1), (0,1,1), (-1,0,1), (0,-1,1).
const std::array<SquareState, 4>& square_states();

/// The four ray-extremal effects (1,1,1), (-1,1,1), (-1,-1,1), (1,-1,1).
const std::array<SquareEffect, 4>& square_effects();

/// Unit effect (0,0,2): value 1 on every normalized state.
SquareEffect square_unit_effect();

/// Pairing p = (e . w) / 2; throws when the value escapes [0,1] beyond
/// tolerance (inconsistent model data).
double square_prob(const SquareEffect& e, const SquareState& w,
                   double tol = kDefaultTol);

/// True when v is a valid normalized state: third component 1 and (x, y)
/// inside the square (|x| + |y| <= 1), all within tol.
bool square_state_valid(const Eigen::Vector3d& v, double tol = kDefaultTol);

/// A binary measurement given by an effect index pair; the two effects sum
/// to the unit effect.
struct SquareBinaryMeasurement {
  int effect_0 = 0;
  int effect_1 = 0;
};

struct SquareInfoDimensionWitness {
  int info_dimension = 0;
  /// The two complete binary measurements {e0, e2} and {e1, e3}.
  std::array<SquareBinaryMeasurement, 2> measurements;
  /// For every unordered pure-state pair (i, j): a measurement from
  /// `measurements` and the outcome orientation that identifies i with
  /// probability 1 and j with probability 0.
  struct PairAssignment {
    int i = 0;
    int j = 0;
    SquareBinaryMeasurement measurement;
  };
  std::vector<PairAssignment> pairs;
};

/// Information dimension 4, witnessed by the two binary measurements that
/// together perfectly distinguish all six pure-state pairs.
SquareInfoDimensionWitness square_info_dimension();

/// The sixteen product states Omega_{4i+j} = w_i w_j^T.
std::vector<SquareProductElement> square_product_states();
/// The sixteen product effects E_{4i+j} = e_i e_j^T.
std::vector<SquareProductElement> square_product_effects();

/// Product pairing: Frobenius inner product scaled by 1/4; factorizes as
/// square_prob(e_i, w_k) * square_prob(e_j, w_l) on product elements.
double square_product_prob(const SquareProductElement& e,
                           const SquareProductElement& w);

/// Loads optional entangled extension elements: plain text, nine
/// whitespace-separated numbers per 3x3 block, row-major; '#' starts a
/// comment line. Returns the parsed matrices (possibly none).
std::vector<Eigen::Matrix3d> load_square_extension(const std::string& path);

}  // namespace sepbit
