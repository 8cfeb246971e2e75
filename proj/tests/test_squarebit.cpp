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

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>

#include "doctest.h"
#include "sepbit/squarebit.hpp"

using namespace sepbit;

namespace {

/// The known outcome table: square_prob(e_k, w_i) for effect row k and
/// state column i. Each effect answers "yes" on exactly two neighboring
/// corners of the square.
constexpr double kTable[4][4] = {
    {1, 1, 0, 0},
    {0, 1, 1, 0},
    {0, 0, 1, 1},
    {1, 0, 0, 1},
};

}  // namespace

TEST_SUITE("squarebit") {

TEST_CASE("pure states sit on the corners and validate") {
  const auto& states = square_states();
  CHECK(states[0].v == Eigen::Vector3d(1, 0, 1));
  CHECK(states[1].v == Eigen::Vector3d(0, 1, 1));
  CHECK(states[2].v == Eigen::Vector3d(-1, 0, 1));
  CHECK(states[3].v == Eigen::Vector3d(0, -1, 1));
  for (const SquareState& s : states) {
    CHECK(square_state_valid(s.v));
  }
  CHECK(square_state_valid(Eigen::Vector3d(0.25, -0.25, 1)));
  CHECK(square_state_valid(Eigen::Vector3d(0, 0, 1)));
  CHECK_FALSE(square_state_valid(Eigen::Vector3d(0.8, 0.8, 1)));   // outside
  CHECK_FALSE(square_state_valid(Eigen::Vector3d(0.2, 0.2, 0.9)));  // scale
}

TEST_CASE("pairing reproduces the outcome table") {
  const auto& states = square_states();
  const auto& effects = square_effects();
  for (int k = 0; k < 4; ++k) {
    for (int i = 0; i < 4; ++i) {
      CHECK(std::abs(square_prob(effects[k], states[i]) - kTable[k][i]) <
            1e-15);
    }
  }
  // The unit effect answers 1 everywhere, including mixed interior states.
  for (const SquareState& s : states) {
    CHECK(square_prob(square_unit_effect(), s) == 1.0);
  }
  SquareState center{Eigen::Vector3d(0, 0, 1)};
  CHECK(square_prob(square_unit_effect(), center) == 1.0);

  // Inconsistent pairs are rejected rather than silently clipped.
  SquareEffect doubled{Eigen::Vector3d(2, 2, 2)};
  CHECK_THROWS_AS(square_prob(doubled, states[0]), std::runtime_error);
}

TEST_CASE("two binary measurements witness information dimension four") {
  SquareInfoDimensionWitness w = square_info_dimension();
  CHECK(w.info_dimension == 4);
  REQUIRE(w.pairs.size() == 6);

  const auto& states = square_states();
  const auto& effects = square_effects();

  // Both measurements are complete: the effect pairs sum to the unit.
  for (const SquareBinaryMeasurement& m : w.measurements) {
    Eigen::Vector3d sum = effects[m.effect_0].w + effects[m.effect_1].w;
    CHECK(sum == square_unit_effect().w);
  }

  // Each assigned measurement identifies i with certainty and never says
  // i on state j.
  for (const auto& pa : w.pairs) {
    CHECK(pa.i < pa.j);
    double p_on_i = square_prob(effects[pa.measurement.effect_0], states[pa.i]);
    double p_on_j = square_prob(effects[pa.measurement.effect_0], states[pa.j]);
    CHECK(p_on_i == 1.0);
    CHECK(p_on_j == 0.0);
  }
}

TEST_CASE("sixteen product elements with a factorizing pairing") {
  auto pstates = square_product_states();
  auto peffects = square_product_effects();
  REQUIRE(pstates.size() == 16);
  REQUIRE(peffects.size() == 16);

  const auto& states = square_states();
  const auto& effects = square_effects();
  for (const SquareProductElement& e : peffects) {
    for (const SquareProductElement& w : pstates) {
      double joint = square_product_prob(e, w);
      double factored = square_prob(effects[e.i], states[w.i]) *
                        square_prob(effects[e.j], states[w.j]);
      CHECK(std::abs(joint - factored) < 1e-15);
    }
  }

  // Indexing convention: element 4*i + j has factors (i, j).
  CHECK(pstates[7].i == 1);
  CHECK(pstates[7].j == 3);
  CHECK(pstates[7].m == states[1].v * states[3].v.transpose());
}

TEST_CASE("every product-state pair is distinguished by product effects") {
  // For each pair of distinct product states, some product effect answers
  // 1 on one and 0 on the other: the pair table extends to all 120 pairs.
  auto pstates = square_product_states();
  auto peffects = square_product_effects();
  int distinguished = 0;
  for (int a = 0; a < 16; ++a) {
    for (int b = a + 1; b < 16; ++b) {
      bool found = false;
      for (const SquareProductElement& e : peffects) {
        double pa = square_product_prob(e, pstates[a]);
        double pb = square_product_prob(e, pstates[b]);
        if ((pa == 1.0 && pb == 0.0) || (pa == 0.0 && pb == 1.0)) {
          found = true;
          break;
        }
      }
      if (found) {
        ++distinguished;
      }
    }
  }
  CHECK(distinguished == 120);
}

TEST_CASE("extension loader parses blocks and comments") {
  std::string path = "test_square_ext.tmp";
  {
    std::ofstream out(path);
    out << "# comment line\n";
    out << "0 0 0  0 0 0  0 0 1\n";
    out << "# another\n";
    out << "-0.5 0.5 0\n0.5 0.5 0\n0 0 1\n";
  }
  auto blocks = load_square_extension(path);
  REQUIRE(blocks.size() == 2);
  CHECK(blocks[0](2, 2) == 1.0);
  CHECK(blocks[1](0, 0) == -0.5);
  CHECK(blocks[1](1, 1) == 0.5);
  std::remove(path.c_str());

  // The second block pairs to probabilities with every product effect and
  // is normalized by the unit-unit product effect.
  auto peffects = square_product_effects();
  SquareProductElement ext;
  ext.m = blocks[1];
  Eigen::Vector3d unit = square_unit_effect().w;
  SquareProductElement unit_effect;
  unit_effect.m = unit * unit.transpose();
  CHECK(std::abs(square_product_prob(unit_effect, ext) - 1.0) < 1e-12);
  for (const SquareProductElement& e : peffects) {
    double p = square_product_prob(e, ext);
    CHECK(p >= -1e-12);
    CHECK(p <= 1.0 + 1e-12);
  }
}

TEST_CASE("loader failures are explicit") {
  CHECK_THROWS_AS(load_square_extension("does_not_exist.tmp"),
                  std::runtime_error);

  std::string path = "test_square_bad.tmp";
  {
    std::ofstream out(path);
    out << "1 2 3 4 5\n";  // not a multiple of nine
  }
  CHECK_THROWS_AS(load_square_extension(path), std::runtime_error);
  std::remove(path.c_str());

  {
    std::ofstream out(path);
    out << "a b c d e f g h i\n";
  }
  CHECK_THROWS_AS(load_square_extension(path), std::runtime_error);
  std::remove(path.c_str());
}

}  // TEST_SUITE
