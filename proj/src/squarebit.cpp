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

#include "sepbit/squarebit.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace sepbit {

const std::array<SquareState, 4>& square_states() {
  static const std::array<SquareState, 4> states = {
      SquareState{{1.0, 0.0, 1.0}},
      SquareState{{0.0, 1.0, 1.0}},
      SquareState{{-1.0, 0.0, 1.0}},
      SquareState{{0.0, -1.0, 1.0}},
  };
  return states;
}

const std::array<SquareEffect, 4>& square_effects() {
  static const std::array<SquareEffect, 4> effects = {
      SquareEffect{{1.0, 1.0, 1.0}},
      SquareEffect{{-1.0, 1.0, 1.0}},
      SquareEffect{{-1.0, -1.0, 1.0}},
      SquareEffect{{1.0, -1.0, 1.0}},
  };
  return effects;
}

SquareEffect square_unit_effect() { return SquareEffect{{0.0, 0.0, 2.0}}; }

double square_prob(const SquareEffect& e, const SquareState& w, double tol) {
  double p = 0.5 * e.w.dot(w.v);
  if (p < -tol || p > 1.0 + tol) {
    throw std::runtime_error(
        "square_prob: pairing escaped [0, 1]; inconsistent model data");
  }
  return p;
}

bool square_state_valid(const Eigen::Vector3d& v, double tol) {
  return std::abs(v(2) - 1.0) <= tol &&
         std::abs(v(0)) + std::abs(v(1)) <= 1.0 + tol;
}

SquareInfoDimensionWitness square_info_dimension() {
  SquareInfoDimensionWitness out;
  out.info_dimension = 4;
  out.measurements = {SquareBinaryMeasurement{0, 2},
                      SquareBinaryMeasurement{1, 3}};
  const auto& states = square_states();
  const auto& effects = square_effects();
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      bool found = false;
      for (const SquareBinaryMeasurement& m : out.measurements) {
        // Try both orientations: outcome 0 must identify i, outcome 1 j.
        for (const auto& [f0, f1] :
             {std::pair{m.effect_0, m.effect_1}, std::pair{m.effect_1, m.effect_0}}) {
          if (square_prob(effects[f0], states[i]) == 1.0 &&
              square_prob(effects[f1], states[j]) == 1.0) {
            out.pairs.push_back({i, j, SquareBinaryMeasurement{f0, f1}});
            found = true;
            break;
          }
        }
        if (found) {
          break;
        }
      }
      if (!found) {
        throw std::logic_error(
            "square_info_dimension: a pure-state pair lost its witness");
      }
    }
  }
  return out;
}

std::vector<SquareProductElement> square_product_states() {
  std::vector<SquareProductElement> out;
  out.reserve(16);
  const auto& states = square_states();
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      out.push_back({states[i].v * states[j].v.transpose(), i, j});
    }
  }
  return out;
}

std::vector<SquareProductElement> square_product_effects() {
  std::vector<SquareProductElement> out;
  out.reserve(16);
  const auto& effects = square_effects();
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      out.push_back({effects[i].w * effects[j].w.transpose(), i, j});
    }
  }
  return out;
}

double square_product_prob(const SquareProductElement& e,
                           const SquareProductElement& w) {
  return 0.25 * e.m.cwiseProduct(w.m).sum();
}

std::vector<Eigen::Matrix3d> load_square_extension(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("load_square_extension: cannot open " + path);
  }
  std::vector<double> numbers;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) {
      line = line.substr(0, hash);
    }
    std::istringstream ls(line);
    double x;
    while (ls >> x) {
      numbers.push_back(x);
    }
    if (!ls.eof()) {
      throw std::runtime_error("load_square_extension: non-numeric data in " +
                               path);
    }
  }
  if (numbers.size() % 9 != 0) {
    throw std::runtime_error(
        "load_square_extension: expected whole 3x3 blocks (9 numbers each), got " +
        std::to_string(numbers.size()) + " numbers");
  }
  std::vector<Eigen::Matrix3d> blocks;
  blocks.reserve(numbers.size() / 9);
  for (std::size_t b = 0; b < numbers.size(); b += 9) {
    Eigen::Matrix3d m;
    for (int r = 0; r < 3; ++r) {
      for (int c = 0; c < 3; ++c) {
        m(r, c) = numbers[b + 3 * r + c];
      }
    }
    blocks.push_back(m);
  }
  return blocks;
}

}  // namespace sepbit
