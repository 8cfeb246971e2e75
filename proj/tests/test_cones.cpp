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
#include <stdexcept>

#include "doctest.h"
#include "sepbit/cones.hpp"
#include "sepbit/operator_core.hpp"
#include "sepbit/rng.hpp"

using namespace sepbit;

namespace {

BlochVector random_unit_bloch(SplitMix64& rng) {
  for (;;) {
    Eigen::Vector3d v(rng.next_normal(), rng.next_normal(), rng.next_normal());
    if (v.norm() > 1e-8) {
      return BlochVector(v / v.norm());
    }
  }
}

}  // namespace

TEST_SUITE("cones") {

TEST_CASE("base measurement sums to the identity and is tagged SepMin") {
  Measurement base = base_measurement();
  REQUIRE(base.outcome_count() == 2);
  CHECK(base.theory() == TheoryTag::SepMin);
  Eigen::Matrix4cd sum = base.effect(0).op.matrix() +
                         base.effect(1).op.matrix() -
                         Eigen::Matrix4cd::Identity();
  CHECK(sum.cwiseAbs().maxCoeff() <= 1e-15);
}

TEST_CASE("base effects are block positive but not positive semidefinite") {
  Measurement base = base_measurement();
  EighResult spectrum = eigh(base.effect(0).op);
  CHECK(std::abs(spectrum.eigenvalues(0) - 1.5) < 1e-12);
  CHECK(std::abs(spectrum.eigenvalues(1) - 0.5) < 1e-12);
  CHECK(std::abs(spectrum.eigenvalues(2) - 0.5) < 1e-12);
  CHECK(std::abs(spectrum.eigenvalues(3) + 0.5) < 1e-12);
  CHECK_FALSE(is_positive_semidefinite(base.effect(0).op));
  CHECK_FALSE(is_positive_semidefinite(base.effect(1).op));

  for (int k = 0; k < 2; ++k) {
    ConeVerdict v = is_sep_effect(base.effect(k).op);
    CHECK(v.accepted);
    CHECK(v.min_value >= -1e-10);
    CHECK(v.heuristic);  // acceptance is always heuristic
  }
}

TEST_CASE("closed-form expectations match the numeric trace") {
  Measurement base = base_measurement();
  SplitMix64 rng(3);
  for (int t = 0; t < 500; ++t) {
    BlochVector n = random_unit_bloch(rng);
    BlochVector m = random_unit_bloch(rng);
    HermitianOperator rho = product_density(ProductPureState(n, m));
    for (int which = 1; which <= 2; ++which) {
      double closed = product_expectation_closed_form(which, n, m);
      double traced = trace_product(base.effect(which - 1).op, rho);
      CHECK(std::abs(closed - traced) <= 1e-12);
      CHECK(closed >= -1e-12);
      CHECK(closed <= 1.0 + 1e-12);
    }
  }
  CHECK_THROWS_AS(
      product_expectation_closed_form(3, BlochVector(0, 0, 1),
                                      BlochVector(0, 0, 1)),
      std::invalid_argument);
}

TEST_CASE("closed form at the extreme product states") {
  BlochVector x(1, 0, 0), z(0, 0, 1);
  // Aligned x-axis factors saturate effect 1; aligned z-axis factors
  // saturate effect 2.
  CHECK(product_expectation_closed_form(1, x, x) == 1.0);
  CHECK(product_expectation_closed_form(2, x, x) == 0.0);
  CHECK(product_expectation_closed_form(1, z, z) == 0.0);
  CHECK(product_expectation_closed_form(2, z, z) == 1.0);
}

TEST_CASE("rejection produces an exact witness certificate") {
  Measurement base = base_measurement();
  HermitianOperator negated(
      Eigen::MatrixXcd(-base.effect(0).op.matrix()));
  ConeVerdict v = is_sep_effect(negated);
  CHECK_FALSE(v.accepted);
  CHECK_FALSE(v.heuristic);  // a certificate is exact
  REQUIRE(v.witness.has_value());
  double paired = trace_product(negated, product_density(*v.witness));
  CHECK(paired == v.min_value);
  CHECK(v.min_value < -0.9);  // best violation is -1 at the x-aligned states
}

TEST_CASE("positive semidefinite operators pass the see-saw") {
  ConeVerdict v = is_sep_effect(HermitianOperator::identity(4));
  CHECK(v.accepted);
  CHECK(v.min_value >= 1.0 - 1e-12);
  CHECK_THROWS_AS(is_sep_effect(HermitianOperator::identity(2)),
                  std::invalid_argument);
}

TEST_CASE("measurement constructor validates completeness") {
  Measurement base = base_measurement();
  CHECK_THROWS_AS(Measurement({base.effect(0), base.effect(0)}),
                  std::invalid_argument);
}

TEST_CASE("singlet functional and the frozen filter") {
  CHECK(std::abs(singlet_expectation(singlet_projector()) - 1.0) < 1e-14);

  Measurement base = base_measurement();
  // Both base effects sit at +1/2 on the singlet and therefore survive.
  CHECK(std::abs(singlet_expectation(base.effect(0).op) - 0.5) < 1e-12);
  CHECK(std::abs(singlet_expectation(base.effect(1).op) - 0.5) < 1e-12);
  CHECK(frozen_effect_filter(base.effect(0)));
  CHECK(frozen_effect_filter(base.effect(1)));

  // An operator dipping below zero on the singlet is filtered out.
  Eigen::MatrixXcd dip = 0.2 * Eigen::MatrixXcd::Identity(4, 4) -
                         0.5 * singlet_projector().matrix();
  Effect filtered{HermitianOperator(dip), TheoryTag::Frozen};
  CHECK(std::abs(singlet_expectation(filtered.op) + 0.3) < 1e-12);
  CHECK_FALSE(frozen_effect_filter(filtered));
}

TEST_CASE("singlet ket matches its projector") {
  Eigen::Vector4cd psi = singlet_ket();
  CHECK(std::abs(psi(1) - 1.0 / std::sqrt(2.0)) < 1e-15);
  CHECK(std::abs(psi(2) + 1.0 / std::sqrt(2.0)) < 1e-15);
  CHECK((singlet_projector().matrix() - psi * psi.adjoint())
            .cwiseAbs()
            .maxCoeff() < 1e-15);
}

TEST_CASE("product-unitary conjugation preserves membership") {
  Measurement base = base_measurement();
  UnitaryOperator h(Eigen::MatrixXcd((Eigen::Matrix2cd() << 1, 1, 1, -1)
                                         .finished() /
                                     std::sqrt(2.0)));
  UnitaryOperator id = UnitaryOperator::identity(2);
  Effect rotated = conjugated_effect_membership(base.effect(0), h, id);
  CHECK(rotated.theory == TheoryTag::SepMin);
  ConeVerdict v = is_sep_effect(rotated.op);
  CHECK(v.accepted);
  // (Ua x Ub) E (Ua x Ub)^dagger, not the conjugation by the adjoint.
  Eigen::MatrixXcd u = kron(h.matrix(), id.matrix());
  CHECK((rotated.op.matrix() - u * base.effect(0).op.matrix() * u.adjoint())
            .cwiseAbs()
            .maxCoeff() < 1e-14);
}

TEST_CASE("the singlet is a state of the maximal composite") {
  ConeVerdict v = is_sepmax_state(singlet_projector());
  CHECK(v.accepted);
  CHECK(v.min_value >= -1e-12);  // true minimum over product states is 0

  // Not every unit-trace operator qualifies.
  Eigen::MatrixXcd bad = Eigen::MatrixXcd::Zero(4, 4);
  bad(0, 0) = 1.5;
  bad(3, 3) = -0.5;
  ConeVerdict rejected = is_sepmax_state(HermitianOperator(bad));
  CHECK_FALSE(rejected.accepted);
  REQUIRE(rejected.witness.has_value());
  CHECK(rejected.min_value < -0.4);
}

TEST_CASE("theory tags render to stable names") {
  CHECK(std::string(to_string(TheoryTag::Quantum)) == "quantum");
  CHECK(std::string(to_string(TheoryTag::SepMin)) == "sep-min");
  CHECK(std::string(to_string(TheoryTag::SepMax)) == "sep-max");
  CHECK(std::string(to_string(TheoryTag::Frozen)) == "frozen");
  CHECK(std::string(to_string(TheoryTag::SquarePR)) == "square-pr");
}

}  // TEST_SUITE
