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

#include "sepbit/distinguishability.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "sepbit/rng.hpp"

namespace sepbit {

namespace {

// ---------------------------------------------------------------------------
// Embedded pair-unitary table.
//
// Each non-orthogonal pair of matched-axis states is discriminated by
// conjugating the base measurement with a product of two single-qubit
// unitaries drawn from a fixed eight-element set. The table below stores,
// for every canonical (row state, column state) pair — row axis before
// column axis in the order x < y < z — the four labels (B, A) x (B, A)
// whose products form the two conjugation factors. Orthogonal (same-axis)
// pairs are handled projectively and have no table entry.
// ---------------------------------------------------------------------------

enum class UL { A0y, A1y, A0z, A1z, B0x, B1x, B0y, B1y };

Eigen::Matrix2cd ul_matrix(UL label) {
  const double s = 1.0 / std::sqrt(2.0);
  const Complex i(0.0, 1.0);
  Eigen::Matrix2cd m;
  switch (label) {
    case UL::A0y:
      m << s, -i * s, -i * s, s;
      return m;
    case UL::A1y:
      m << s, i * s, i * s, s;
      return m;
    case UL::A0z:
      return Eigen::Matrix2cd::Identity();
    case UL::A1z:
      m << 0.0, -i, i, 0.0;
      return m;
    case UL::B0x:
      return Eigen::Matrix2cd::Identity();
    case UL::B1x:
      m << 1.0, 0.0, 0.0, -1.0;
      return m;
    case UL::B0y:
      m << 1.0, 0.0, 0.0, -i;
      return m;
    case UL::B1y:
      m << 1.0, 0.0, 0.0, i;
      return m;
  }
  throw std::logic_error("ul_matrix: invalid label");
}

struct PairCell {
  UL b1, a1;  // first factor:  B * A
  UL b2, a2;  // second factor: B * A
};

// Row/column order inside each block: sign pairs (+,+), (+,-), (-,+), (-,-).
using Block = std::array<std::array<PairCell, 4>, 4>;

// Rows x-axis, columns y-axis.
constexpr Block kTableXY = {{
    {{{UL::B0x, UL::A0y, UL::B0x, UL::A0y},
      {UL::B0x, UL::A0y, UL::B0x, UL::A1y},
      {UL::B0x, UL::A1y, UL::B0x, UL::A0y},
      {UL::B0x, UL::A1y, UL::B0x, UL::A1y}}},
    {{{UL::B0x, UL::A0y, UL::B1x, UL::A0y},
      {UL::B0x, UL::A0y, UL::B1x, UL::A1y},
      {UL::B0x, UL::A1y, UL::B1x, UL::A0y},
      {UL::B0x, UL::A1y, UL::B1x, UL::A1y}}},
    {{{UL::B1x, UL::A0y, UL::B0x, UL::A0y},
      {UL::B1x, UL::A0y, UL::B0x, UL::A1y},
      {UL::B1x, UL::A1y, UL::B0x, UL::A0y},
      {UL::B1x, UL::A1y, UL::B0x, UL::A1y}}},
    {{{UL::B1x, UL::A0y, UL::B1x, UL::A0y},
      {UL::B1x, UL::A0y, UL::B1x, UL::A1y},
      {UL::B1x, UL::A1y, UL::B1x, UL::A0y},
      {UL::B1x, UL::A1y, UL::B1x, UL::A1y}}},
}};

// Rows x-axis, columns z-axis.
constexpr Block kTableXZ = {{
    {{{UL::B0x, UL::A0z, UL::B0x, UL::A0z},
      {UL::B0x, UL::A0z, UL::B1x, UL::A1z},
      {UL::B1x, UL::A1z, UL::B0x, UL::A0z},
      {UL::B1x, UL::A1z, UL::B1x, UL::A1z}}},
    {{{UL::B0x, UL::A0z, UL::B1x, UL::A0z},
      {UL::B0x, UL::A0z, UL::B0x, UL::A1z},
      {UL::B1x, UL::A1z, UL::B1x, UL::A0z},
      {UL::B1x, UL::A1z, UL::B0x, UL::A1z}}},
    {{{UL::B1x, UL::A0z, UL::B0x, UL::A0z},
      {UL::B1x, UL::A0z, UL::B1x, UL::A1z},
      {UL::B0x, UL::A1z, UL::B0x, UL::A0z},
      {UL::B0x, UL::A1z, UL::B1x, UL::A1z}}},
    {{{UL::B1x, UL::A0z, UL::B1x, UL::A0z},
      {UL::B1x, UL::A0z, UL::B0x, UL::A1z},
      {UL::B0x, UL::A1z, UL::B1x, UL::A0z},
      {UL::B0x, UL::A1z, UL::B0x, UL::A1z}}},
}};

// Rows y-axis, columns z-axis.
constexpr Block kTableYZ = {{
    {{{UL::B0y, UL::A0z, UL::B0y, UL::A0z},
      {UL::B0y, UL::A0z, UL::B0y, UL::A1z},
      {UL::B0y, UL::A1z, UL::B0y, UL::A0z},
      {UL::B0y, UL::A1z, UL::B0y, UL::A1z}}},
    {{{UL::B0y, UL::A0z, UL::B1y, UL::A0z},
      {UL::B0y, UL::A0z, UL::B1y, UL::A1z},
      {UL::B0y, UL::A1z, UL::B1y, UL::A0z},
      {UL::B0y, UL::A1z, UL::B1y, UL::A1z}}},
    {{{UL::B1y, UL::A0z, UL::B0y, UL::A0z},
      {UL::B1y, UL::A0z, UL::B0y, UL::A1z},
      {UL::B1y, UL::A1z, UL::B0y, UL::A0z},
      {UL::B1y, UL::A1z, UL::B0y, UL::A1z}}},
    {{{UL::B1y, UL::A0z, UL::B1y, UL::A0z},
      {UL::B1y, UL::A0z, UL::B1y, UL::A1z},
      {UL::B1y, UL::A1z, UL::B1y, UL::A0z},
      {UL::B1y, UL::A1z, UL::B1y, UL::A1z}}},
}};

int axis_rank(Axis a) {
  switch (a) {
    case Axis::X:
      return 0;
    case Axis::Y:
      return 1;
    case Axis::Z:
      return 2;
  }
  throw std::logic_error("axis_rank: invalid axis");
}

int sign_index(const Omega12Label& l) {
  return (l.sign_a < 0 ? 2 : 0) + (l.sign_b < 0 ? 1 : 0);
}

const Block& block_for(Axis row_axis, Axis col_axis) {
  if (row_axis == Axis::X && col_axis == Axis::Y) return kTableXY;
  if (row_axis == Axis::X && col_axis == Axis::Z) return kTableXZ;
  if (row_axis == Axis::Y && col_axis == Axis::Z) return kTableYZ;
  throw std::logic_error("block_for: pair is not in canonical orientation");
}

/// Squared |<s1|s2>| for pure product states, from Bloch vectors.
double product_overlap_sq(const ProductPureState& s1,
                          const ProductPureState& s2) {
  return 0.25 * (1.0 + s1.a().dot(s2.a())) * (1.0 + s1.b().dot(s2.b()));
}

Measurement projective_pair_measurement(const ProductPureState& s1) {
  Eigen::Vector4cd psi = product_ket(s1);
  HermitianOperator p(psi * psi.adjoint());
  HermitianOperator rest(Eigen::Matrix4cd::Identity() - p.matrix());
  return Measurement(
      {Effect{p, TheoryTag::SepMin}, Effect{rest, TheoryTag::SepMin}});
}

/// Orders a two-outcome measurement so effect 0 identifies s1 (probability
/// 1 within tolerance), swapping the effects if needed.
Measurement oriented(const Measurement& m, const ProductPureState& s1,
                     double tol = kDefaultTol) {
  double p = trace_product(m.effect(0).op, product_density(s1));
  if (std::abs(p - 1.0) <= tol) {
    return m;
  }
  return Measurement({m.effect(1), m.effect(0)});
}

/// Single-qubit unitary whose conjugation maps the Bloch pair
/// (from1, from2) onto (to1, to2). Requires equal angles between the pairs
/// (the map must be an isometry on the spanned states).
UnitaryOperator map_pair_unitary(const BlochVector& from1,
                                 const BlochVector& from2,
                                 const BlochVector& to1,
                                 const BlochVector& to2) {
  auto perp = [](const Eigen::Vector2cd& v) {
    return Eigen::Vector2cd(-std::conj(v(1)), std::conj(v(0)));
  };
  Eigen::Vector2cd a1 = ket(from1), a2 = ket(from2);
  Eigen::Vector2cd n1 = ket(to1), n2 = ket(to2);
  Eigen::Vector2cd a1p = perp(a1), n1p = perp(n1);

  // Overlap decomposition a2 = g a1 + sa a1_perp (and likewise for the
  // targets). |g| == |h| holds when the pair angles agree.
  Complex g = a1.dot(a2), sa = a1p.dot(a2);
  Complex h = n1.dot(n2), sn = n1p.dot(n2);

  // U = |n1><a1| + chi |n1_perp><a1_perp| with the phase chi chosen so
  // that U a2 is proportional to n2: (g, sa * chi) ~ (h, sn).
  Complex chi(1.0, 0.0);
  if (std::abs(sa) > 1e-9 && std::abs(h) > 1e-9) {
    chi = (g * sn) / (h * sa);
    chi /= std::abs(chi);
  } else if (std::abs(sa) > 1e-9 && std::abs(sn) > 1e-9) {
    // Orthogonal kets on both sides: only the perp-amplitude phase matters.
    chi = sn / sa;
    chi /= std::abs(chi);
  }
  Eigen::Matrix2cd u =
      n1 * a1.adjoint() + chi * (n1p * a1p.adjoint());
  return UnitaryOperator(u);
}

/// Conjugated-base-measurement construction for a pair meeting the Arai
/// criterion with equality: map the pair onto the canonical tight
/// configuration, then pull the base measurement back.
Measurement tight_pair_measurement(const ProductPureState& s1,
                                   const ProductPureState& s2) {
  double ca = std::clamp(s1.a().dot(s2.a()), -1.0, 1.0);
  double alpha = std::acos(ca);
  double sh = std::sin(alpha / 2.0), ch = std::cos(alpha / 2.0);

  // Canonical tight targets: first factors (±sh, 0, ch), second factors
  // (sh, 0, ∓ch); the first pair lands on the probability-1 face of base
  // effect 1, the second on the probability-1 face of base effect 2.
  BlochVector n1t(sh, 0.0, ch), n2t(-sh, 0.0, ch);
  BlochVector m1t(sh, 0.0, -ch), m2t(sh, 0.0, ch);

  UnitaryOperator ua = map_pair_unitary(s1.a(), s2.a(), n1t, n2t);
  UnitaryOperator ub = map_pair_unitary(s1.b(), s2.b(), m1t, m2t);
  UnitaryOperator u = tensor(ua, ub);

  Measurement base = base_measurement();
  return Measurement({Effect{conjugate(base.effect(0).op, u), TheoryTag::SepMin},
                      Effect{conjugate(base.effect(1).op, u), TheoryTag::SepMin}});
}

}  // namespace

const char* to_string(Axis axis) {
  switch (axis) {
    case Axis::X:
      return "x";
    case Axis::Y:
      return "y";
    case Axis::Z:
      return "z";
  }
  return "?";
}

std::string to_string(const Omega12Label& label) {
  std::string out = to_string(label.axis);
  if (label.sign_a < 0) out += "~";
  out += to_string(label.axis);
  if (label.sign_b < 0) out += "~";
  return out;
}

const std::array<Omega12Label, 12>& omega12_labels() {
  static const std::array<Omega12Label, 12> labels = [] {
    std::array<Omega12Label, 12> l{};
    int k = 0;
    for (Axis axis : {Axis::X, Axis::Y, Axis::Z}) {
      for (int sa : {1, -1}) {
        for (int sb : {1, -1}) {
          l[k++] = Omega12Label{axis, sa, sb};
        }
      }
    }
    return l;
  }();
  return labels;
}

ProductPureState omega12_state(const Omega12Label& label) {
  return ProductPureState(pauli_eigenstate(label.axis, label.sign_a),
                          pauli_eigenstate(label.axis, label.sign_b));
}

std::vector<ProductPureState> omega12() {
  std::vector<ProductPureState> states;
  states.reserve(12);
  for (const Omega12Label& l : omega12_labels()) {
    states.push_back(omega12_state(l));
  }
  return states;
}

double arai_dot_sum(const ProductPureState& s1, const ProductPureState& s2) {
  return s1.a().dot(s2.a()) + s1.b().dot(s2.b());
}

bool arai_criterion(const ProductPureState& s1, const ProductPureState& s2,
                    double tol) {
  return arai_dot_sum(s1, s2) <= tol;
}

Measurement pair_measurement(const Omega12Label& s1, const Omega12Label& s2) {
  if (s1 == s2) {
    throw std::invalid_argument("pair_measurement: states must be distinct");
  }
  ProductPureState w1 = omega12_state(s1);
  if (s1.axis == s2.axis) {
    // Same axis, different signs: the product kets are orthogonal.
    return projective_pair_measurement(w1);
  }
  const bool s1_is_row = axis_rank(s1.axis) < axis_rank(s2.axis);
  const Omega12Label& row = s1_is_row ? s1 : s2;
  const Omega12Label& col = s1_is_row ? s2 : s1;
  const PairCell& cell =
      block_for(row.axis, col.axis)[sign_index(row)][sign_index(col)];

  UnitaryOperator w_first(ul_matrix(cell.b1) * ul_matrix(cell.a1));
  UnitaryOperator w_second(ul_matrix(cell.b2) * ul_matrix(cell.a2));
  UnitaryOperator u = tensor(w_first, w_second);

  Measurement base = base_measurement();
  Measurement m({Effect{conjugate(base.effect(0).op, u), TheoryTag::SepMin},
                 Effect{conjugate(base.effect(1).op, u), TheoryTag::SepMin}});
  return oriented(m, w1);
}

std::optional<Measurement> construct_discriminating_measurement(
    const ProductPureState& s1, const ProductPureState& s2, double tol) {
  if (product_overlap_sq(s1, s2) <= tol) {
    return oriented(projective_pair_measurement(s1), s1, tol);
  }
  if (std::abs(arai_dot_sum(s1, s2)) <= tol) {
    return oriented(tight_pair_measurement(s1, s2), s1, tol);
  }
  return std::nullopt;
}

DiscriminationReport verify_perfect_discrimination(const Measurement& m,
                                                   const HermitianOperator& s1,
                                                   const HermitianOperator& s2,
                                                   double tol) {
  if (m.outcome_count() != 2) {
    throw std::invalid_argument(
        "verify_perfect_discrimination: needs a two-outcome measurement");
  }
  if (m.dim() != s1.dim() || m.dim() != s2.dim()) {
    throw std::invalid_argument(
        "verify_perfect_discrimination: state/measurement dimension mismatch");
  }
  DiscriminationReport r;
  r.p_correct_1 = trace_product(m.effect(0).op, s1);
  r.p_correct_2 = trace_product(m.effect(1).op, s2);
  r.perfect = r.p_correct_1 >= 1.0 - tol && r.p_correct_2 >= 1.0 - tol;
  return r;
}

DiscriminationReport verify_perfect_discrimination(const Measurement& m,
                                                   const ProductPureState& s1,
                                                   const ProductPureState& s2,
                                                   double tol) {
  return verify_perfect_discrimination(m, product_density(s1),
                                       product_density(s2), tol);
}

double helstrom_bound_from_overlap_sq(double overlap_sq) {
  if (overlap_sq < -kAlgebraTol || overlap_sq > 1.0 + kAlgebraTol) {
    throw std::invalid_argument(
        "helstrom_bound_from_overlap_sq: overlap^2 must lie in [0, 1]");
  }
  double c = std::clamp(overlap_sq, 0.0, 1.0);
  return 0.5 * (1.0 + std::sqrt(1.0 - c));
}

double helstrom_bound(const ProductPureState& s1, const ProductPureState& s2) {
  return helstrom_bound_from_overlap_sq(product_overlap_sq(s1, s2));
}

Measurement helstrom_measurement(const HermitianOperator& s1,
                                 const HermitianOperator& s2) {
  if (s1.dim() != s2.dim()) {
    throw std::invalid_argument("helstrom_measurement: dimension mismatch");
  }
  HermitianOperator delta(s1.matrix() - s2.matrix());
  EighResult r = eigh(delta);
  Eigen::MatrixXcd plus = Eigen::MatrixXcd::Zero(s1.dim(), s1.dim());
  for (int k = 0; k < s1.dim(); ++k) {
    if (r.eigenvalues[k] > kAlgebraTol) {
      plus += r.eigenvectors.col(k) * r.eigenvectors.col(k).adjoint();
    }
  }
  HermitianOperator p(plus);
  HermitianOperator rest(Eigen::MatrixXcd::Identity(s1.dim(), s1.dim()) -
                         p.matrix());
  return Measurement(
      {Effect{p, TheoryTag::Quantum}, Effect{rest, TheoryTag::Quantum}});
}

PairwiseReport check_pairwise_set(const std::vector<Omega12Label>& labels,
                                  TheoryTag theory, double tol) {
  if (labels.size() < 2) {
    throw std::invalid_argument("check_pairwise_set: needs at least two states");
  }
  if (theory != TheoryTag::Quantum && theory != TheoryTag::SepMin &&
      theory != TheoryTag::Frozen) {
    throw std::invalid_argument(
        "check_pairwise_set: theory must be Quantum, SepMin or Frozen");
  }
  PairwiseReport report;
  report.all_pairs_perfect = true;
  const int n = static_cast<int>(labels.size());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (labels[i] == labels[j]) {
        throw std::invalid_argument("check_pairwise_set: duplicate state " +
                                    to_string(labels[i]));
      }
      ProductPureState si = omega12_state(labels[i]);
      ProductPureState sj = omega12_state(labels[j]);
      if (theory == TheoryTag::Quantum) {
        if (product_overlap_sq(si, sj) > tol) {
          report.failures.push_back(
              {i, j, "non-orthogonal pair: no perfect quantum measurement"});
        }
        continue;
      }
      Measurement m = pair_measurement(labels[i], labels[j]);
      if (theory == TheoryTag::Frozen) {
        bool removed = false;
        for (const Effect& e : m.effects()) {
          if (!frozen_effect_filter(e)) {
            removed = true;
            break;
          }
        }
        if (removed) {
          report.failures.push_back(
              {i, j, "pair measurement removed by the frozen filter"});
          continue;
        }
      }
      DiscriminationReport d = verify_perfect_discrimination(m, si, sj, tol);
      if (!d.perfect) {
        report.failures.push_back({i, j, "constructed measurement imperfect"});
      }
    }
  }
  report.all_pairs_perfect = report.failures.empty();
  return report;
}

double shannon_entropy(const std::vector<double>& p) {
  if (p.empty()) {
    throw std::invalid_argument("shannon_entropy: empty distribution");
  }
  double sum = 0.0;
  for (double v : p) {
    if (v < -kAlgebraTol) {
      throw std::invalid_argument(
          "shannon_entropy: negative probability entry");
    }
    sum += v;
  }
  if (std::abs(sum - 1.0) > kDefaultTol) {
    throw std::invalid_argument("shannon_entropy: probabilities must sum to 1");
  }
  double h = 0.0;
  for (double v : p) {
    if (v > 1e-15) {
      h -= v * std::log2(v);
    }
  }
  return h;
}

EntropyAmbiguityReport entropy_ambiguity_demo() {
  ProductPureState zz(pauli_eigenstate(Axis::Z, 1), pauli_eigenstate(Axis::Z, 1));
  ProductPureState xx(pauli_eigenstate(Axis::X, 1), pauli_eigenstate(Axis::X, 1));
  HermitianOperator rho(0.5 * product_density(zz).matrix() +
                        0.5 * product_density(xx).matrix());

  EntropyAmbiguityReport out;
  out.mixture_weights = {0.5, 0.5, 0.0, 0.0};

  EighResult spectrum = eigh(rho);
  for (int k = 0; k < 4; ++k) {
    out.spectral_weights[static_cast<std::size_t>(k)] =
        std::max(0.0, spectrum.eigenvalues[k]);
  }

  // Closed-form spectral vectors of the same state.
  Eigen::Vector4cd psi1, psi2;
  psi1 << 3.0, 1.0, 1.0, 1.0;
  psi1 /= std::sqrt(12.0);
  psi2 << -1.0, 1.0, 1.0, 1.0;
  psi2 /= 2.0;
  Eigen::Matrix4cd rebuilt = 0.75 * (psi1 * psi1.adjoint()).eval() +
                             0.25 * (psi2 * psi2.adjoint()).eval();
  out.eigenvector_residual = (rebuilt - rho.matrix()).cwiseAbs().maxCoeff();

  out.entropy_mixture = shannon_entropy(
      {out.mixture_weights[0], out.mixture_weights[1], 0.0, 0.0});
  out.entropy_spectral = shannon_entropy(
      {out.spectral_weights[0], out.spectral_weights[1],
       out.spectral_weights[2], out.spectral_weights[3]});

  out.bloch_dot_sum = arai_dot_sum(zz, xx);
  out.sep_distinguishable = arai_criterion(zz, xx);
  return out;
}

namespace {

/// max over R in SO(3) of tr(R^T M); returns the maximizer.
Eigen::Matrix3d procrustes_so3(const Eigen::Matrix3d& m, double* value) {
  Eigen::JacobiSVD<Eigen::Matrix3d> svd(
      m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Eigen::Matrix3d u = svd.matrixU();
  Eigen::Matrix3d v = svd.matrixV();
  double det = (u * v.transpose()).determinant();
  Eigen::Vector3d s = svd.singularValues();
  *value = s(0) + s(1) + det * s(2);
  return u * Eigen::Vector3d(1.0, 1.0, det).asDiagonal() * v.transpose();
}

Eigen::Matrix3d random_rotation(SplitMix64& rng) {
  Eigen::Vector3d a, b;
  do {
    a = Eigen::Vector3d(rng.next_normal(), rng.next_normal(), rng.next_normal());
  } while (a.norm() < 1e-9);
  a.normalize();
  do {
    b = Eigen::Vector3d(rng.next_normal(), rng.next_normal(), rng.next_normal());
    b -= a.dot(b) * a;
  } while (b.norm() < 1e-9);
  b.normalize();
  Eigen::Matrix3d r;
  r.col(0) = a;
  r.col(1) = b;
  r.col(2) = a.cross(b);
  return r;
}

}  // namespace

double seesaw_max_pair_success(const ProductPureState& s1,
                               const ProductPureState& s2, int restarts,
                               std::uint64_t seed) {
  if (restarts < 1) {
    throw std::invalid_argument("seesaw_max_pair_success: restarts must be >= 1");
  }
  // Average success of the conjugated base measurement is
  //   1/2 + 1/4 tr(Ra^T C Rb G),
  // with C = diag(1, 0, -1) (the base-effect bilinear form on Bloch
  // vectors) and G = b1 a1^T - b2 a2^T the pair data.
  Eigen::Matrix3d c = Eigen::Vector3d(1.0, 0.0, -1.0).asDiagonal();
  Eigen::Matrix3d g = s1.b().vec() * s1.a().vec().transpose() -
                      s2.b().vec() * s2.a().vec().transpose();

  double best = 0.5;
  for (int r = 0; r < restarts; ++r) {
    SplitMix64 rng = substream(seed, static_cast<std::uint64_t>(r));
    Eigen::Matrix3d rb = random_rotation(rng);
    Eigen::Matrix3d ra = Eigen::Matrix3d::Identity();
    double j = 0.0;
    for (int it = 0; it < 100; ++it) {
      double previous = j;
      ra = procrustes_so3(c * rb * g, &j);
      rb = procrustes_so3(c.transpose() * ra * g.transpose(), &j);
      if (std::abs(j - previous) < 1e-13) {
        break;
      }
    }
    best = std::max(best, 0.5 + 0.25 * j);
  }
  return std::min(best, 1.0);
}

}  // namespace sepbit
