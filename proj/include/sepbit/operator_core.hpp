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
 * @file operator_core.hpp
 * Finite-dimensional Hermitian/unitary operator algebra for one and two
 * qubits: Bloch parameterization, tensor products, conjugation and a
 * deterministic Hermitian eigendecomposition.
 *
 * Conventions (fixed across the whole library):
 *  - two-qubit basis order |00>, |01>, |10>, |11>; the first factor of a
 *    tensor product owns the most significant index,
 *  - sigma_y = [[0, -i], [i, 0]],
 *  - ket(n) = (cos(theta/2), e^{i phi} sin(theta/2)) for a unit Bloch
 *    vector n = (sin t cos p, sin t sin p, cos t),
 *  - eigh returns eigenvalues sorted descending; each eigenvector is
 *    phase-normalized so its first non-negligible component is real
 *    positive.
 */

#pragma once

#include <Eigen/Dense>
#include <array>
#include <complex>

namespace sepbit {

using Complex = std::complex<double>;

/// Tolerance for exact algebraic identities (hermiticity, unitarity, ...).
inline constexpr double kAlgebraTol = 1e-12;
/// Default tolerance for acceptance-style numeric checks.
inline constexpr double kDefaultTol = 1e-9;

enum class Axis { X, Y, Z };

/// Bloch vector of a single qubit state; norm must not exceed 1.
class BlochVector {
 public:
  BlochVector(double x, double y, double z);
  explicit BlochVector(const Eigen::Vector3d& v);

  const Eigen::Vector3d& vec() const { return v_; }
  double x() const { return v_.x(); }
  double y() const { return v_.y(); }
  double z() const { return v_.z(); }
  double norm() const { return v_.norm(); }
  /// True when the vector sits on the Bloch sphere (pure state).
  bool is_unit(double tol = kAlgebraTol) const;
  double dot(const BlochVector& o) const { return v_.dot(o.v_); }
  BlochVector operator-() const { return BlochVector(-v_); }

 private:
  Eigen::Vector3d v_;
};

/// Pure product state of two qubits, stored as a pair of unit Bloch
/// vectors (first factor, second factor).
class ProductPureState {
 public:
  ProductPureState(const BlochVector& a, const BlochVector& b);

  const BlochVector& a() const { return a_; }
  const BlochVector& b() const { return b_; }

 private:
  BlochVector a_, b_;
};

/// Hermitian operator on a finite-dimensional Hilbert space (single qubit,
/// qubit pair, or a register of qubits for the communication strategies).
/// Construction validates squareness and hermiticity, then symmetrizes
/// (M + M^dagger)/2 so the invariant holds exactly.
class HermitianOperator {
 public:
  explicit HermitianOperator(const Eigen::MatrixXcd& m,
                             double tol = kAlgebraTol);

  int dim() const { return static_cast<int>(m_.rows()); }
  const Eigen::MatrixXcd& matrix() const { return m_; }
  Complex operator()(int i, int j) const { return m_(i, j); }
  /// Trace (exactly real for a Hermitian operator).
  double trace() const { return m_.trace().real(); }

  static HermitianOperator identity(int dim);

 private:
  Eigen::MatrixXcd m_;
};

/// Unitary operator; construction validates U U^dagger = I within
/// tolerance.
class UnitaryOperator {
 public:
  explicit UnitaryOperator(const Eigen::MatrixXcd& u,
                           double tol = kAlgebraTol);

  int dim() const { return static_cast<int>(u_.rows()); }
  const Eigen::MatrixXcd& matrix() const { return u_; }

  static UnitaryOperator identity(int dim);

 private:
  Eigen::MatrixXcd u_;
};

/// Eigendecomposition of a Hermitian operator. eigenvalues are sorted
/// descending; eigenvectors.col(k) is the (phase-normalized) eigenvector
/// of eigenvalues[k]; the columns form an orthonormal set.
struct EighResult {
  Eigen::VectorXd eigenvalues;
  Eigen::MatrixXcd eigenvectors;
};

/// Kronecker product (first argument owns the most significant index).
Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);

/// Tensor product of Hermitian operators; dims must both be 2 (result 4).
HermitianOperator tensor(const HermitianOperator& a,
                         const HermitianOperator& b);
/// Tensor product of unitaries; dims must both be 2 (result 4).
UnitaryOperator tensor(const UnitaryOperator& a, const UnitaryOperator& b);

/// Density operator (1/2)(I + n . sigma) of a Bloch vector.
HermitianOperator bloch_to_density(const BlochVector& n);

/// Two-qubit density operator of a pure product state.
HermitianOperator product_density(const ProductPureState& s);

/// Unit Bloch vector of the +1/-1 eigenstate of the given Pauli axis.
BlochVector pauli_eigenstate(Axis axis, int sign);

/// Deterministic Hermitian eigendecomposition (descending eigenvalues,
/// positive-real leading eigenvector components).
EighResult eigh(const HermitianOperator& h);

/// Conjugation U^dagger X U; dimensions must match.
HermitianOperator conjugate(const HermitianOperator& x,
                            const UnitaryOperator& u);

/// Pauli matrices and 2x2/4x4 identity as raw matrices.
Eigen::Matrix2cd sigma_x();
Eigen::Matrix2cd sigma_y();
Eigen::Matrix2cd sigma_z();

/// State vector of a unit Bloch vector under the library phase convention.
Eigen::Vector2cd ket(const BlochVector& n);

/// Two-qubit state vector ket(a) (x) ket(b).
Eigen::Vector4cd product_ket(const ProductPureState& s);

/// Bloch vector of a (normalized) single-qubit state vector.
BlochVector bloch_from_ket(const Eigen::Vector2cd& psi);

/// Real Hilbert-Schmidt pairing Tr(A B) of two Hermitian operators.
double trace_product(const HermitianOperator& a, const HermitianOperator& b);

}  // namespace sepbit
