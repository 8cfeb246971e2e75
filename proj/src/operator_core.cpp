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

#include "sepbit/operator_core.hpp"

#include <cmath>
#include <stdexcept>

namespace sepbit {

namespace {

void require_positive_dim(int dim, const char* what) {
  if (dim < 1) {
    throw std::invalid_argument(std::string(what) +
                                ": dimension must be positive, got " +
                                std::to_string(dim));
  }
}

}  // namespace

BlochVector::BlochVector(double x, double y, double z)
    : BlochVector(Eigen::Vector3d(x, y, z)) {}

BlochVector::BlochVector(const Eigen::Vector3d& v) : v_(v) {
  if (v_.norm() > 1.0 + kAlgebraTol) {
    throw std::invalid_argument("BlochVector: norm exceeds 1 (" +
                                std::to_string(v_.norm()) + ")");
  }
}

bool BlochVector::is_unit(double tol) const {
  return std::abs(v_.norm() - 1.0) <= tol;
}

ProductPureState::ProductPureState(const BlochVector& a, const BlochVector& b)
    : a_(a), b_(b) {
  if (!a_.is_unit() || !b_.is_unit()) {
    throw std::invalid_argument(
        "ProductPureState: both Bloch vectors must be unit (pure factors)");
  }
}

HermitianOperator::HermitianOperator(const Eigen::MatrixXcd& m, double tol)
    : m_(m) {
  if (m_.rows() != m_.cols()) {
    throw std::invalid_argument("HermitianOperator: matrix must be square");
  }
  require_positive_dim(dim(), "HermitianOperator");
  double dev = (m_ - m_.adjoint()).cwiseAbs().maxCoeff();
  if (dev > tol) {
    throw std::invalid_argument("HermitianOperator: not Hermitian (max |M - M^+| = " +
                                std::to_string(dev) + ")");
  }
  // Symmetrize so downstream identities hold exactly, not just within tol.
  m_ = ((m_ + m_.adjoint()) / 2.0).eval();
}

HermitianOperator HermitianOperator::identity(int dim) {
  require_positive_dim(dim, "HermitianOperator::identity");
  return HermitianOperator(Eigen::MatrixXcd::Identity(dim, dim));
}

UnitaryOperator::UnitaryOperator(const Eigen::MatrixXcd& u, double tol)
    : u_(u) {
  if (u_.rows() != u_.cols()) {
    throw std::invalid_argument("UnitaryOperator: matrix must be square");
  }
  require_positive_dim(dim(), "UnitaryOperator");
  Eigen::MatrixXcd gram = u_ * u_.adjoint();
  double dev =
      (gram - Eigen::MatrixXcd::Identity(dim(), dim())).cwiseAbs().maxCoeff();
  if (dev > tol) {
    throw std::invalid_argument("UnitaryOperator: not unitary (max |UU^+ - I| = " +
                                std::to_string(dev) + ")");
  }
}

UnitaryOperator UnitaryOperator::identity(int dim) {
  require_positive_dim(dim, "UnitaryOperator::identity");
  return UnitaryOperator(Eigen::MatrixXcd::Identity(dim, dim));
}

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

HermitianOperator tensor(const HermitianOperator& a,
                         const HermitianOperator& b) {
  if (a.dim() != 2 || b.dim() != 2) {
    throw std::invalid_argument("tensor: both factors must have dimension 2");
  }
  return HermitianOperator(kron(a.matrix(), b.matrix()));
}

UnitaryOperator tensor(const UnitaryOperator& a, const UnitaryOperator& b) {
  if (a.dim() != 2 || b.dim() != 2) {
    throw std::invalid_argument("tensor: both factors must have dimension 2");
  }
  return UnitaryOperator(kron(a.matrix(), b.matrix()));
}

HermitianOperator bloch_to_density(const BlochVector& n) {
  Eigen::Matrix2cd m = Eigen::Matrix2cd::Identity();
  m += n.x() * sigma_x() + n.y() * sigma_y() + n.z() * sigma_z();
  return HermitianOperator(0.5 * m);
}

HermitianOperator product_density(const ProductPureState& s) {
  return tensor(bloch_to_density(s.a()), bloch_to_density(s.b()));
}

BlochVector pauli_eigenstate(Axis axis, int sign) {
  if (sign != 1 && sign != -1) {
    throw std::invalid_argument("pauli_eigenstate: sign must be +1 or -1");
  }
  double s = static_cast<double>(sign);
  switch (axis) {
    case Axis::X:
      return BlochVector(s, 0.0, 0.0);
    case Axis::Y:
      return BlochVector(0.0, s, 0.0);
    case Axis::Z:
      return BlochVector(0.0, 0.0, s);
  }
  throw std::invalid_argument("pauli_eigenstate: invalid axis");
}

EighResult eigh(const HermitianOperator& h) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h.matrix());
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("eigh: eigensolver failed to converge");
  }
  const int n = h.dim();
  EighResult out;
  out.eigenvalues.resize(n);
  out.eigenvectors.resize(n, n);
  // Eigen returns ascending order; flip to descending.
  for (int k = 0; k < n; ++k) {
    out.eigenvalues[k] = solver.eigenvalues()[n - 1 - k];
    out.eigenvectors.col(k) = solver.eigenvectors().col(n - 1 - k);
  }
  // Deterministic phase: make the first component with non-negligible
  // magnitude real positive.
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      Complex c = out.eigenvectors(i, k);
      if (std::abs(c) > 1e-9) {
        out.eigenvectors.col(k) *= std::conj(c) / std::abs(c);
        break;
      }
    }
  }
  return out;
}

HermitianOperator conjugate(const HermitianOperator& x,
                            const UnitaryOperator& u) {
  if (x.dim() != u.dim()) {
    throw std::invalid_argument("conjugate: operator/unitary dimension mismatch");
  }
  return HermitianOperator(u.matrix().adjoint() * x.matrix() * u.matrix());
}

Eigen::Matrix2cd sigma_x() {
  Eigen::Matrix2cd m;
  m << 0, 1, 1, 0;
  return m;
}

Eigen::Matrix2cd sigma_y() {
  Eigen::Matrix2cd m;
  m << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
  return m;
}

Eigen::Matrix2cd sigma_z() {
  Eigen::Matrix2cd m;
  m << 1, 0, 0, -1;
  return m;
}

Eigen::Vector2cd ket(const BlochVector& n) {
  if (!n.is_unit()) {
    throw std::invalid_argument("ket: Bloch vector must be unit");
  }
  double z = std::clamp(n.z(), -1.0, 1.0);
  double theta = std::acos(z);
  double phi = std::atan2(n.y(), n.x());
  Eigen::Vector2cd psi;
  psi << Complex(std::cos(theta / 2.0), 0.0),
      std::polar(std::sin(theta / 2.0), phi);
  return psi;
}

Eigen::Vector4cd product_ket(const ProductPureState& s) {
  Eigen::Vector2cd a = ket(s.a());
  Eigen::Vector2cd b = ket(s.b());
  Eigen::Vector4cd psi;
  psi << a(0) * b(0), a(0) * b(1), a(1) * b(0), a(1) * b(1);
  return psi;
}

BlochVector bloch_from_ket(const Eigen::Vector2cd& psi) {
  double nrm = psi.norm();
  if (std::abs(nrm - 1.0) > 1e-9) {
    throw std::invalid_argument("bloch_from_ket: state vector must be normalized");
  }
  Complex cross = std::conj(psi(0)) * psi(1);
  Eigen::Vector3d n(2.0 * cross.real(), 2.0 * cross.imag(),
                    std::norm(psi(0)) - std::norm(psi(1)));
  // Squash rounding dust so the result passes the unit-norm invariant.
  return BlochVector(n / n.norm());
}

double trace_product(const HermitianOperator& a, const HermitianOperator& b) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("trace_product: dimension mismatch");
  }
  return (a.matrix() * b.matrix()).trace().real();
}

}  // namespace sepbit
