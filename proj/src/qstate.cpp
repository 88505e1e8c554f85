// Copyright 2026 The procmap Authors
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

#include "procmap/qstate.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "procmap/errors.hpp"

namespace procmap {

namespace {

void require_square(const ComplexMatrix& m, const char* what) {
  if (m.rows() != m.cols()) {
    throw Error(ErrorKind::DimensionMismatch,
                std::string(what) + " must be square, got " + std::to_string(m.rows()) + "x" +
                    std::to_string(m.cols()));
  }
}

void require_joint(const ComplexMatrix& joint, Index dimA, Index dimB) {
  if (dimA <= 0 || dimB <= 0 || joint.rows() != dimA * dimB || joint.cols() != dimA * dimB) {
    throw Error(ErrorKind::DimensionMismatch,
                "joint matrix is " + std::to_string(joint.rows()) + "x" +
                    std::to_string(joint.cols()) + ", expected " + std::to_string(dimA * dimB) +
                    " square");
  }
}

}  // namespace

double max_abs(const ComplexMatrix& m) {
  double out = 0.0;
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) out = std::max(out, std::abs(m(i, j)));
  return out;
}

double hermiticity_residual(const ComplexMatrix& m) {
  require_square(m, "matrix");
  return max_abs(m - m.adjoint());
}

double unitarity_residual(const ComplexMatrix& m) {
  require_square(m, "matrix");
  return max_abs(m.adjoint() * m - ComplexMatrix::Identity(m.rows(), m.cols()));
}

DensityMatrix::DensityMatrix(ComplexMatrix mat) : mat_(std::move(mat)) {
  require_square(mat_, "density matrix");
  if (mat_.rows() == 0) throw Error(ErrorKind::DimensionMismatch, "density matrix is empty");
}

DensityMatrix DensityMatrix::from_ket(const ComplexVector& ket) {
  const double n = ket.squaredNorm();
  if (n <= 0.0) throw Error(ErrorKind::InvalidState, "zero ket");
  return DensityMatrix(ket * ket.adjoint() / n);
}

DensityMatrix DensityMatrix::maximally_mixed(Index dim) {
  return DensityMatrix(ComplexMatrix::Identity(dim, dim) / static_cast<double>(dim));
}

void DensityMatrix::validate(double tol) const {
  const double herm = hermiticity_residual(mat_);
  if (herm > tol) {
    throw Error(ErrorKind::InvalidState, "not Hermitian (residual " + std::to_string(herm) + ")");
  }
  const double tr_err = std::abs(mat_.trace() - 1.0);
  if (tr_err > tol) {
    throw Error(ErrorKind::InvalidState, "trace differs from 1 by " + std::to_string(tr_err));
  }
  const ComplexMatrix sym = (mat_ + mat_.adjoint()) / 2.0;
  const double min_eig = Eigen::SelfAdjointEigenSolver<ComplexMatrix>(sym, Eigen::EigenvaluesOnly)
                             .eigenvalues()
                             .minCoeff();
  if (min_eig < -tol) {
    throw Error(ErrorKind::InvalidState, "negative eigenvalue " + std::to_string(min_eig));
  }
}

bool DensityMatrix::is_valid(double tol) const noexcept {
  try {
    validate(tol);
    return true;
  } catch (const Error&) {
    return false;
  }
}

UnitaryOperator::UnitaryOperator(ComplexMatrix mat, double tol) : mat_(std::move(mat)) {
  require_square(mat_, "unitary");
  const double res = unitarity_residual(mat_);
  if (res > tol) {
    throw Error(ErrorKind::NonUnitary, "U^dagger U deviates from identity by " + std::to_string(res));
  }
}

UnitaryOperator UnitaryOperator::identity(Index dim) {
  return UnitaryOperator(ComplexMatrix::Identity(dim, dim), Unchecked{});
}

UnitaryOperator UnitaryOperator::adjoint() const {
  return UnitaryOperator(ComplexMatrix(mat_.adjoint()), Unchecked{});
}

double BlochVector::norm() const noexcept {
  return std::sqrt(a[0] * a[0] + a[1] * a[1] + a[2] * a[2]);
}

double BlochVector::max_abs_diff(const BlochVector& other) const noexcept {
  double out = 0.0;
  for (std::size_t j = 0; j < 3; ++j) out = std::max(out, std::abs(a[j] - other.a[j]));
  return out;
}

namespace pauli {

const ComplexMatrix& identity() {
  static const ComplexMatrix id = ComplexMatrix::Identity(2, 2);
  return id;
}

const ComplexMatrix& sigma(int j) {
  static const std::array<ComplexMatrix, 3> sigmas = [] {
    const Complex i(0.0, 1.0);
    std::array<ComplexMatrix, 3> s{ComplexMatrix(2, 2), ComplexMatrix(2, 2), ComplexMatrix(2, 2)};
    s[0] << 0.0, 1.0, 1.0, 0.0;
    s[1] << 0.0, -i, i, 0.0;
    s[2] << 1.0, 0.0, 0.0, -1.0;
    return s;
  }();
  if (j < 1 || j > 3) throw Error(ErrorKind::DimensionMismatch, "Pauli index must be 1..3");
  return sigmas[static_cast<std::size_t>(j - 1)];
}

}  // namespace pauli

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

ComplexMatrix extend_to_joint(const ComplexMatrix& sysOp, Index dimB) {
  return tensor(sysOp, ComplexMatrix::Identity(dimB, dimB));
}

ComplexMatrix partial_trace_env(const ComplexMatrix& joint, Index dimA, Index dimB) {
  require_joint(joint, dimA, dimB);
  ComplexMatrix out = ComplexMatrix::Zero(dimA, dimA);
  for (Index r = 0; r < dimA; ++r)
    for (Index s = 0; s < dimA; ++s)
      for (Index alpha = 0; alpha < dimB; ++alpha)
        out(r, s) += joint(r * dimB + alpha, s * dimB + alpha);
  return out;
}

DensityMatrix partial_trace_env(const DensityMatrix& joint, Index dimA, Index dimB) {
  return DensityMatrix(partial_trace_env(joint.matrix(), dimA, dimB));
}

ComplexMatrix partial_trace_sys(const ComplexMatrix& joint, Index dimA, Index dimB) {
  require_joint(joint, dimA, dimB);
  ComplexMatrix out = ComplexMatrix::Zero(dimB, dimB);
  for (Index i = 0; i < dimA; ++i) out += joint.block(i * dimB, i * dimB, dimB, dimB);
  return out;
}

ComplexMatrix pauli_compose(double a0, const BlochVector& a) {
  ComplexMatrix out = a0 * pauli::identity();
  for (int j = 1; j <= 3; ++j) out += a[static_cast<std::size_t>(j - 1)] * pauli::sigma(j);
  return out;
}

DensityMatrix qubit_state(const BlochVector& a) {
  return DensityMatrix(pauli_compose(1.0, a) / 2.0);
}

PauliCoefficients pauli_decompose(const ComplexMatrix& m) {
  if (m.rows() != 2 || m.cols() != 2) {
    throw Error(ErrorKind::DimensionMismatch, "Pauli decomposition needs a 2x2 matrix");
  }
  if (hermiticity_residual(m) > kStateTol) {
    throw Error(ErrorKind::NonHermitian, "Pauli decomposition of a non-Hermitian matrix");
  }
  PauliCoefficients out;
  out.a0 = m.trace().real() / 2.0;
  for (int j = 1; j <= 3; ++j) {
    out.a.a[static_cast<std::size_t>(j - 1)] = (m * pauli::sigma(j)).trace().real() / 2.0;
  }
  return out;
}

BlochVector bloch_vector(const ComplexMatrix& m) {
  if (m.rows() != 2 || m.cols() != 2) {
    throw Error(ErrorKind::DimensionMismatch, "Bloch vector needs a 2x2 matrix");
  }
  BlochVector out;
  for (int j = 1; j <= 3; ++j) {
    out.a[static_cast<std::size_t>(j - 1)] = (m * pauli::sigma(j)).trace().real();
  }
  return out;
}

HermitianEigensystem eig_hermitian(const ComplexMatrix& m) {
  require_square(m, "matrix");
  const double herm = hermiticity_residual(m);
  if (herm > kEigHermitianTol) {
    throw Error(ErrorKind::NonHermitian,
                "eigendecomposition of non-Hermitian matrix (residual " + std::to_string(herm) + ")");
  }
  const ComplexMatrix sym = (m + m.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorKind::NonHermitian, "Hermitian eigensolver did not converge");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

}  // namespace procmap
