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

#pragma once

// Dense complex kernels and the quantum-state value types shared by every
// other module. Composite indices over a bipartite space A (x) B are always
// system-major: (i, alpha) -> i * dimB + alpha.

#include <array>
#include <complex>

#include <Eigen/Dense>

namespace procmap {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using Index = Eigen::Index;

inline constexpr double kStateTol = 1e-10;
inline constexpr double kUnitaryTol = 1e-12;
inline constexpr double kEigHermitianTol = 1e-8;

double max_abs(const ComplexMatrix& m);
double hermiticity_residual(const ComplexMatrix& m);
double unitarity_residual(const ComplexMatrix& m);

/// A candidate N x N density matrix. Construction only checks the shape;
/// call validate() where the physical invariants must hold, so that
/// intermediate unnormalized matrices can flow through the pipeline.
class DensityMatrix {
 public:
  explicit DensityMatrix(ComplexMatrix mat);

  /// |psi><psi| / <psi|psi>.
  static DensityMatrix from_ket(const ComplexVector& ket);
  static DensityMatrix maximally_mixed(Index dim);

  Index dim() const noexcept { return mat_.rows(); }
  const ComplexMatrix& matrix() const noexcept { return mat_; }

  /// Throws InvalidState unless Hermitian, unit trace and positive
  /// semidefinite within `tol`.
  void validate(double tol = kStateTol) const;
  bool is_valid(double tol = kStateTol) const noexcept;

 private:
  ComplexMatrix mat_;
};

/// Square matrix with U^dagger U = 1 checked on construction.
class UnitaryOperator {
 public:
  explicit UnitaryOperator(ComplexMatrix mat, double tol = kUnitaryTol);

  static UnitaryOperator identity(Index dim);

  Index dim() const noexcept { return mat_.rows(); }
  const ComplexMatrix& matrix() const noexcept { return mat_; }
  UnitaryOperator adjoint() const;

 private:
  struct Unchecked {};
  UnitaryOperator(ComplexMatrix mat, Unchecked) : mat_(std::move(mat)) {}
  ComplexMatrix mat_;
};

/// Real coefficients a_j in the expansion over the Pauli matrices.
struct BlochVector {
  std::array<double, 3> a{};

  double operator[](std::size_t j) const noexcept { return a[j]; }
  double norm() const noexcept;
  double max_abs_diff(const BlochVector& other) const noexcept;
};

namespace pauli {
const ComplexMatrix& identity();
/// sigma_1, sigma_2, sigma_3 for j = 1, 2, 3.
const ComplexMatrix& sigma(int j);
}  // namespace pauli

/// Kronecker product; entry[(i*rb + k), (j*cb + l)] = a[i,j] * b[k,l].
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);

/// op (x) 1_dimB.
ComplexMatrix extend_to_joint(const ComplexMatrix& sysOp, Index dimB);

/// Tr_B. out[r,s] = sum_alpha joint[(r,alpha),(s,alpha)].
ComplexMatrix partial_trace_env(const ComplexMatrix& joint, Index dimA, Index dimB);
DensityMatrix partial_trace_env(const DensityMatrix& joint, Index dimA, Index dimB);

/// Tr_A. out[alpha,beta] = sum_i joint[(i,alpha),(i,beta)].
ComplexMatrix partial_trace_sys(const ComplexMatrix& joint, Index dimA, Index dimB);

/// a0 * 1 + sum_j a_j sigma_j.
ComplexMatrix pauli_compose(double a0, const BlochVector& a);

/// (1 + sum_j a_j sigma_j) / 2.
DensityMatrix qubit_state(const BlochVector& a);

struct PauliCoefficients {
  double a0 = 0.0;
  BlochVector a;
};

/// Inverse of pauli_compose: a0 = Tr[m]/2, a_j = Tr[m sigma_j]/2.
/// Throws NonHermitian for inputs that are not Hermitian within 1e-10.
PauliCoefficients pauli_decompose(const ComplexMatrix& m);

/// Coherence vector of a qubit operator, Tr[m sigma_j].
BlochVector bloch_vector(const ComplexMatrix& m);

struct HermitianEigensystem {
  Eigen::VectorXd values;  // ascending
  ComplexMatrix vectors;   // columns are eigenvectors
};

HermitianEigensystem eig_hermitian(const ComplexMatrix& m);

}  // namespace procmap
