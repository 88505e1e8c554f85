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

#include "procmap/dynamics.hpp"

#include <cmath>
#include <string>

#include "procmap/errors.hpp"

namespace procmap {

void ProcessSpec::validate() const {
  if (dimA <= 0 || dimB <= 0 || u.dim() != dimA * dimB || gamma0.dim() != dimA * dimB) {
    throw Error(ErrorKind::DimensionMismatch,
                "process of " + std::to_string(dimA) + " x " + std::to_string(dimB) +
                    " has U of dimension " + std::to_string(u.dim()) + " and gamma0 of dimension " +
                    std::to_string(gamma0.dim()));
  }
  gamma0.validate();
}

ComplexMatrix heisenberg_hamiltonian() {
  ComplexMatrix h = ComplexMatrix::Zero(4, 4);
  for (int j = 1; j <= 3; ++j) h += tensor(pauli::sigma(j), pauli::sigma(j));
  return h;
}

DensityMatrix correlated_two_qubit_state(const BlochVector& a, double c23) {
  ComplexMatrix m = tensor(pauli::identity(), pauli::identity());
  for (int j = 1; j <= 3; ++j) {
    m += a[static_cast<std::size_t>(j - 1)] * tensor(pauli::sigma(j), pauli::identity());
  }
  m += c23 * tensor(pauli::sigma(2), pauli::sigma(3));
  return DensityMatrix(m / 4.0);
}

UnitaryOperator unitary_from_hamiltonian(const ComplexMatrix& h, double t) {
  if (h.rows() != h.cols()) throw Error(ErrorKind::DimensionMismatch, "Hamiltonian must be square");
  const double herm = hermiticity_residual(h);
  if (herm > kStateTol) {
    throw Error(ErrorKind::NonHermitian, "Hamiltonian is not Hermitian (residual " +
                                             std::to_string(herm) + ")");
  }
  const HermitianEigensystem eig = eig_hermitian(h);
  ComplexVector phases(eig.values.size());
  for (Index k = 0; k < eig.values.size(); ++k) {
    phases(k) = std::exp(Complex(0.0, -eig.values(k) * t));
  }
  return UnitaryOperator(eig.vectors * phases.asDiagonal() * eig.vectors.adjoint());
}

DensityMatrix run_process(const ProcessSpec& spec, const PreparedState& prepared) {
  if (prepared.joint.dim() != spec.dimA * spec.dimB || spec.u.dim() != spec.dimA * spec.dimB) {
    throw Error(ErrorKind::DimensionMismatch, "prepared state does not match the process dimensions");
  }
  const ComplexMatrix& u = spec.u.matrix();
  const ComplexMatrix evolved = u * prepared.joint.matrix() * u.adjoint();
  return DensityMatrix(partial_trace_env(evolved, spec.dimA, spec.dimB));
}

LinearProcessMap dynamical_map_fixed_env(const UnitaryOperator& u, const DensityMatrix& tau) {
  const Index dimB = tau.dim();
  if (dimB <= 0 || u.dim() % dimB != 0) {
    throw Error(ErrorKind::DimensionMismatch, "environment state does not divide the unitary");
  }
  const Index n = u.dim() / dimB;
  const ComplexMatrix& um = u.matrix();
  ComplexMatrix lam = ComplexMatrix::Zero(n * n, n * n);
  for (Index rp = 0; rp < n; ++rp)
    for (Index sp = 0; sp < n; ++sp) {
      ComplexMatrix unit = ComplexMatrix::Zero(n, n);
      unit(rp, sp) = 1.0;
      const ComplexMatrix out =
          partial_trace_env(um * tensor(unit, tau.matrix()) * um.adjoint(), n, dimB);
      for (Index r = 0; r < n; ++r)
        for (Index s = 0; s < n; ++s) lam(r * n + rp, s * n + sp) = out(r, s);
    }
  return LinearProcessMap(n, std::move(lam));
}

}  // namespace procmap
