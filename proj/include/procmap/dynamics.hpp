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

#include "procmap/linear_tomo.hpp"
#include "procmap/prep.hpp"
#include "procmap/qstate.hpp"

namespace procmap {

/// An unknown process: the joint unitary and the system-environment state
/// present before preparation.
struct ProcessSpec {
  Index dimA = 2;
  Index dimB = 2;
  UnitaryOperator u = UnitaryOperator::identity(4);
  DensityMatrix gamma0 = DensityMatrix::maximally_mixed(4);

  /// Throws DimensionMismatch or InvalidState.
  void validate() const;
};

/// sum_j sigma_j (x) sigma_j on two qubits.
ComplexMatrix heisenberg_hamiltonian();

/// (1 (x) 1 + sum_j a_j sigma_j (x) 1 + c23 sigma_2 (x) sigma_3) / 4, a
/// two-qubit state whose system is correlated with the environment.
DensityMatrix correlated_two_qubit_state(const BlochVector& a, double c23);

/// exp(-i H t) through the Hermitian eigendecomposition of H.
UnitaryOperator unitary_from_hamiltonian(const ComplexMatrix& h, double t);

/// Q = Tr_B[U joint U^dagger].
DensityMatrix run_process(const ProcessSpec& spec, const PreparedState& prepared);

/// The map rho -> Tr_B[U (rho (x) tau) U^dagger] in the rrp-ssp layout,
/// materialized by pushing each matrix unit through the dynamics.
LinearProcessMap dynamical_map_fixed_env(const UnitaryOperator& u, const DensityMatrix& tau);

}  // namespace procmap
