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

// Dual-frame linear process tomography.
//
// A linear process map is stored in the "rrp-ssp" layout: an N^2 x N^2
// matrix with row index r*N + r' and column index s*N + s', holding
// lambda_{rr',ss'} such that out_{rs} = sum_{r's'} lambda_{rr',ss'} rho_{r's'}.
// In this layout the identity map is the (unnormalized) projector onto the
// maximally entangled vector, and a map is completely positive iff the
// matrix is positive semidefinite.

#include <span>
#include <vector>

#include "procmap/qstate.hpp"
#include "procmap/record.hpp"

namespace procmap {

class LinearProcessMap {
 public:
  /// Throws DimensionMismatch unless `lam` is dim^2 x dim^2.
  LinearProcessMap(Index dim, ComplexMatrix lam);

  static LinearProcessMap identity(Index dim);

  Index dim() const noexcept { return dim_; }
  const ComplexMatrix& lam() const noexcept { return lam_; }

  Complex at(Index r, Index rp, Index s, Index sp) const {
    return lam_(r * dim_ + rp, s * dim_ + sp);
  }

  /// Row (r,s), column (r',s'): the superoperator acting on row-major vec(rho).
  ComplexMatrix action_matrix() const;

 private:
  Index dim_;
  ComplexMatrix lam_;
};

struct DualFrame {
  std::vector<ComplexMatrix> inputs;
  std::vector<ComplexMatrix> duals;

  /// max_{m,n} |Tr[dual_m^dagger input_n] - delta_mn|.
  double biorthogonality_residual() const;
};

/// Duals by inversion of the Hilbert-Schmidt Gram matrix. Throws NotAFrame
/// unless there are exactly N^2 linearly independent inputs.
DualFrame compute_duals(std::span<const ComplexMatrix> inputs);

/// lambda_{rr',ss'} = sum_n Q^(n)_{rs} conj(dual^(n)_{r's'}). Throws NotAFrame
/// for fewer or more than N^2 records or linearly dependent inputs.
LinearProcessMap reconstruct_linear_map(std::span<const TomographyRecord> records);

ComplexMatrix apply_linear_map(const LinearProcessMap& map, const ComplexMatrix& rho);

struct MapDiagnostics {
  Eigen::VectorXd eigenvalues;  // ascending
  double trace = 0.0;
  double hermiticity_residual = 0.0;
  double min_eigenvalue = 0.0;
  /// max_{r',s'} |sum_r lambda_{rr',rs'} - delta_{r's'}|; zero for trace-preserving maps.
  double trace_preservation_residual = 0.0;
};

MapDiagnostics map_diagnostics(const LinearProcessMap& map);

}  // namespace procmap
