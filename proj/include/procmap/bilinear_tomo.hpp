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

// Bi-linear process maps.
//
// When inputs are prepared by projective measurement on a correlated
// system-environment state, the measured output depends on the prepared
// projector P twice:
//
//   Gamma Q_{rs} = sum conj(P_{r''r'}) M^{(r,s)}_{r''r';s''s'} P_{s''s'}
//   M^{(r,s)}_{r''r';s''s'} = sum_{alpha beta eps} U_{r eps, r' alpha}
//                              gamma0_{r'' alpha, s'' beta} conj(U_{s eps, s' beta})
//
// For a qubit the nine-projection protocol recovers exactly the element
// combinations of M in the {1, sigma_j} basis needed to predict the output
// of any pure preparation.

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "procmap/dynamics.hpp"
#include "procmap/qstate.hpp"
#include "procmap/record.hpp"

namespace procmap {

/// Dense 6-index tensor, viewed as an N^2 x N^2 grid of N x N blocks: grid
/// row r''*N + r', grid column s''*N + s', block entry (r, s).
class BilinearProcessMap {
 public:
  explicit BilinearProcessMap(Index dim);

  Index dim() const noexcept { return dim_; }

  Complex& at(Index r, Index s, Index rpp, Index rp, Index spp, Index sp) {
    return data_[offset(r, s, rpp, rp, spp, sp)];
  }
  Complex at(Index r, Index s, Index rpp, Index rp, Index spp, Index sp) const {
    return data_[offset(r, s, rpp, rp, spp, sp)];
  }

  /// The N x N block at grid position (row, col).
  ComplexMatrix block(Index grid_row, Index grid_col) const;
  void set_block(Index grid_row, Index grid_col, const ComplexMatrix& b);

  /// sum_{r,r',r''} M^{(r,r)}_{r''r';r''r'}. Unitarity of U makes this dim * Tr[gamma0].
  Complex trace() const;

  /// max |conj(M^{(r,s)}_{r''r';s''s'}) - M^{(s,r)}_{s''s';r''r'}|.
  double hermiticity_residual() const;

 private:
  std::size_t offset(Index r, Index s, Index rpp, Index rp, Index spp, Index sp) const {
    const Index n = dim_;
    const Index grid_row = rpp * n + rp;
    const Index grid_col = spp * n + sp;
    return static_cast<std::size_t>(((grid_row * n * n + grid_col) * n + r) * n + s);
  }

  Index dim_;
  std::vector<Complex> data_;
};

/// Element combinations of M in the {1, sigma_j} basis, with <A|M|B> as in
/// contract(). For (j, k) in {(1,2), (1,3), (2,3)} at positions 0, 1, 2:
///   diag_plus[j]  = <1|M|1> + <s_j|M|s_j>
///   linear[j]     = <1|M|s_j> + <s_j|M|1>
///   cross[jk]     = <s_j|M|s_k> + <s_k|M|s_j>
struct MElementTable {
  std::array<ComplexMatrix, 3> diag_plus;
  std::array<ComplexMatrix, 3> linear;
  std::array<ComplexMatrix, 3> cross;
  std::optional<ComplexMatrix> unit_unit;

  /// Largest hermiticity residual over all stored matrices.
  double hermiticity_residual() const;
  /// Largest entry-wise difference to `other` (unit_unit compared only when both hold it).
  double max_abs_diff(const MElementTable& other) const;
};

/// Index pairs (j, k) of the cross terms, 1-based, in storage order.
inline constexpr std::array<std::pair<int, int>, 3> kCrossPairs{{{1, 2}, {1, 3}, {2, 3}}};

/// Direct summation over the environment indices.
BilinearProcessMap build_M_from_dynamics(const ProcessSpec& spec);

/// <A|M|B>_{rs} = sum conj(A_{r''r'}) M^{(r,s)}_{r''r';s''s'} B_{s''s'}.
ComplexMatrix contract(const BilinearProcessMap& m, const ComplexMatrix& a, const ComplexMatrix& b);

/// <P|M|P>: the unnormalized output Gamma * Q. Normalize by its trace.
ComplexMatrix apply_bilinear(const BilinearProcessMap& m, const ComplexMatrix& p);

/// The element table straight from M (the direct route).
MElementTable element_table_from_map(const BilinearProcessMap& m);

/// P^(j,+-) for j = 1..3 followed by P^(4,+), P^(5,+), P^(6,+), labeled
/// "1+", "1-", "2+", "2-", "3+", "3-", "4+", "5+", "6+".
std::vector<LabeledInput> nine_state_inputs();

/// Solves the nine-state protocol. Records are looked up by label. A
/// `mixed` record, prepared with input (1 + p.sigma)/2 with |p| < 1, adds <1|M|1>.
/// Throws MissingRecord or ZeroGamma.
MElementTable solve_M_elements(std::span<const TomographyRecord> records,
                               const TomographyRecord* mixed = nullptr);

struct Prediction {
  double gamma = 0.0;
  DensityMatrix q;
};

/// 4 Gamma Q = (1 - |p|^2) <1|M|1> + sum_j p_j^2 D_j + sum_j p_j Y_j
///             + sum_{j<k} p_j p_k Z_jk,
/// Gamma = Tr[Gamma Q]. The unit-unit term is only needed for |p| < 1;
/// throws MixedWithoutUnitUnit when it is missing, ZeroGamma for Gamma < 1e-12.
Prediction predict_output(const MElementTable& table, const BlochVector& p);

}  // namespace procmap
