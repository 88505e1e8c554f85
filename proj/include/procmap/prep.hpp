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

// State preparation: pin map followed by local rotations, von Neumann
// projective preparation, and general measurements given as sets of
// trace-reducing maps in canonical (Kraus) form, together with their
// realization as an ancilla unitary plus a von Neumann readout.

#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "procmap/qstate.hpp"

namespace procmap {

inline constexpr double kZeroProbability = 1e-12;

/// The system-environment state right after preparation, and the
/// probability of the preparation outcome (1 for stochastic preparation).
struct PreparedState {
  DensityMatrix joint;
  double gamma = 1.0;
  std::size_t label = 0;
};

// ---------------------------------------------------------------------------
// stochastic preparation

/// |Phi><Phi| (x) tau with tau = Tr_A[gamma0]: the pin replaces the system
/// state and leaves the environment marginal untouched.
DensityMatrix apply_pin_map(const DensityMatrix& gamma0, Index dimA, Index dimB,
                            const DensityMatrix& target);

/// |Phi><Phi| (x) tau for an explicitly chosen environment state.
DensityMatrix apply_pin_map(const DensityMatrix& target, const DensityMatrix& tau);

/// (V (x) 1) joint (V (x) 1)^dagger with Gamma = 1.
PreparedState prepare_stochastic(const DensityMatrix& joint_pinned, const UnitaryOperator& v);

/// A unitary taking |from> to |to> (up to phase), built as
/// |to><from| + |to_perp><from_perp| for qubits and by completing both
/// vectors to orthonormal bases otherwise.
UnitaryOperator rotation_between(const ComplexVector& from, const ComplexVector& to);

/// Unit-norm eigenvector of the largest eigenvalue, phased so that its
/// largest component is real and positive. Throws NotPure unless
/// `state` is a rank-1 projector within 1e-10.
ComplexVector pure_state_vector(const DensityMatrix& state);

// ---------------------------------------------------------------------------
// preparation by measurement

/// Throws NotAProjector unless p^2 = p, p = p^dagger and Tr p = 1 within 1e-10.
void require_rank1_projector(const ComplexMatrix& p);

/// Gamma = Tr[(P (x) 1) gamma0], joint = (P (x) 1) gamma0 (P (x) 1) / Gamma.
/// Throws ZeroProbabilityOutcome when Gamma < 1e-12.
PreparedState prepare_projective(const DensityMatrix& gamma0, Index dimA, Index dimB,
                                 const ComplexMatrix& projector);

// ---------------------------------------------------------------------------
// generalized measurements

/// One measurement outcome: B(rho) = sum_alpha weights[alpha] C_alpha rho C_alpha^dagger.
struct OutcomeMap {
  std::vector<double> weights;
  std::vector<ComplexMatrix> kraus;
};

struct GeneralizedMeasurement {
  std::vector<OutcomeMap> outcomes;

  Index dim() const;
  /// max-abs deviation of sum_{j,alpha} c C^dagger C from the identity.
  double completeness_residual() const;
  /// Throws InvalidMeasurement on shape errors, negative weights or a
  /// completeness residual above 1e-10.
  void validate() const;
};

/// Canonical form of a completely positive map given in the rrp-ssp layout
/// (see linear_tomo.hpp): eigenvalues become weights and eigenvectors,
/// reshaped row-major, become the Kraus matrices. Eigenvalues below `tol`
/// are dropped; throws InvalidMeasurement for eigenvalues below -tol.
OutcomeMap canonical_form(const ComplexMatrix& choi_rrp_ssp, Index dim, double tol = 1e-12);

struct Dilation {
  UnitaryOperator w;
  Index outcomes = 0;  // mu, dimension of the first ancilla
  Index channels = 0;  // N^2, dimension of the second ancilla
  Index system = 0;    // N

  /// Index of |r, j, alpha> in the system (x) ancilla (x) ancilla space.
  Index index(Index r, Index j, Index alpha) const {
    return (r * outcomes + j) * channels + alpha;
  }
  Index total_dim() const { return system * outcomes * channels; }
};

/// W |r',0,0> = sum_{r,j,alpha} sqrt(c_alpha^(j)) [C_alpha^(j)]_{rr'} |r,j,alpha>,
/// completed to a unitary by Gram-Schmidt over the standard basis in index
/// order. Throws InvalidMeasurement for invalid measurements or for an
/// outcome with more than N^2 Kraus matrices (reduce it with canonical_form).
Dilation build_dilation(const GeneralizedMeasurement& meas);

struct MeasurementResult {
  double probability = 0.0;
  DensityMatrix post;
};

MeasurementResult measure_generalized_via_maps(const DensityMatrix& rho,
                                               const GeneralizedMeasurement& meas,
                                               std::size_t outcome);

MeasurementResult measure_generalized_via_dilation(const DensityMatrix& rho,
                                                   const GeneralizedMeasurement& meas,
                                                   std::size_t outcome);

/// Same as above with a prebuilt dilation, for repeated use.
MeasurementResult measure_generalized_via_dilation(const DensityMatrix& rho, const Dilation& dilation,
                                                   std::size_t outcome);

/// Applies outcome `outcome` of `meas` to the system factor of gamma0:
/// joint = sum_alpha c_alpha (C_alpha (x) 1) gamma0 (C_alpha (x) 1)^dagger / Gamma.
PreparedState prepare_generalized(const DensityMatrix& gamma0, Index dimA, Index dimB,
                                  const GeneralizedMeasurement& meas, std::size_t outcome);

/// Two-outcome measurement whose first outcome is the single Kraus
/// operator X (Hermitian, 0 <= X <= 1) and whose second outcome completes
/// it, sqrt(1 - X^2). Preparing with outcome 0 yields X gamma0 X up to
/// normalization, so the bi-linear process equation holds with input X.
GeneralizedMeasurement filter_measurement(const ComplexMatrix& x);

// ---------------------------------------------------------------------------

/// The preparation procedure of an experiment.
struct PinThenRotate {
  DensityMatrix pin_target;
  std::vector<UnitaryOperator> rotations;
};

struct Projective {
  std::vector<ComplexMatrix> projectors;
};

struct Generalized {
  GeneralizedMeasurement measurement;
};

using PreparationProcedure = std::variant<PinThenRotate, Projective, Generalized>;

/// Checks the per-variant invariants (pure pin target and unitary rotations,
/// rank-1 projectors, measurement completeness).
void validate(const PreparationProcedure& procedure);

}  // namespace procmap
