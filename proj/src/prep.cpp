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

#include "procmap/prep.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "procmap/errors.hpp"

namespace procmap {

namespace {

constexpr double kGramSchmidtSkip = 1e-10;

void require_joint_dims(const DensityMatrix& joint, Index dimA, Index dimB) {
  if (dimA <= 0 || dimB <= 0 || joint.dim() != dimA * dimB) {
    throw Error(ErrorKind::DimensionMismatch, "joint state of dimension " +
                                                  std::to_string(joint.dim()) + " is not " +
                                                  std::to_string(dimA) + " x " + std::to_string(dimB));
  }
}

// Orthonormal basis whose first vector is `v` (normalized).
ComplexMatrix complete_basis(const ComplexVector& v) {
  const Index n = v.size();
  ComplexMatrix basis(n, n);
  const ComplexVector first = v.normalized();
  if (n == 2) {
    basis.col(0) = first;
    basis(0, 1) = -std::conj(first(1));
    basis(1, 1) = std::conj(first(0));
    return basis;
  }
  basis.col(0) = first;
  Index filled = 1;
  for (Index k = 0; k < n && filled < n; ++k) {
    ComplexVector u = ComplexVector::Unit(n, k);
    for (int pass = 0; pass < 2; ++pass)
      for (Index b = 0; b < filled; ++b) u -= basis.col(b).dot(u) * basis.col(b);
    const double norm = u.norm();
    if (norm < kGramSchmidtSkip) continue;
    basis.col(filled++) = u / norm;
  }
  return basis;
}

ComplexMatrix apply_outcome(const ComplexMatrix& rho, const OutcomeMap& outcome) {
  ComplexMatrix out = ComplexMatrix::Zero(rho.rows(), rho.cols());
  for (std::size_t a = 0; a < outcome.kraus.size(); ++a) {
    const ComplexMatrix& c = outcome.kraus[a];
    out += outcome.weights[a] * (c * rho * c.adjoint());
  }
  return out;
}

void require_outcome(const GeneralizedMeasurement& meas, std::size_t outcome) {
  if (outcome >= meas.outcomes.size()) {
    throw Error(ErrorKind::InvalidMeasurement,
                "outcome " + std::to_string(outcome) + " out of range (" +
                    std::to_string(meas.outcomes.size()) + " outcomes)");
  }
}

}  // namespace

DensityMatrix apply_pin_map(const DensityMatrix& gamma0, Index dimA, Index dimB,
                            const DensityMatrix& target) {
  require_joint_dims(gamma0, dimA, dimB);
  if (target.dim() != dimA) {
    throw Error(ErrorKind::DimensionMismatch, "pin target dimension differs from the system");
  }
  return apply_pin_map(target, DensityMatrix(partial_trace_sys(gamma0.matrix(), dimA, dimB)));
}

DensityMatrix apply_pin_map(const DensityMatrix& target, const DensityMatrix& tau) {
  const ComplexVector phi = pure_state_vector(target);
  return DensityMatrix(tensor(phi * phi.adjoint(), tau.matrix()));
}

PreparedState prepare_stochastic(const DensityMatrix& joint_pinned, const UnitaryOperator& v) {
  const Index dimA = v.dim();
  if (dimA <= 0 || joint_pinned.dim() % dimA != 0) {
    throw Error(ErrorKind::DimensionMismatch, "rotation does not act on the system factor");
  }
  const ComplexMatrix vj = extend_to_joint(v.matrix(), joint_pinned.dim() / dimA);
  return PreparedState{DensityMatrix(vj * joint_pinned.matrix() * vj.adjoint()), 1.0, 0};
}

UnitaryOperator rotation_between(const ComplexVector& from, const ComplexVector& to) {
  if (from.size() != to.size() || from.size() == 0) {
    throw Error(ErrorKind::DimensionMismatch, "rotation endpoints differ in dimension");
  }
  const ComplexMatrix from_basis = complete_basis(from);
  const ComplexMatrix to_basis = complete_basis(to);
  return UnitaryOperator(to_basis * from_basis.adjoint());
}

ComplexVector pure_state_vector(const DensityMatrix& state) {
  const ComplexMatrix& m = state.matrix();
  if (hermiticity_residual(m) > kStateTol) throw Error(ErrorKind::NotPure, "state is not Hermitian");
  const HermitianEigensystem eig = eig_hermitian(m);
  const Index top = eig.values.size() - 1;
  if (std::abs(eig.values(top) - 1.0) > kStateTol || std::abs(m.trace() - 1.0) > kStateTol) {
    throw Error(ErrorKind::NotPure,
                "largest eigenvalue is " + std::to_string(eig.values(top)) + ", expected 1");
  }
  // Fix the phase so the largest component is real and positive.
  ComplexVector v = eig.vectors.col(top);
  Index big = 0;
  for (Index k = 1; k < v.size(); ++k) {
    if (std::abs(v(k)) > std::abs(v(big)) + 1e-12) big = k;
  }
  return v * (std::abs(v(big)) / v(big));
}

void require_rank1_projector(const ComplexMatrix& p) {
  if (p.rows() != p.cols()) throw Error(ErrorKind::NotAProjector, "projector must be square");
  const double idem = max_abs(p * p - p);
  const double herm = hermiticity_residual(p);
  const double tr = std::abs(p.trace() - 1.0);
  if (idem > kStateTol || herm > kStateTol || tr > kStateTol) {
    throw Error(ErrorKind::NotAProjector,
                "not a rank-1 projector (|P^2-P| = " + std::to_string(idem) +
                    ", |Tr P - 1| = " + std::to_string(tr) + ")");
  }
}

PreparedState prepare_projective(const DensityMatrix& gamma0, Index dimA, Index dimB,
                                 const ComplexMatrix& projector) {
  require_joint_dims(gamma0, dimA, dimB);
  if (projector.rows() != dimA) {
    throw Error(ErrorKind::DimensionMismatch, "projector dimension differs from the system");
  }
  require_rank1_projector(projector);
  const ComplexMatrix pj = extend_to_joint(projector, dimB);
  const ComplexMatrix projected = pj * gamma0.matrix() * pj;
  const double gamma = projected.trace().real();
  if (gamma < kZeroProbability) {
    throw Error(ErrorKind::ZeroProbabilityOutcome,
                "preparation outcome has probability " + std::to_string(gamma));
  }
  return PreparedState{DensityMatrix(projected / gamma), gamma, 0};
}

Index GeneralizedMeasurement::dim() const {
  for (const auto& o : outcomes)
    if (!o.kraus.empty()) return o.kraus.front().rows();
  return 0;
}

double GeneralizedMeasurement::completeness_residual() const {
  const Index n = dim();
  ComplexMatrix sum = ComplexMatrix::Zero(n, n);
  for (const auto& o : outcomes)
    for (std::size_t a = 0; a < o.kraus.size(); ++a)
      sum += o.weights[a] * (o.kraus[a].adjoint() * o.kraus[a]);
  return max_abs(sum - ComplexMatrix::Identity(n, n));
}

void GeneralizedMeasurement::validate() const {
  if (outcomes.empty()) throw Error(ErrorKind::InvalidMeasurement, "measurement has no outcomes");
  const Index n = dim();
  if (n == 0) throw Error(ErrorKind::InvalidMeasurement, "measurement has no Kraus matrices");
  for (std::size_t j = 0; j < outcomes.size(); ++j) {
    const OutcomeMap& o = outcomes[j];
    if (o.weights.size() != o.kraus.size()) {
      throw Error(ErrorKind::InvalidMeasurement,
                  "outcome " + std::to_string(j) + ": weight and Kraus counts differ");
    }
    for (std::size_t a = 0; a < o.kraus.size(); ++a) {
      if (o.kraus[a].rows() != n || o.kraus[a].cols() != n) {
        throw Error(ErrorKind::InvalidMeasurement, "Kraus matrices must all be " +
                                                       std::to_string(n) + "x" + std::to_string(n));
      }
      if (!(o.weights[a] >= 0.0)) {
        throw Error(ErrorKind::InvalidMeasurement, "negative weight in outcome " + std::to_string(j));
      }
    }
  }
  const double res = completeness_residual();
  if (res > kStateTol) {
    throw Error(ErrorKind::InvalidMeasurement,
                "sum of c C^dagger C deviates from identity by " + std::to_string(res));
  }
}

OutcomeMap canonical_form(const ComplexMatrix& choi_rrp_ssp, Index dim, double tol) {
  if (choi_rrp_ssp.rows() != dim * dim || choi_rrp_ssp.cols() != dim * dim) {
    throw Error(ErrorKind::DimensionMismatch, "map matrix must be N^2 x N^2");
  }
  const HermitianEigensystem eig = eig_hermitian(choi_rrp_ssp);
  OutcomeMap out;
  for (Index k = eig.values.size() - 1; k >= 0; --k) {
    const double lambda = eig.values(k);
    if (lambda < -tol) {
      throw Error(ErrorKind::InvalidMeasurement,
                  "map is not completely positive (eigenvalue " + std::to_string(lambda) + ")");
    }
    if (lambda <= tol) continue;
    ComplexMatrix c(dim, dim);
    for (Index r = 0; r < dim; ++r)
      for (Index rp = 0; rp < dim; ++rp) c(r, rp) = eig.vectors(r * dim + rp, k);
    out.weights.push_back(lambda);
    out.kraus.push_back(std::move(c));
  }
  return out;
}

Dilation build_dilation(const GeneralizedMeasurement& meas) {
  meas.validate();
  const Index n = meas.dim();
  const auto mu = static_cast<Index>(meas.outcomes.size());
  const Index channels = n * n;
  for (const auto& o : meas.outcomes) {
    if (static_cast<Index>(o.kraus.size()) > channels) {
      throw Error(ErrorKind::InvalidMeasurement,
                  "outcome with more than N^2 Kraus matrices; reduce it to canonical form first");
    }
  }

  const Index total = n * mu * channels;
  auto index = [&](Index r, Index j, Index alpha) { return (r * mu + j) * channels + alpha; };

  ComplexMatrix w = ComplexMatrix::Zero(total, total);
  std::vector<bool> defined(static_cast<std::size_t>(total), false);
  std::vector<ComplexVector> basis;
  basis.reserve(static_cast<std::size_t>(total));
  for (Index rp = 0; rp < n; ++rp) {
    ComplexVector col = ComplexVector::Zero(total);
    for (Index j = 0; j < mu; ++j) {
      const OutcomeMap& o = meas.outcomes[static_cast<std::size_t>(j)];
      for (std::size_t a = 0; a < o.kraus.size(); ++a) {
        const double amp = std::sqrt(o.weights[a]);
        for (Index r = 0; r < n; ++r) col(index(r, j, static_cast<Index>(a))) = amp * o.kraus[a](r, rp);
      }
    }
    w.col(index(rp, 0, 0)) = col;
    defined[static_cast<std::size_t>(index(rp, 0, 0))] = true;
    basis.push_back(std::move(col));
  }

  std::vector<ComplexVector> completion;
  for (Index k = 0; k < total && static_cast<Index>(basis.size()) < total; ++k) {
    ComplexVector u = ComplexVector::Unit(total, k);
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& b : basis) u -= b.dot(u) * b;
    const double norm = u.norm();
    if (norm < kGramSchmidtSkip) continue;
    u /= norm;
    basis.push_back(u);
    completion.push_back(std::move(u));
  }

  std::size_t next = 0;
  for (Index c = 0; c < total; ++c) {
    if (defined[static_cast<std::size_t>(c)]) continue;
    w.col(c) = completion.at(next++);
  }
  return Dilation{UnitaryOperator(std::move(w)), mu, channels, n};
}

MeasurementResult measure_generalized_via_maps(const DensityMatrix& rho,
                                               const GeneralizedMeasurement& meas,
                                               std::size_t outcome) {
  meas.validate();
  require_outcome(meas, outcome);
  if (rho.dim() != meas.dim()) {
    throw Error(ErrorKind::DimensionMismatch, "state and measurement dimensions differ");
  }
  const ComplexMatrix mapped = apply_outcome(rho.matrix(), meas.outcomes[outcome]);
  const double prob = mapped.trace().real();
  if (prob < kZeroProbability) {
    throw Error(ErrorKind::ZeroProbabilityOutcome,
                "outcome " + std::to_string(outcome) + " has probability " + std::to_string(prob));
  }
  return MeasurementResult{prob, DensityMatrix(mapped / prob)};
}

MeasurementResult measure_generalized_via_dilation(const DensityMatrix& rho,
                                                   const GeneralizedMeasurement& meas,
                                                   std::size_t outcome) {
  require_outcome(meas, outcome);
  return measure_generalized_via_dilation(rho, build_dilation(meas), outcome);
}

MeasurementResult measure_generalized_via_dilation(const DensityMatrix& rho, const Dilation& d,
                                                   std::size_t outcome) {
  const Index n = d.system;
  if (rho.dim() != n) throw Error(ErrorKind::DimensionMismatch, "state and dilation dimensions differ");
  const auto j = static_cast<Index>(outcome);
  if (j < 0 || j >= d.outcomes) {
    throw Error(ErrorKind::InvalidMeasurement, "outcome " + std::to_string(outcome) + " out of range");
  }

  // rho (x) |0,0><0,0|
  const Index total = d.total_dim();
  ComplexMatrix extended = ComplexMatrix::Zero(total, total);
  for (Index rp = 0; rp < n; ++rp)
    for (Index sp = 0; sp < n; ++sp) extended(d.index(rp, 0, 0), d.index(sp, 0, 0)) = rho.matrix()(rp, sp);
  const ComplexMatrix& w = d.w.matrix();
  const ComplexMatrix chi = w * extended * w.adjoint();

  // Project the first ancilla on |j>, then trace out both ancillas.
  ComplexMatrix post = ComplexMatrix::Zero(n, n);
  for (Index r = 0; r < n; ++r)
    for (Index s = 0; s < n; ++s)
      for (Index alpha = 0; alpha < d.channels; ++alpha)
        post(r, s) += chi(d.index(r, j, alpha), d.index(s, j, alpha));
  const double prob = post.trace().real();
  if (prob < kZeroProbability) {
    throw Error(ErrorKind::ZeroProbabilityOutcome,
                "outcome " + std::to_string(outcome) + " has probability " + std::to_string(prob));
  }
  return MeasurementResult{prob, DensityMatrix(post / prob)};
}

PreparedState prepare_generalized(const DensityMatrix& gamma0, Index dimA, Index dimB,
                                  const GeneralizedMeasurement& meas, std::size_t outcome) {
  require_joint_dims(gamma0, dimA, dimB);
  meas.validate();
  require_outcome(meas, outcome);
  if (meas.dim() != dimA) {
    throw Error(ErrorKind::DimensionMismatch, "measurement does not act on the system");
  }
  const OutcomeMap& o = meas.outcomes[outcome];
  ComplexMatrix mapped = ComplexMatrix::Zero(gamma0.dim(), gamma0.dim());
  for (std::size_t a = 0; a < o.kraus.size(); ++a) {
    const ComplexMatrix cj = extend_to_joint(o.kraus[a], dimB);
    mapped += o.weights[a] * (cj * gamma0.matrix() * cj.adjoint());
  }
  const double gamma = mapped.trace().real();
  if (gamma < kZeroProbability) {
    throw Error(ErrorKind::ZeroProbabilityOutcome,
                "preparation outcome has probability " + std::to_string(gamma));
  }
  return PreparedState{DensityMatrix(mapped / gamma), gamma, outcome};
}

GeneralizedMeasurement filter_measurement(const ComplexMatrix& x) {
  const HermitianEigensystem eig = eig_hermitian(x);
  if (eig.values.minCoeff() < -kStateTol || eig.values.maxCoeff() > 1.0 + kStateTol) {
    throw Error(ErrorKind::InvalidMeasurement, "filter operator must satisfy 0 <= X <= 1");
  }
  Eigen::VectorXd complement(eig.values.size());
  for (Index k = 0; k < eig.values.size(); ++k) {
    const double v = std::clamp(eig.values(k), 0.0, 1.0);
    complement(k) = std::sqrt(1.0 - v * v);
  }
  const ComplexMatrix rest = eig.vectors * complement.asDiagonal() * eig.vectors.adjoint();
  GeneralizedMeasurement meas;
  meas.outcomes.push_back(OutcomeMap{{1.0}, {x}});
  meas.outcomes.push_back(OutcomeMap{{1.0}, {rest}});
  return meas;
}

void validate(const PreparationProcedure& procedure) {
  std::visit(
      [](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, PinThenRotate>) {
          (void)pure_state_vector(p.pin_target);
          for (const auto& v : p.rotations) {
            if (v.dim() != p.pin_target.dim()) {
              throw Error(ErrorKind::DimensionMismatch, "rotation and pin target dimensions differ");
            }
          }
        } else if constexpr (std::is_same_v<T, Projective>) {
          for (const auto& proj : p.projectors) require_rank1_projector(proj);
        } else {
          p.measurement.validate();
        }
      },
      procedure);
}

}  // namespace procmap
