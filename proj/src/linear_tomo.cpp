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

#include "procmap/linear_tomo.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "procmap/errors.hpp"

namespace procmap {

namespace {

// Smallest eigenvalue of the Gram matrix relative to its largest below which
// the inputs are treated as linearly dependent.
constexpr double kFrameConditionFloor = 1e-12;

Complex hs_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
  // Tr[a^dagger b]
  return (a.conjugate().cwiseProduct(b)).sum();
}

}  // namespace

LinearProcessMap::LinearProcessMap(Index dim, ComplexMatrix lam) : dim_(dim), lam_(std::move(lam)) {
  if (dim_ <= 0 || lam_.rows() != dim_ * dim_ || lam_.cols() != dim_ * dim_) {
    throw Error(ErrorKind::DimensionMismatch,
                "linear map of dimension " + std::to_string(dim_) + " needs a " +
                    std::to_string(dim_ * dim_) + " square matrix");
  }
}

LinearProcessMap LinearProcessMap::identity(Index dim) {
  ComplexMatrix lam = ComplexMatrix::Zero(dim * dim, dim * dim);
  for (Index r = 0; r < dim; ++r)
    for (Index s = 0; s < dim; ++s) lam(r * dim + r, s * dim + s) = 1.0;
  return LinearProcessMap(dim, std::move(lam));
}

ComplexMatrix LinearProcessMap::action_matrix() const {
  const Index n = dim_;
  ComplexMatrix out(n * n, n * n);
  for (Index r = 0; r < n; ++r)
    for (Index rp = 0; rp < n; ++rp)
      for (Index s = 0; s < n; ++s)
        for (Index sp = 0; sp < n; ++sp) out(r * n + s, rp * n + sp) = at(r, rp, s, sp);
  return out;
}

double DualFrame::biorthogonality_residual() const {
  double out = 0.0;
  for (std::size_t m = 0; m < duals.size(); ++m)
    for (std::size_t n = 0; n < inputs.size(); ++n) {
      const Complex expected = (m == n) ? 1.0 : 0.0;
      out = std::max(out, std::abs(hs_inner(duals[m], inputs[n]) - expected));
    }
  return out;
}

DualFrame compute_duals(std::span<const ComplexMatrix> inputs) {
  if (inputs.empty()) throw Error(ErrorKind::NotAFrame, "no inputs");
  const Index n = inputs.front().rows();
  const auto k = static_cast<Index>(inputs.size());
  for (const auto& p : inputs) {
    if (p.rows() != n || p.cols() != n) {
      throw Error(ErrorKind::DimensionMismatch, "inputs must share one square dimension");
    }
  }
  if (k != n * n) {
    throw Error(ErrorKind::NotAFrame, "need exactly " + std::to_string(n * n) + " inputs, got " +
                                          std::to_string(k));
  }

  ComplexMatrix gram(k, k);
  for (Index a = 0; a < k; ++a)
    for (Index b = 0; b < k; ++b)
      gram(a, b) = hs_inner(inputs[static_cast<std::size_t>(a)], inputs[static_cast<std::size_t>(b)]);

  const Eigen::VectorXd gram_eigs =
      Eigen::SelfAdjointEigenSolver<ComplexMatrix>(gram, Eigen::EigenvaluesOnly).eigenvalues();
  if (gram_eigs.maxCoeff() <= 0.0 ||
      gram_eigs.minCoeff() < kFrameConditionFloor * gram_eigs.maxCoeff()) {
    throw Error(ErrorKind::NotAFrame, "inputs are linearly dependent");
  }
  const ComplexMatrix gram_inv = gram.inverse();

  DualFrame frame;
  frame.inputs.assign(inputs.begin(), inputs.end());
  frame.duals.reserve(inputs.size());
  for (Index m = 0; m < k; ++m) {
    ComplexMatrix dual = ComplexMatrix::Zero(n, n);
    for (Index b = 0; b < k; ++b) dual += gram_inv(b, m) * inputs[static_cast<std::size_t>(b)];
    frame.duals.push_back(std::move(dual));
  }

  const double residual = frame.biorthogonality_residual();
  if (residual > kStateTol) {
    throw Error(ErrorKind::NotAFrame,
                "dual frame is ill-conditioned (biorthogonality residual " +
                    std::to_string(residual) + ")");
  }
  return frame;
}

LinearProcessMap reconstruct_linear_map(std::span<const TomographyRecord> records) {
  std::vector<ComplexMatrix> inputs;
  inputs.reserve(records.size());
  for (const auto& rec : records) inputs.push_back(rec.input.matrix());
  const DualFrame frame = compute_duals(inputs);

  const Index n = records.front().input.dim();
  ComplexMatrix lam = ComplexMatrix::Zero(n * n, n * n);
  for (std::size_t k = 0; k < records.size(); ++k) {
    const ComplexMatrix& q = records[k].output.matrix();
    if (q.rows() != n) throw Error(ErrorKind::DimensionMismatch, "output dimension differs from input");
    const ComplexMatrix& dual = frame.duals[k];
    for (Index r = 0; r < n; ++r)
      for (Index rp = 0; rp < n; ++rp)
        for (Index s = 0; s < n; ++s)
          for (Index sp = 0; sp < n; ++sp)
            lam(r * n + rp, s * n + sp) += q(r, s) * std::conj(dual(rp, sp));
  }
  return LinearProcessMap(n, std::move(lam));
}

ComplexMatrix apply_linear_map(const LinearProcessMap& map, const ComplexMatrix& rho) {
  const Index n = map.dim();
  if (rho.rows() != n || rho.cols() != n) {
    throw Error(ErrorKind::DimensionMismatch, "state dimension does not match the map");
  }
  ComplexMatrix out = ComplexMatrix::Zero(n, n);
  for (Index r = 0; r < n; ++r)
    for (Index s = 0; s < n; ++s)
      for (Index rp = 0; rp < n; ++rp)
        for (Index sp = 0; sp < n; ++sp) out(r, s) += map.at(r, rp, s, sp) * rho(rp, sp);
  return out;
}

MapDiagnostics map_diagnostics(const LinearProcessMap& map) {
  MapDiagnostics d;
  const ComplexMatrix& lam = map.lam();
  d.hermiticity_residual = hermiticity_residual(lam);
  const ComplexMatrix sym = (lam + lam.adjoint()) / 2.0;
  d.eigenvalues =
      Eigen::SelfAdjointEigenSolver<ComplexMatrix>(sym, Eigen::EigenvaluesOnly).eigenvalues();
  d.trace = lam.trace().real();
  d.min_eigenvalue = d.eigenvalues.minCoeff();

  const Index n = map.dim();
  for (Index rp = 0; rp < n; ++rp)
    for (Index sp = 0; sp < n; ++sp) {
      Complex partial = 0.0;
      for (Index r = 0; r < n; ++r) partial += map.at(r, rp, r, sp);
      const Complex expected = (rp == sp) ? 1.0 : 0.0;
      d.trace_preservation_residual =
          std::max(d.trace_preservation_residual, std::abs(partial - expected));
    }
  return d;
}

}  // namespace procmap
