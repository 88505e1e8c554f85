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

#include "procmap/bilinear_tomo.hpp"

#include <cmath>
#include <string>

#include "procmap/errors.hpp"

namespace procmap {

BilinearProcessMap::BilinearProcessMap(Index dim) : dim_(dim) {
  if (dim <= 0) {
    throw Error(ErrorKind::DimensionMismatch, "bilinear map dimension must be positive");
  }
  const auto n = static_cast<std::size_t>(dim);
  data_.assign(n * n * n * n * n * n, Complex(0.0, 0.0));
}

ComplexMatrix BilinearProcessMap::block(Index grid_row, Index grid_col) const {
  const Index n = dim_;
  ComplexMatrix b(n, n);
  for (Index r = 0; r < n; ++r) {
    for (Index s = 0; s < n; ++s) {
      b(r, s) = at(r, s, grid_row / n, grid_row % n, grid_col / n, grid_col % n);
    }
  }
  return b;
}

void BilinearProcessMap::set_block(Index grid_row, Index grid_col, const ComplexMatrix& b) {
  const Index n = dim_;
  if (b.rows() != n || b.cols() != n) {
    throw Error(ErrorKind::DimensionMismatch, "block must be " + std::to_string(n) + "x" +
                                                  std::to_string(n));
  }
  for (Index r = 0; r < n; ++r) {
    for (Index s = 0; s < n; ++s) {
      at(r, s, grid_row / n, grid_row % n, grid_col / n, grid_col % n) = b(r, s);
    }
  }
}

Complex BilinearProcessMap::trace() const {
  Complex t(0.0, 0.0);
  const Index n = dim_;
  for (Index r = 0; r < n; ++r) {
    for (Index rp = 0; rp < n; ++rp) {
      for (Index rpp = 0; rpp < n; ++rpp) {
        t += at(r, r, rpp, rp, rpp, rp);
      }
    }
  }
  return t;
}

double BilinearProcessMap::hermiticity_residual() const {
  double worst = 0.0;
  const Index n = dim_;
  for (Index r = 0; r < n; ++r)
    for (Index s = 0; s < n; ++s)
      for (Index rpp = 0; rpp < n; ++rpp)
        for (Index rp = 0; rp < n; ++rp)
          for (Index spp = 0; spp < n; ++spp)
            for (Index sp = 0; sp < n; ++sp) {
              const Complex d = std::conj(at(r, s, rpp, rp, spp, sp)) - at(s, r, spp, sp, rpp, rp);
              worst = std::max(worst, std::abs(d));
            }
  return worst;
}

double MElementTable::hermiticity_residual() const {
  double worst = 0.0;
  for (int k = 0; k < 3; ++k) {
    worst = std::max({worst, procmap::hermiticity_residual(diag_plus[k]),
                      procmap::hermiticity_residual(linear[k]),
                      procmap::hermiticity_residual(cross[k])});
  }
  if (unit_unit) worst = std::max(worst, procmap::hermiticity_residual(*unit_unit));
  return worst;
}

double MElementTable::max_abs_diff(const MElementTable& other) const {
  double worst = 0.0;
  for (int k = 0; k < 3; ++k) {
    worst = std::max({worst, max_abs(diag_plus[k] - other.diag_plus[k]),
                      max_abs(linear[k] - other.linear[k]), max_abs(cross[k] - other.cross[k])});
  }
  if (unit_unit && other.unit_unit) worst = std::max(worst, max_abs(*unit_unit - *other.unit_unit));
  return worst;
}

BilinearProcessMap build_M_from_dynamics(const ProcessSpec& spec) {
  spec.validate();
  const Index n = spec.dimA;
  const Index nb = spec.dimB;
  const ComplexMatrix& u = spec.u.matrix();
  const ComplexMatrix& g = spec.gamma0.matrix();
  BilinearProcessMap m(n);

  for (Index r = 0; r < n; ++r)
    for (Index s = 0; s < n; ++s)
      for (Index rpp = 0; rpp < n; ++rpp)
        for (Index rp = 0; rp < n; ++rp)
          for (Index spp = 0; spp < n; ++spp)
            for (Index sp = 0; sp < n; ++sp) {
              Complex acc(0.0, 0.0);
              for (Index alpha = 0; alpha < nb; ++alpha)
                for (Index beta = 0; beta < nb; ++beta) {
                  const Complex gv = g(rpp * nb + alpha, spp * nb + beta);
                  if (gv == Complex(0.0, 0.0)) continue;
                  for (Index eps = 0; eps < nb; ++eps) {
                    acc += u(r * nb + eps, rp * nb + alpha) * gv *
                           std::conj(u(s * nb + eps, sp * nb + beta));
                  }
                }
              m.at(r, s, rpp, rp, spp, sp) = acc;
            }
  return m;
}

ComplexMatrix contract(const BilinearProcessMap& m, const ComplexMatrix& a, const ComplexMatrix& b) {
  const Index n = m.dim();
  if (a.rows() != n || a.cols() != n || b.rows() != n || b.cols() != n) {
    throw Error(ErrorKind::DimensionMismatch, "contract operands must match the map dimension");
  }
  ComplexMatrix out = ComplexMatrix::Zero(n, n);
  for (Index rpp = 0; rpp < n; ++rpp)
    for (Index rp = 0; rp < n; ++rp) {
      const Complex ca = std::conj(a(rpp, rp));
      if (ca == Complex(0.0, 0.0)) continue;
      for (Index spp = 0; spp < n; ++spp)
        for (Index sp = 0; sp < n; ++sp) {
          const Complex w = ca * b(spp, sp);
          if (w == Complex(0.0, 0.0)) continue;
          for (Index r = 0; r < n; ++r)
            for (Index s = 0; s < n; ++s) out(r, s) += w * m.at(r, s, rpp, rp, spp, sp);
        }
    }
  return out;
}

ComplexMatrix apply_bilinear(const BilinearProcessMap& m, const ComplexMatrix& p) {
  return contract(m, p, p);
}

MElementTable element_table_from_map(const BilinearProcessMap& m) {
  if (m.dim() != 2) {
    throw Error(ErrorKind::DimensionMismatch, "element table is defined for qubits only");
  }
  const ComplexMatrix& one = pauli::identity();
  const ComplexMatrix unit = contract(m, one, one);
  MElementTable t;
  for (int j = 1; j <= 3; ++j) {
    const ComplexMatrix& sj = pauli::sigma(j);
    t.diag_plus[j - 1] = unit + contract(m, sj, sj);
    t.linear[j - 1] = contract(m, one, sj) + contract(m, sj, one);
  }
  for (std::size_t k = 0; k < kCrossPairs.size(); ++k) {
    const ComplexMatrix& sj = pauli::sigma(kCrossPairs[k].first);
    const ComplexMatrix& sk = pauli::sigma(kCrossPairs[k].second);
    t.cross[k] = contract(m, sj, sk) + contract(m, sk, sj);
  }
  t.unit_unit = unit;
  return t;
}

std::vector<LabeledInput> nine_state_inputs() {
  const double h = 1.0 / std::sqrt(2.0);
  std::vector<LabeledInput> inputs;
  inputs.reserve(9);
  for (int j = 0; j < 3; ++j) {
    BlochVector plus;
    plus.a[j] = 1.0;
    BlochVector minus;
    minus.a[j] = -1.0;
    inputs.push_back(make_labeled_input(std::to_string(j + 1) + "+", plus));
    inputs.push_back(make_labeled_input(std::to_string(j + 1) + "-", minus));
  }
  for (std::size_t k = 0; k < kCrossPairs.size(); ++k) {
    BlochVector b;
    b.a[kCrossPairs[k].first - 1] = h;
    b.a[kCrossPairs[k].second - 1] = h;
    inputs.push_back(make_labeled_input(std::to_string(k + 4) + "+", b));
  }
  return inputs;
}

namespace {

ComplexMatrix weighted(std::span<const TomographyRecord> records, const std::string& label) {
  const TomographyRecord& rec = require_record(records, label);
  if (!(rec.gamma > kZeroProbability)) {
    throw Error(ErrorKind::ZeroGamma, "record '" + label + "' has gamma " + std::to_string(rec.gamma));
  }
  if (rec.output.dim() != 2) {
    throw Error(ErrorKind::DimensionMismatch, "record '" + label + "' is not a qubit output");
  }
  return rec.weighted_output();
}

// 4 Gamma Q minus the unit-unit contribution, for Bloch vector p.
ComplexMatrix pure_part(const MElementTable& t, const BlochVector& p) {
  ComplexMatrix acc = ComplexMatrix::Zero(2, 2);
  for (int j = 0; j < 3; ++j) {
    acc += (p[j] * p[j]) * t.diag_plus[j] + p[j] * t.linear[j];
  }
  for (std::size_t k = 0; k < kCrossPairs.size(); ++k) {
    acc += (p[kCrossPairs[k].first - 1] * p[kCrossPairs[k].second - 1]) * t.cross[k];
  }
  return acc;
}

constexpr double kUnitNormTol = 1e-10;

}  // namespace

MElementTable solve_M_elements(std::span<const TomographyRecord> records,
                               const TomographyRecord* mixed) {
  MElementTable t;
  for (int j = 0; j < 3; ++j) {
    const std::string idx = std::to_string(j + 1);
    const ComplexMatrix plus = weighted(records, idx + "+");
    const ComplexMatrix minus = weighted(records, idx + "-");
    t.diag_plus[j] = 2.0 * (plus + minus);
    t.linear[j] = 2.0 * (plus - minus);
  }
  const double r2 = std::sqrt(2.0);
  for (std::size_t k = 0; k < kCrossPairs.size(); ++k) {
    const int j = kCrossPairs[k].first - 1;
    const int l = kCrossPairs[k].second - 1;
    const ComplexMatrix both = weighted(records, std::to_string(k + 4) + "+");
    t.cross[k] = 8.0 * both - t.diag_plus[j] - t.diag_plus[l] - r2 * t.linear[j] - r2 * t.linear[l];
  }

  if (mixed != nullptr) {
    if (!(mixed->gamma > kZeroProbability)) {
      throw Error(ErrorKind::ZeroGamma, "mixed record '" + mixed->label + "' has gamma " +
                                            std::to_string(mixed->gamma));
    }
    if (mixed->input.dim() != 2 || mixed->output.dim() != 2) {
      throw Error(ErrorKind::DimensionMismatch, "mixed record must be a qubit record");
    }
    const PauliCoefficients c = pauli_decompose(mixed->input.matrix());
    // Normalize to the (1 + p.sigma)/2 convention.
    BlochVector p;
    for (int j = 0; j < 3; ++j) p.a[j] = c.a[j] / c.a0;
    const double n2 = p.norm() * p.norm();
    if (n2 > 1.0 - kUnitNormTol) {
      throw Error(ErrorKind::InvalidState, "mixed record '" + mixed->label +
                                               "' must have a Bloch vector shorter than 1");
    }
    t.unit_unit = (4.0 * mixed->weighted_output() - pure_part(t, p)) / (1.0 - n2);
  }
  return t;
}

Prediction predict_output(const MElementTable& table, const BlochVector& p) {
  const double norm = p.norm();
  if (norm > 1.0 + kUnitNormTol) {
    throw Error(ErrorKind::InvalidState, "Bloch vector longer than 1");
  }
  ComplexMatrix four_gq = pure_part(table, p);
  if (norm < 1.0 - kUnitNormTol) {
    if (!table.unit_unit) {
      throw Error(ErrorKind::MixedWithoutUnitUnit,
                  "mixed input needs the unit-unit element, which requires a mixed-state record");
    }
    four_gq += (1.0 - norm * norm) * *table.unit_unit;
  }
  const double gamma = four_gq.trace().real() / 4.0;
  if (!(gamma > kZeroProbability)) {
    throw Error(ErrorKind::ZeroGamma, "predicted preparation probability " + std::to_string(gamma));
  }
  ComplexMatrix q = four_gq / (4.0 * gamma);
  q = 0.5 * (q + q.adjoint()).eval();
  return Prediction{gamma, DensityMatrix(std::move(q))};
}

}  // namespace procmap
