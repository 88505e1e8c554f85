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

// Independent reference computations for the tests. Nothing here calls into
// the library's numerical kernels: Kronecker products come from Eigen's
// unsupported module, partial traces and the process equation are explicit
// index loops, and the exponential is a scaled Taylor series.

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include <Eigen/Dense>
#include <unsupported/Eigen/KroneckerProduct>

namespace oracle {

using Complex = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

inline const double kPi = std::acos(-1.0);

inline Mat id2() { return Mat::Identity(2, 2); }

inline Mat sx() {
  Mat m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}
inline Mat sy() {
  Mat m(2, 2);
  m << 0, Complex(0, -1), Complex(0, 1), 0;
  return m;
}
inline Mat sz() {
  Mat m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}
inline Mat sigma(int j) { return j == 1 ? sx() : j == 2 ? sy() : sz(); }

inline Mat kron(const Mat& a, const Mat& b) { return Eigen::kroneckerProduct(a, b).eval(); }

/// (1 + a.sigma)/2.
inline Mat qubit(double a1, double a2, double a3) {
  return 0.5 * (id2() + a1 * sx() + a2 * sy() + a3 * sz());
}

inline std::array<double, 3> bloch(const Mat& q) {
  return {(q * sx()).trace().real(), (q * sy()).trace().real(), (q * sz()).trace().real()};
}

inline double max_abs(const Mat& m) { return m.cwiseAbs().maxCoeff(); }

/// out(r, s) = sum_alpha joint(r*nb + alpha, s*nb + alpha).
inline Mat trace_env(const Mat& joint, int na, int nb) {
  Mat out = Mat::Zero(na, na);
  for (int r = 0; r < na; ++r)
    for (int s = 0; s < na; ++s)
      for (int a = 0; a < nb; ++a) out(r, s) += joint(r * nb + a, s * nb + a);
  return out;
}

inline Mat trace_sys(const Mat& joint, int na, int nb) {
  Mat out = Mat::Zero(nb, nb);
  for (int a = 0; a < nb; ++a)
    for (int b = 0; b < nb; ++b)
      for (int r = 0; r < na; ++r) out(a, b) += joint(r * nb + a, r * nb + b);
  return out;
}

/// exp(A) by scaling and squaring around a Taylor series.
inline Mat expm(const Mat& a) {
  const double norm = a.cwiseAbs().rowwise().sum().maxCoeff();
  int squarings = 0;
  while (norm / std::pow(2.0, squarings) > 0.25) ++squarings;
  const Mat x = a / std::pow(2.0, squarings);
  Mat term = Mat::Identity(a.rows(), a.cols());
  Mat sum = term;
  for (int k = 1; k < 30; ++k) {
    term = (term * x / static_cast<double>(k)).eval();
    sum += term;
  }
  for (int k = 0; k < squarings; ++k) sum = (sum * sum).eval();
  return sum;
}

inline Mat heisenberg() { return kron(sx(), sx()) + kron(sy(), sy()) + kron(sz(), sz()); }

inline Mat heisenberg_u(double t) { return expm(Complex(0, -t) * heisenberg()); }

/// Tr_B[U X U^dagger] with explicit sums.
inline Mat evolve(const Mat& u, const Mat& joint, int na, int nb) {
  return trace_env(u * joint * u.adjoint(), na, nb);
}

/// The measurement-prepared output Tr_B[U P gamma0 P U^dagger] / Gamma.
inline Mat measured_output(const Mat& u, const Mat& gamma0, const Mat& p, double* gamma = nullptr) {
  const Mat pe = kron(p, Mat::Identity(gamma0.rows() / p.rows(), gamma0.rows() / p.rows()));
  const Mat prepared = pe * gamma0 * pe;
  const double g = prepared.trace().real();
  if (gamma != nullptr) *gamma = g;
  return evolve(u, prepared, static_cast<int>(p.rows()), static_cast<int>(gamma0.rows() / p.rows())) / g;
}

/// (1 (x) 1 + a.sigma (x) 1 + c23 sigma_2 (x) sigma_3)/4.
inline Mat correlated(double a1, double a2, double a3, double c23) {
  return 0.25 * (kron(id2(), id2()) + kron(a1 * sx() + a2 * sy() + a3 * sz(), id2()) +
                 c23 * kron(sy(), sz()));
}

/// The stochastic-preparation map in the rrp-ssp layout, written in closed form.
inline Mat lambda_s(double t) {
  const double c2 = std::pow(std::cos(2 * t), 2);
  Mat m = Mat::Zero(4, 4);
  m(0, 0) = m(3, 3) = 1 + c2;
  m(1, 1) = m(2, 2) = 1 - c2;
  m(0, 3) = m(3, 0) = 2 * c2;
  return 0.5 * m;
}

/// The linear fit of the measurement-prepared example, written in closed form.
inline Mat lambda_m(double t, double cplus) {
  const double c = std::cos(2 * t), s = std::sin(2 * t);
  const Complex i(0, 1);
  Mat m(4, 4);
  m << 1 + c * c, i * cplus * s * s, 0, 2 * c * c - i * cplus * c * s,
      -i * cplus * s * s, 1 - c * c, i * cplus * c * s, 0,
      0, -i * cplus * c * s, 1 - c * c, -i * cplus * s * s,
      2 * c * c + i * cplus * c * s, 0, i * cplus * s * s, 1 + c * c;
  return 0.5 * m;
}

// ---------------------------------------------------------------------------
// seeded random inputs

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  double normal() { return normal_(gen_); }
  double uniform(double lo = 0.0, double hi = 1.0) { return std::uniform_real_distribution<double>(lo, hi)(gen_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }

  Mat ginibre(int rows, int cols) {
    Mat m(rows, cols);
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c) m(r, c) = Complex(normal(), normal());
    return m;
  }

  Vec ket(int dim) {
    Vec v = ginibre(dim, 1).col(0);
    return v / v.norm();
  }

  /// G G^dagger / Tr, full rank with probability one.
  Mat state(int dim) {
    const Mat g = ginibre(dim, dim);
    const Mat rho = g * g.adjoint();
    return rho / rho.trace().real();
  }

  Mat pure(int dim) {
    const Vec v = ket(dim);
    return v * v.adjoint();
  }

  /// Haar unitary: QR of a Ginibre matrix with the phases of R's diagonal removed.
  Mat unitary(int dim) {
    const Mat g = ginibre(dim, dim);
    Eigen::HouseholderQR<Mat> qr(g);
    Mat q = qr.householderQ();
    const Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int k = 0; k < dim; ++k) q.col(k) *= r(k, k) / std::abs(r(k, k));
    return q;
  }

  std::array<double, 3> unit_vector() {
    std::array<double, 3> v{normal(), normal(), normal()};
    const double n = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
    for (double& x : v) x /= n;
    return v;
  }

  Mat hermitian(int dim) {
    const Mat g = ginibre(dim, dim);
    return 0.5 * (g + g.adjoint());
  }

 private:
  std::mt19937_64 gen_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

/// Inverse square root of a positive definite matrix.
inline Mat inv_sqrt(const Mat& s) {
  Eigen::SelfAdjointEigenSolver<Mat> es(s);
  return es.eigenvectors() * es.eigenvalues().cwiseInverse().cwiseSqrt().asDiagonal() *
         es.eigenvectors().adjoint();
}

struct RandomOutcome {
  std::vector<double> weights;
  std::vector<Mat> kraus;
};

/// A random complete measurement with `outcomes` outcomes of 1..max_kraus
/// weighted Kraus matrices each: A_k -> A_k S^{-1/2} with S = sum w A^dagger A.
inline std::vector<RandomOutcome> random_measurement(Rng& rng, int dim, int outcomes, int max_kraus) {
  std::vector<RandomOutcome> out(static_cast<std::size_t>(outcomes));
  Mat s = Mat::Zero(dim, dim);
  for (auto& o : out) {
    const int k = rng.integer(1, max_kraus);
    for (int a = 0; a < k; ++a) {
      o.weights.push_back(rng.uniform(0.2, 1.0));
      o.kraus.push_back(rng.ginibre(dim, dim));
      s += o.weights.back() * o.kraus.back().adjoint() * o.kraus.back();
    }
  }
  const Mat t = inv_sqrt(s);
  for (auto& o : out)
    for (auto& c : o.kraus) c = (c * t).eval();
  return out;
}

}  // namespace oracle
