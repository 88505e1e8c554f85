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

#include <doctest.h>

#include "oracles.hpp"
#include "procmap/dynamics.hpp"
#include "support.hpp"

using namespace procmap;
using testing::throws_kind;

namespace {

ProcessSpec heisenberg_spec(double t, const ComplexMatrix& gamma0) {
  return ProcessSpec{2, 2, unitary_from_hamiltonian(heisenberg_hamiltonian(), t), DensityMatrix(gamma0)};
}

}  // namespace

TEST_CASE("heisenberg hamiltonian and its unitary") {
  CHECK(max_abs(heisenberg_hamiltonian() - oracle::heisenberg()) == 0.0);
  for (double t : {0.0, 0.1, oracle::kPi / 8, 1.3}) {
    const UnitaryOperator u = unitary_from_hamiltonian(heisenberg_hamiltonian(), t);
    CHECK(max_abs(u.matrix() - oracle::heisenberg_u(t)) < 1e-12);
    CHECK(unitarity_residual(u.matrix()) < 1e-12);
  }
}

TEST_CASE("unitary_from_hamiltonian") {
  SUBCASE("zero hamiltonian") {
    CHECK(max_abs(unitary_from_hamiltonian(ComplexMatrix::Zero(3, 3), 2.0).matrix() -
                  ComplexMatrix::Identity(3, 3)) < 1e-15);
  }
  SUBCASE("forward and backward evolution cancel") {
    oracle::Rng rng(3);
    const ComplexMatrix h = rng.hermitian(4);
    const ComplexMatrix prod = unitary_from_hamiltonian(h, 0.7).matrix() * unitary_from_hamiltonian(h, -0.7).matrix();
    CHECK(max_abs(prod - ComplexMatrix::Identity(4, 4)) < 1e-12);
  }
  SUBCASE("group property and Taylor oracle on random hamiltonians") {
    oracle::Rng rng(4);
    for (int trial = 0; trial < 10; ++trial) {
      const int n = rng.integer(2, 6);
      const ComplexMatrix h = rng.hermitian(n);
      const double t1 = rng.uniform(-2, 2), t2 = rng.uniform(-2, 2);
      const ComplexMatrix u1 = unitary_from_hamiltonian(h, t1).matrix();
      const ComplexMatrix u2 = unitary_from_hamiltonian(h, t2).matrix();
      CHECK(max_abs(u1 * u2 - unitary_from_hamiltonian(h, t1 + t2).matrix()) <= 1e-10);
      CHECK(max_abs(u1 - oracle::expm(Complex(0, -t1) * h)) <= 1e-10);
    }
  }
  SUBCASE("non-Hermitian hamiltonian") {
    ComplexMatrix h = ComplexMatrix::Zero(2, 2);
    h(0, 1) = 1.0;
    CHECK(throws_kind(ErrorKind::NonHermitian, [&] { return unitary_from_hamiltonian(h, 1.0); }));
  }
}

TEST_CASE("correlated two-qubit state") {
  const DensityMatrix g = correlated_two_qubit_state(BlochVector{{0.1, 0.5, -0.2}}, 0.3);
  CHECK(max_abs(g.matrix() - oracle::correlated(0.1, 0.5, -0.2, 0.3)) < 1e-16);
  CHECK(g.is_valid());
}

TEST_CASE("run_process examples") {
  SUBCASE("identity dynamics returns the prepared projector") {
    oracle::Rng rng(5);
    const ComplexMatrix rho = rng.state(2), tau = rng.state(2), p = rng.pure(2);
    const ProcessSpec spec{2, 2, UnitaryOperator::identity(4), DensityMatrix(oracle::kron(rho, tau))};
    const PreparedState s = prepare_projective(spec.gamma0, 2, 2, p);
    CHECK(max_abs(run_process(spec, s).matrix() - p) < 1e-12);
  }
  SUBCASE("stochastic inputs under the heisenberg coupling at t = pi/8") {
    const double t = oracle::kPi / 8;
    const ProcessSpec spec = heisenberg_spec(t, 0.25 * ComplexMatrix::Identity(4, 4));
    const DensityMatrix pinned = apply_pin_map(spec.gamma0, 2, 2, DensityMatrix(oracle::qubit(0, 0, 1)));
    const PreparedState s = prepare_stochastic(pinned, UnitaryOperator::identity(2));
    // (1 + C^2 sigma_3)/2 with C^2 = cos^2(pi/4) = 1/2
    CHECK(max_abs(run_process(spec, s).matrix() - oracle::qubit(0, 0, 0.5)) < 1e-12);

    ComplexMatrix h(2, 2);
    h << 1, 1, 1, -1;
    const PreparedState sx = prepare_stochastic(pinned, UnitaryOperator(h / std::sqrt(2.0)));
    CHECK(max_abs(run_process(spec, sx).matrix() - oracle::qubit(0.5, 0, 0)) < 1e-12);
  }
  SUBCASE("closed form (1 + C^2 a.sigma)/2 for any time") {
    oracle::Rng rng(6);
    for (int trial = 0; trial < 10; ++trial) {
      const double t = rng.uniform(0, oracle::kPi);
      const auto a = rng.unit_vector();
      const ProcessSpec spec = heisenberg_spec(t, 0.25 * ComplexMatrix::Identity(4, 4));
      const ComplexMatrix p = oracle::qubit(a[0], a[1], a[2]);
      const PreparedState s{DensityMatrix(oracle::kron(p, 0.5 * oracle::id2())), 1.0, 0};
      const double c2 = std::pow(std::cos(2 * t), 2);
      CHECK(max_abs(run_process(spec, s).matrix() - oracle::qubit(c2 * a[0], c2 * a[1], c2 * a[2])) < 1e-12);
    }
  }
  SUBCASE("measurement preparation of P(2,-) on the correlated pair") {
    const double t = oracle::kPi / 8;
    const ComplexMatrix g = oracle::correlated(0, 0.5, 0, 0.3);
    const ProcessSpec spec = heisenberg_spec(t, g);
    const PreparedState s = prepare_projective(spec.gamma0, 2, 2, oracle::qubit(0, -1, 0));
    const DensityMatrix q = run_process(spec, s);
    const BlochVector b = bloch_vector(q.matrix());
    CHECK(b.max_abs_diff(BlochVector{{-0.3, -0.5, -0.3}}) < 1e-12);
    CHECK(max_abs(q.matrix() - oracle::measured_output(oracle::heisenberg_u(t), g, oracle::qubit(0, -1, 0))) < 1e-12);
    CHECK(s.gamma == doctest::Approx(0.25));
  }
  SUBCASE("dimension mismatch") {
    const ProcessSpec spec = heisenberg_spec(0.2, 0.25 * ComplexMatrix::Identity(4, 4));
    const PreparedState s{DensityMatrix::maximally_mixed(6), 1.0, 0};
    CHECK(throws_kind(ErrorKind::DimensionMismatch, [&] { return run_process(spec, s); }));
  }
}

TEST_CASE("run_process invariants on random processes") {
  oracle::Rng rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const int nb = rng.integer(1, 3);
    const ProcessSpec spec{2, nb, UnitaryOperator(rng.unitary(2 * nb)), DensityMatrix(rng.state(2 * nb))};
    const PreparedState s1{DensityMatrix(rng.state(2 * nb)), 1.0, 0};
    const PreparedState s2{DensityMatrix(rng.state(2 * nb)), 1.0, 0};
    const ComplexMatrix q1 = run_process(spec, s1).matrix();
    const ComplexMatrix q2 = run_process(spec, s2).matrix();
    CHECK(std::abs(q1.trace() - 1.0) < 1e-12);
    CHECK(hermiticity_residual(q1) < 1e-12);
    CHECK(eig_hermitian(q1).values.minCoeff() >= -1e-10);

    const double alpha = rng.uniform();
    const PreparedState mix{DensityMatrix(alpha * s1.joint.matrix() + (1 - alpha) * s2.joint.matrix()), 1.0, 0};
    CHECK(max_abs(run_process(spec, mix).matrix() - (alpha * q1 + (1 - alpha) * q2)) < 1e-12);
    CHECK(max_abs(q1 - oracle::evolve(spec.u.matrix(), s1.joint.matrix(), 2, nb)) < 1e-12);
  }
}

TEST_CASE("dynamical map with a fixed environment") {
  SUBCASE("identity dynamics") {
    oracle::Rng rng(8);
    const LinearProcessMap m = dynamical_map_fixed_env(UnitaryOperator::identity(4), DensityMatrix(rng.state(2)));
    CHECK(max_abs(m.lam() - LinearProcessMap::identity(2).lam()) < 1e-14);
  }
  SUBCASE("swap gives the constant map onto tau") {
    ComplexMatrix swap = ComplexMatrix::Zero(4, 4);
    swap(0, 0) = swap(3, 3) = swap(1, 2) = swap(2, 1) = 1.0;
    oracle::Rng rng(9);
    const ComplexMatrix tau = rng.state(2);
    const LinearProcessMap m = dynamical_map_fixed_env(UnitaryOperator(swap), DensityMatrix(tau));
    for (int trial = 0; trial < 5; ++trial) {
      CHECK(max_abs(apply_linear_map(m, rng.state(2)) - tau) < 1e-14);
    }
  }
  SUBCASE("heisenberg with a maximally mixed environment is the closed-form map") {
    for (double t : {0.0, oracle::kPi / 8, oracle::kPi / 3, 0.77}) {
      const LinearProcessMap m = dynamical_map_fixed_env(unitary_from_hamiltonian(heisenberg_hamiltonian(), t),
                                                         DensityMatrix::maximally_mixed(2));
      CHECK(max_abs(m.lam() - oracle::lambda_s(t)) < 1e-12);
    }
  }
  SUBCASE("agrees with the dynamics on random inputs") {
    oracle::Rng rng(10);
    const ComplexMatrix u = rng.unitary(6);
    const ComplexMatrix tau = rng.state(3);
    const LinearProcessMap m = dynamical_map_fixed_env(UnitaryOperator(u), DensityMatrix(tau));
    for (int trial = 0; trial < 10; ++trial) {
      const ComplexMatrix rho = rng.state(2);
      CHECK(max_abs(apply_linear_map(m, rho) - oracle::evolve(u, oracle::kron(rho, tau), 2, 3)) < 1e-12);
    }
  }
}

TEST_CASE("process spec validation") {
  const ProcessSpec bad_dims{2, 3, UnitaryOperator::identity(4), DensityMatrix::maximally_mixed(4)};
  CHECK(throws_kind(ErrorKind::DimensionMismatch, [&] { bad_dims.validate(); return 0; }));
  ComplexMatrix g = ComplexMatrix::Identity(4, 4);
  const ProcessSpec bad_state{2, 2, UnitaryOperator::identity(4), DensityMatrix(g)};
  CHECK(throws_kind(ErrorKind::InvalidState, [&] { bad_state.validate(); return 0; }));
  CHECK_NOTHROW(ProcessSpec{}.validate());
}
