// Copyright 2026 The qfcs Authors
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

#include <cmath>
#include <random>

#include "doctest.h"
#include "qfcs/evolve.hpp"
#include "qfcs/linop.hpp"
#include "qfcs/liouville.hpp"
#include "qfcs/model.hpp"
#include "test_helpers.hpp"

using namespace qfcs;
using qfcs::testing::max_abs_diff;
using qfcs::testing::random_hermitian;

namespace {
constexpr Complex kI{0.0, 1.0};

std::vector<SystemModel> sample_models() {
  std::vector<SystemModel> models;
  models.push_back(build_driven_qubit(1.0, 0.05, 1.0, 0.007, 2.0));
  models.push_back(build_undriven_qubit(1.0, 0.1, 2.0));
  models.push_back(build_rwa_qubit(0.5, 0.3, 1.0));
  models.push_back(build_rwa_oscillator(1.0, 0.05, 1.0, 0.1, 8));
  models.push_back(build_coupled_qubits(5.0, 40.0, 1.0));
  models.push_back(build_three_level(0.625, 1.0));
  return models;
}
}  // namespace

TEST_CASE("trace preservation: vec(I)^T A_0 = 0 for every model at random times") {
  std::uniform_real_distribution<double> time_dist(0.0, 25.0);
  for (const auto& m : sample_models()) {
    const ComplexVector tr = vectorize(OperatorMatrix::Identity(m.dim(), m.dim()));
    for (int rep = 0; rep < 5; ++rep) {
      const SuperOperator a0 =
          assemble(m, CountingField::zero(m.counting_dim()), time_dist(qfcs::testing::rng()));
      const ComplexVector row = a0.transpose() * tr;
      CHECK(row.cwiseAbs().maxCoeff() < 1e-10);
    }
  }
}

TEST_CASE("A_0 annihilates the Gibbs state of the undriven qubit") {
  const SystemModel m = build_undriven_qubit(1.0, 0.1, 2.0);
  const SuperOperator a0 = assemble(m, CountingField::zero(1), 0.0);
  const OperatorMatrix gibbs = gibbs_state(m.static_hamiltonian(), m.beta());
  CHECK((a0 * vectorize(gibbs)).cwiseAbs().maxCoeff() < 1e-9);
}

TEST_CASE("counting dressing touches exactly the two sandwich blocks") {
  const SystemModel m = build_undriven_qubit(1.0, 0.1, 2.0);
  const auto& ch = m.channels()[0];
  const Complex u{0.7, 0.0};
  const SuperOperator diff =
      assemble(m, CountingField::uniform(u, 1), 0.0) - assemble(m, CountingField::zero(1), 0.0);
  const SuperOperator expected =
      ch.down_rate * (std::exp(kI * u * ch.transition_energy) - 1.0) *
          sandwich_superop(ch.lowering_op, ch.lowering_op.adjoint()) +
      m.up_rate(ch) * (std::exp(-kI * u * ch.transition_energy) - 1.0) *
          sandwich_superop(ch.lowering_op.adjoint(), ch.lowering_op);
  CHECK(max_abs_diff(diff, expected) < 1e-14);
}

TEST_CASE("time-reversed generator flips only the commutator") {
  const SystemModel m = build_driven_qubit(1.0, 0.05, 1.0, 0.007, 2.0);
  const CountingField u = CountingField::uniform(0.3, 1);
  const double t = 1.7;
  const SuperOperator fwd = assemble(m, u, t);
  const SuperOperator rev = assemble_time_reversed(m, u, t);
  // commutators cancel in the sum, leaving twice the dissipator
  SuperOperator dissipator = fwd + kI * commutator_superop(m.hamiltonian_at(t));
  CHECK(max_abs_diff(fwd + rev, 2.0 * dissipator) < 1e-12);

  // with H = 0 the forward and reversed generators coincide
  std::vector<JumpChannel> chans{{qubit_lowering(), 1.0, 0.2, 0}};
  const SystemModel free_model(OperatorMatrix::Zero(2, 2), {}, chans, 2.0);
  CHECK(max_abs_diff(assemble(free_model, u, 0.0), assemble_time_reversed(free_model, u, 0.0)) <
        1e-14);
}

TEST_CASE("detailed-balance adjoint symmetry of the dressed generator") {
  const double beta = 2.0;
  const SystemModel m = build_undriven_qubit(1.0, 0.3, beta);
  std::uniform_real_distribution<double> u_dist(-2.0, 2.0);
  for (int rep = 0; rep < 20; ++rep) {
    const double u = u_dist(qfcs::testing::rng());
    const OperatorMatrix r1 = random_hermitian(2), r2 = random_hermitian(2);
    const SuperOperator a_shift = assemble(m, CountingField::uniform(kI * beta - u, 1), 0.0);
    const SuperOperator a_rev = assemble_time_reversed(m, CountingField::uniform(u, 1), 0.0);
    const Complex lhs = (r1 * devectorize(a_shift * vectorize(r2))).trace();
    const Complex rhs = (devectorize(a_rev * vectorize(r1)) * r2).trace();
    CHECK(std::abs(lhs - rhs) < 1e-9);
  }
}

TEST_CASE("dissipator-only adjoint with the trace pairing") {
  // H = 0 isolates the dissipator; Tr(rho1 L_{ib-u}[rho2]) = Tr(L_u[rho1] rho2).
  const double beta = 1.3;
  std::vector<JumpChannel> chans{{qubit_lowering(), 1.0, 0.4, 0}};
  const SystemModel m(OperatorMatrix::Zero(2, 2), {}, chans, beta);
  for (int rep = 0; rep < 20; ++rep) {
    const double u = std::uniform_real_distribution<double>(-3.0, 3.0)(qfcs::testing::rng());
    const OperatorMatrix r1 = random_hermitian(2), r2 = random_hermitian(2);
    const Complex lhs =
        (r1 * devectorize(assemble(m, CountingField::uniform(kI * beta - u, 1), 0.0) * vectorize(r2)))
            .trace();
    const Complex rhs =
        (devectorize(assemble(m, CountingField::uniform(u, 1), 0.0) * vectorize(r1)) * r2).trace();
    CHECK(std::abs(lhs - rhs) < 1e-9);
  }
}

TEST_CASE("A_0 preserves hermiticity") {
  for (const auto& m : sample_models()) {
    const SuperOperator a0 = assemble(m, CountingField::zero(m.counting_dim()), 0.4);
    const OperatorMatrix rho = random_hermitian(m.dim());
    const OperatorMatrix out = devectorize(a0 * vectorize(rho));
    CHECK(hermiticity_error(out) < 1e-12 * std::max(1.0, out.cwiseAbs().maxCoeff()));
  }
}

TEST_CASE("stationary state of the undriven qubit is the Gibbs state") {
  const SystemModel m = build_undriven_qubit(1.0, 0.1, 2.0);
  const OperatorMatrix rho = stationary_state(m);
  CHECK(max_abs_diff(rho, gibbs_state(m.static_hamiltonian(), 2.0)) < 1e-9);
}

TEST_CASE("rwa qubit stationary state agrees with long-time propagation") {
  const SystemModel m = build_rwa_qubit(0.4, 0.0, 0.5);
  const OperatorMatrix direct = stationary_state(m);
  // brute-force: propagate to t = 50/Gamma from the ground state
  OperatorMatrix init = OperatorMatrix::Zero(2, 2);
  init(1, 1) = 1.0;
  const CountingState cs = propagate(m, CountingField::zero(1), 100.0, init);
  CHECK(max_abs_diff(direct, cs.matrix) < 1e-7);
  // resonance: the stationary coherence is purely imaginary in this basis
  CHECK(std::abs(direct(0, 1).real()) < 1e-10);
  // excited population Omega^2/(Gamma^2 + 2 Omega^2)
  const double pe = 0.4 * 0.4 / (0.5 * 0.5 + 2.0 * 0.4 * 0.4);
  CHECK(direct(0, 0).real() == doctest::Approx(pe).epsilon(1e-9));
}

TEST_CASE("coupled-qubit stationary state matches the dressed-basis closed form") {
  // omega_xx >> Omega >> Gamma regime
  const double om = 1.0, wxx = 50.0, gamma = 0.02;
  const double rabi = om * om / wxx;
  const double x = rabi * rabi + gamma * gamma;
  const SystemModel m = build_coupled_qubits(om, wxx, gamma);
  const OperatorMatrix rho = stationary_state(m);
  Eigen::SelfAdjointEigenSolver<OperatorMatrix> es(m.static_hamiltonian());
  // level 1: eigenvalue nearest 0; level 2: nearest -rabi
  Eigen::Index i1 = 0, i2 = 0;
  es.eigenvalues().cwiseAbs().minCoeff(&i1);
  (es.eigenvalues().array() + rabi).abs().minCoeff(&i2);
  const OperatorMatrix v = es.eigenvectors();
  const OperatorMatrix rho_en = v.adjoint() * rho * v;
  const double p11 = 0.5 - rabi * rabi / (4.0 * x);
  CHECK(rho_en(i1, i1).real() == doctest::Approx(p11).epsilon(2e-4));
  CHECK(rho_en(i2, i2).real() == doctest::Approx(p11).epsilon(2e-4));
  // coherence magnitude |Gamma^2 - i Gamma rabi| / (2 x); its phase depends on
  // the eigenvector phase convention, so compare moduli.
  const double c = std::hypot(gamma * gamma, gamma * rabi) / (2.0 * x);
  CHECK(std::abs(rho_en(i1, i2)) == doctest::Approx(c).epsilon(2e-3));
}

TEST_CASE("degenerate kernel is reported with its dimension") {
  // A jump channel acting on the first qubit only leaves the second qubit free:
  // the kernel contains |g><g| tensor (any stationary qubit state).
  const OperatorMatrix id = OperatorMatrix::Identity(2, 2);
  std::vector<JumpChannel> chans{{kron(qubit_lowering(), id), 1.0, 0.3, 0}};
  const SystemModel m(kron(pauli_z() / 2.0, id), {}, chans, kInfiniteBeta);
  CHECK_THROWS_AS(stationary_state(m), DegenerateKernelError);
  try {
    stationary_state(m);
  } catch (const DegenerateKernelError& e) {
    CHECK(e.kernel_dim() == 4);
  }
}

TEST_CASE("counting field shorter than the channel tags is rejected") {
  const SystemModel m = build_coupled_qubits(1.0, 2.0, 1.0);
  CHECK_THROWS_AS(assemble(m, CountingField::uniform(0.1, 1), 0.0), PreconditionError);
}
