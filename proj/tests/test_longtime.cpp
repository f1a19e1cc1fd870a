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
#include <vector>

#include "doctest.h"
#include "qfcs/longtime.hpp"
#include "qfcs/model.hpp"
#include "qfcs/oracles.hpp"
#include "test_helpers.hpp"

using namespace qfcs;

namespace {
constexpr Complex kI{0.0, 1.0};
}

TEST_CASE("single-qubit Fano factor matches the closed formula") {
  const double gamma = 1.0;
  for (double om : {0.1, 0.6, 2.0, 5.0}) {
    for (double de : {0.0, 0.7, 3.0}) {
      const CumulantSet c = cumulant_expansion(build_rwa_qubit(om, de, gamma));
      const double ref = oracles::qubit_fano(om, de, gamma);
      CHECK(std::abs(c.fano() - ref) < 1e-8 * std::abs(ref));
      CHECK(c.lambda1() > 0.0);
      CHECK(c.lambda2() >= 0.0);
    }
  }
  // sub/super-Poissonian boundary
  const CumulantSet b = cumulant_expansion(build_rwa_qubit(1.3, std::sqrt(3.0) / 2.0, 1.0));
  CHECK(std::abs(b.fano() - 1.0) < 1e-9);
  // delta = 0, Omega = Gamma gives exactly 1/3
  const CumulantSet third = cumulant_expansion(build_rwa_qubit(1.0, 0.0, 1.0));
  CHECK(third.fano() == doctest::Approx(1.0 / 3.0).epsilon(1e-10));
}

TEST_CASE("oscillator cumulants are Poissonian") {
  const SystemModel m = build_rwa_oscillator(1.0, 0.05, 1.0, 0.1, 16);
  const CumulantSet c = cumulant_expansion(m);
  // lambda1 = Gamma |alpha|^2 nu with |alpha|^2 = 1 here
  CHECK(c.lambda1() == doctest::Approx(0.1).epsilon(1e-7));
  CHECK(std::abs(c.fano() - 1.0) < 1e-6);
}

TEST_CASE("dominant eigenvalue: stationarity at u = 0 and the oscillator closed form") {
  const SystemModel m = build_rwa_oscillator(1.0, 0.05, 1.0, 0.1, 14);
  CHECK(std::abs(dominant_eigenvalue_numeric(m, Complex(0.0))) < 1e-10);
  for (double u : {-1.0, -0.3, 0.5, 1.0}) {
    const Complex lam = dominant_eigenvalue_numeric(m, Complex(u));
    const Complex ref = oracles::oscillator_lambda(u, 1.0, 0.05, 1.0, 0.1);
    CHECK(std::abs(lam - ref) < 1e-6);
  }
}

TEST_CASE("finite differences of the numeric eigenvalue reproduce the expansion") {
  std::uniform_real_distribution<double> om_dist(0.3, 3.0), de_dist(0.0, 2.0);
  for (int rep = 0; rep < 3; ++rep) {
    const double om = om_dist(qfcs::testing::rng());
    const double de = de_dist(qfcs::testing::rng());
    const SystemModel m = build_rwa_qubit(om, de, 1.0);
    const CumulantSet c = cumulant_expansion(m);
    const double h = 1e-3;
    auto lam = [&](double u) { return dominant_eigenvalue_numeric(m, Complex(u)); };
    const Complex d1 = (-lam(2 * h) + 8.0 * lam(h) - 8.0 * lam(-h) + lam(-2 * h)) / (12.0 * h);
    const Complex d2 =
        (-lam(2 * h) + 16.0 * lam(h) - 30.0 * lam(0.0) + 16.0 * lam(-h) - lam(-2 * h)) /
        (12.0 * h * h);
    const double k1 = (-kI * d1).real();
    const double k2 = (-d2).real();
    CHECK(std::abs(k1 - c.lambda1()) < 1e-7 * std::max(1.0, std::abs(c.lambda1())));
    CHECK(std::abs(k2 - c.lambda2()) < 1e-7 * std::max(1.0, std::abs(c.lambda2())));
  }
}

TEST_CASE("identical qubits: counting tags are interchangeable") {
  const CumulantSet c = cumulant_expansion(build_coupled_qubits(5.0, 40.0, 1.0));
  REQUIRE(c.channels() == 2);
  CHECK(c.lambda1_ch[0] == doctest::Approx(c.lambda1_ch[1]).epsilon(1e-10));
  CHECK(c.lambda2_ch[0] == doctest::Approx(c.lambda2_ch[1]).epsilon(1e-10));
  CHECK(c.lambda1() > 0.0);
}

TEST_CASE("undriven equilibrium qubit has vanishing long-time rates") {
  const CumulantSet c = cumulant_expansion(build_undriven_qubit(1.0, 0.3, 2.0));
  CHECK(std::abs(c.lambda1()) < 1e-12);
  CHECK(std::abs(c.lambda2()) < 1e-12);
}

TEST_CASE("three-level g2 matches the damped-oscillation closed form") {
  const double gamma = 1.0, om = 5.0, wxx = 40.0;
  const double rabi = om * om / wxx;  // 0.625
  const SystemModel m = build_three_level(rabi, gamma);
  std::vector<double> grid;
  for (int i = 0; i <= 200; ++i) grid.push_back(10.0 * double(i) / 200.0 / gamma);
  const auto g2 = g2_correlator(m, grid);
  double worst = 0.0;
  for (size_t i = 0; i < grid.size(); ++i) {
    worst = std::max(worst, std::abs(g2[i] - oracles::avg_g2(grid[i], gamma, rabi)));
  }
  CHECK(worst < 1e-8);
  // x = Gamma/rabi = 1.6: pair emission gives g2(0) = 1 + (x^2 - 1)/2 = 1.78
  CHECK(g2.front() == doctest::Approx(1.78).epsilon(1e-10));
  // decorrelation at long times
  std::vector<double> late{60.0};
  CHECK(g2_correlator(m, late).front() == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("pair emission from the three-level steady state is possible") {
  const SystemModel m = build_three_level(0.625, 1.0);
  const OperatorMatrix rho = stationary_state(m);
  const OperatorMatrix& s = m.channels()[0].lowering_op;
  const OperatorMatrix twice = s * s * rho * s.adjoint() * s.adjoint();
  CHECK(twice.cwiseAbs().maxCoeff() > 1e-3);
}

TEST_CASE("coupled-qubit sweep structure") {
  SUBCASE("weak drive is Poissonian") {
    const CumulantSet c = cumulant_expansion(build_coupled_qubits(0.01, 1.0, 1.0));
    CHECK(c.fano() == doctest::Approx(1.0).epsilon(1e-3));
  }
  SUBCASE("frozen regression values at Omega = 5, omega_xx = 40, Gamma = 1") {
    const CumulantSet c = cumulant_expansion(build_coupled_qubits(5.0, 40.0, 1.0));
    // regression pins for this implementation
    CHECK(c.fano() == doctest::Approx(0.930223).epsilon(1e-4));
    CHECK(c.fano_single() == doctest::Approx(0.965172).epsilon(1e-4));
    CHECK(c.lambda12 < 0.0);
  }
  SUBCASE("cross-correlation peaks at the level crossing") {
    for (double om : {5.0, 10.0}) {
      const double line = om / std::sqrt(2.0);
      auto c12 = [&](double wxx) {
        return cumulant_expansion(build_coupled_qubits(om, wxx, 1.0)).lambda12;
      };
      const double at = c12(line);
      CHECK(at > c12(0.8 * line));
      CHECK(at > c12(1.2 * line));
    }
  }
  SUBCASE("sweep grid runs and flags the entangled region") {
    const std::vector<double> oms{1.0, 5.0, 10.0};
    const std::vector<double> xxs{0.5, 5.0, 30.0};
    const auto grid = sweep_fano(oms, xxs, 1.0, 2);
    REQUIRE(grid.size() == 9);
    for (const auto& p : grid) {
      CHECK(p.ok);
      CHECK(p.entangled == (p.omega_xx > p.omega * p.omega / 2.0));
      if (p.fano_double > 1.0) CHECK(p.entangled);
    }
  }
}

TEST_CASE("g2 requires a static model") {
  const SystemModel m = build_driven_qubit(1.0, 0.05, 1.0, 0.007, 2.0);
  const std::vector<double> grid{0.0, 1.0};
  CHECK_THROWS_AS(g2_correlator(m, grid), PreconditionError);
  CHECK_THROWS_AS(cumulant_expansion(m), PreconditionError);
  CHECK_THROWS_AS(dominant_eigenvalue_numeric(m, Complex(0.1)), PreconditionError);
}
