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

#include "qfcs/oracles.hpp"

#include <cmath>

namespace qfcs::oracles {

namespace {
constexpr Complex kI{0.0, 1.0};
}

double oscillator_occupation(double omega, double omega_d, double nu, double gamma) {
  const double delta = nu - omega_d;
  return 4.0 * omega * omega / (gamma * gamma + 4.0 * delta * delta);
}

Complex oscillator_lambda(Complex u, double nu, double omega, double omega_d, double gamma) {
  const double occ = oscillator_occupation(omega, omega_d, nu, gamma);
  return gamma * occ * (std::exp(kI * u * nu) - 1.0);
}

double qubit_fano(double omega, double delta, double gamma) {
  const double den = gamma * gamma + 2.0 * omega * omega + 4.0 * delta * delta;
  return 1.0 - 2.0 * omega * omega * (3.0 * gamma * gamma - 4.0 * delta * delta) / (den * den);
}

double avg_g2(double t, double gamma, double rabi) {
  const double x = gamma / rabi;
  return 1.0 + std::exp(-gamma * t) *
                   ((x * x - 1.0) / 2.0 * std::cos(rabi * t) - x * std::sin(rabi * t));
}

Complex undriven_qubit_heat_gf(Complex u, double t, double nu, double gamma, double beta) {
  const double ch = std::cosh(beta * nu);
  const Complex steady = (std::cos(u * nu) + ch) / (1.0 + ch);
  const double rate = (std::exp(-beta * nu) + 1.0) * gamma;
  const Complex eiu = std::exp(kI * u * nu);
  const double den = std::exp(beta * nu) + 1.0;
  const Complex transient = std::exp((beta - kI * u) * nu) * (eiu - 1.0) * (eiu - 1.0) / (den * den);
  return steady - std::exp(-rate * t) * transient;
}

double undriven_qubit_heat_variance(double t, double nu, double gamma, double beta) {
  const double rate = (std::exp(-beta * nu) + 1.0) * gamma;
  return nu * nu * (1.0 - std::exp(-rate * t)) / (1.0 + std::cosh(beta * nu));
}

double poisson_weight(int n, double x) {
  double logp = -x + double(n) * std::log(x);
  for (int k = 2; k <= n; ++k) logp -= std::log(double(k));
  return std::exp(logp);
}

}  // namespace qfcs::oracles
