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

#ifndef QFCS_ORACLES_HPP
#define QFCS_ORACLES_HPP

#include "qfcs/types.hpp"

// Closed-form reference results used to verify the numerical engine. These are
// implemented from scalar math only, independent of the solver code paths, so
// a disagreement points at the engine rather than at shared plumbing.
namespace qfcs::oracles {

// Steady coherent occupation |alpha|^2 = 4 Omega^2 / (Gamma^2 + 4 (nu-omega_d)^2)
// of the damped driven oscillator.
double oscillator_occupation(double omega, double omega_d, double nu, double gamma);

// Dominant eigenvalue lambda(u) = Gamma |alpha|^2 (e^{i u nu} - 1) of the
// driven oscillator's dressed generator.
Complex oscillator_lambda(Complex u, double nu, double omega, double omega_d, double gamma);

// Single-qubit photon-count Fano factor
//   F = 1 - 2 Omega^2 (3 Gamma^2 - 4 delta^2) / (Gamma^2 + 2 Omega^2 + 4 delta^2)^2.
double qubit_fano(double omega, double delta, double gamma);

// Oscillation-averaged intensity correlation of the three-level reduction:
//   <g2>(t) = 1 + e^{-Gamma t} [ (x^2-1)/2 cos(rabi t) - x sin(rabi t) ],  x = Gamma/rabi.
double avg_g2(double t, double gamma, double rabi);

// Heat generating function of the undriven qubit at inverse temperature beta:
//   G_Q(u,t) = [cos(u nu) + cosh(beta nu)] / [1 + cosh(beta nu)]
//            - e^{-(e^{-beta nu}+1) Gamma t} e^{(beta - i u) nu} (e^{i u nu}-1)^2 / (e^{beta nu}+1)^2.
Complex undriven_qubit_heat_gf(Complex u, double t, double nu, double gamma, double beta);

// Second derivative of the above at u = 0: the heat variance
//   Var Q(t) = nu^2 (1 - e^{-(1+e^{-beta nu}) Gamma t}) / (1 + cosh(beta nu)).
double undriven_qubit_heat_variance(double t, double nu, double gamma, double beta);

// Poisson weights x^n e^{-x}/n!.
double poisson_weight(int n, double x);

}  // namespace qfcs::oracles

#endif  // QFCS_ORACLES_HPP
