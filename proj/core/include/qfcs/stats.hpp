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

#ifndef QFCS_STATS_HPP
#define QFCS_STATS_HPP

#include <array>
#include <functional>
#include <span>
#include <vector>

#include "qfcs/evolve.hpp"
#include "qfcs/types.hpp"

namespace qfcs {

// Probabilities on the uniform energy lattice m*spacing, m in [m_min, m_min+size).
struct EnergyDistribution {
  double spacing = 1.0;
  int m_min = 0;
  std::vector<double> probabilities;

  int size() const { return static_cast<int>(probabilities.size()); }
  double energy(int i) const { return (m_min + i) * spacing; }
  // P at lattice index m; 0 outside the stored window.
  double at_m(int m) const;
  double total() const;
};

struct MomentSet {
  double mean = 0.0;
  double variance = 0.0;
};

struct InversionOptions {
  double imag_tol = 1e-6;        // residual imaginary parts above this are an error
  double negativity_tol = 1e-6;  // inversion noise below -tol is an error; above it is clipped
  double sum_tol = 1e-6;
};

// The u_k = -pi/spacing + 2 pi k/(N spacing), k = 0..N-1 sampling grid.
std::vector<Complex> counting_grid(double spacing, int n);

// P(m spacing) = (1/N) sum_k G(u_k) e^{-i u_k m spacing}, m in [-N/2, N/2).
// Requires the matching uniform grid (power-of-two N); validates imaginary
// residues, normalization and negativity, then clips and renormalizes.
EnergyDistribution invert_distribution(std::span<const Complex> gf_samples,
                                       std::span<const Complex> u_grid, double spacing,
                                       const InversionOptions& opts = {});

// Adaptive variant: doubles N (from n0, up to max_n) until the outermost bins
// carry less than boundary_mass per side.
EnergyDistribution invert_adaptive(const std::function<Complex(Complex)>& gf, double spacing,
                                   int n0, double boundary_mass = 1e-8, int max_n = 4096,
                                   const InversionOptions& opts = {});

MomentSet distribution_moments(const EnergyDistribution& p);

// tanh(beta nu / 2) * variance / (nu * mean).
double moment_ratio(const MomentSet& m, double beta, double nu);

// kappa_1 = -i d/du ln G |_0 and kappa_2 = -d^2/du^2 ln G |_0 by 5-point
// central differences at steps h and h/2 with Richardson refinement; throws
// NumericalError when the two step sizes disagree beyond instability_tol
// relative to max(|result|, noise_floor).
MomentSet cumulants_from_gf(const std::function<Complex(double)>& gf, double h = 0.05,
                            double instability_tol = 1e-4, double noise_floor = 1e-7);

// Same scheme on pre-sampled values at u = {-2h, -h, -h/2, 0, +h/2, +h, +2h}.
MomentSet cumulants_from_nodes(const std::array<Complex, 7>& g, double h,
                               double instability_tol = 1e-4, double noise_floor = 1e-7);

// |G_w(i beta, t) - 1|.
double check_jarzynski(const SystemModel& model, double t, const PropagationOptions& opts = {});

// max over lattice points with both P(w) and P_rev(-w) above p_floor of
// |ln[P(w)/P_rev(-w)] - beta w|.
double check_crooks(const EnergyDistribution& fwd, const EnergyDistribution& rev, double beta,
                    double p_floor = 1e-6);

// max_u |G_w(u,t) - G^tr_w(i beta - u, t)| over the given real u set.
// Requires H(0) = H(t) and finite beta.
double check_symmetry(const SystemModel& model, double t, std::span<const double> u_set,
                      const PropagationOptions& opts = {});

}  // namespace qfcs

#endif  // QFCS_STATS_HPP
