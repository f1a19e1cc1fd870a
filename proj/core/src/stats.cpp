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

#include "qfcs/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "qfcs/linop.hpp"

namespace qfcs {

namespace {
constexpr Complex kI{0.0, 1.0};

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }
}  // namespace

double EnergyDistribution::at_m(int m) const {
  const int i = m - m_min;
  if (i < 0 || i >= size()) return 0.0;
  return probabilities[size_t(i)];
}

double EnergyDistribution::total() const {
  double s = 0.0;
  for (double p : probabilities) s += p;
  return s;
}

std::vector<Complex> counting_grid(double spacing, int n) {
  if (spacing <= 0) throw PreconditionError("counting_grid: spacing must be positive");
  if (!is_power_of_two(n)) throw PreconditionError("counting_grid: N must be a power of two");
  std::vector<Complex> u(static_cast<size_t>(n));
  const double pi = std::numbers::pi;
  for (int k = 0; k < n; ++k) {
    u[size_t(k)] = -pi / spacing + 2.0 * pi * double(k) / (double(n) * spacing);
  }
  return u;
}

EnergyDistribution invert_distribution(std::span<const Complex> gf_samples,
                                       std::span<const Complex> u_grid, double spacing,
                                       const InversionOptions& opts) {
  const int n = static_cast<int>(gf_samples.size());
  if (u_grid.size() != gf_samples.size()) {
    throw DimensionError("invert_distribution: sample/grid length mismatch");
  }
  if (!is_power_of_two(n)) {
    throw PreconditionError("invert_distribution: N must be a power of two");
  }
  const auto ref = counting_grid(spacing, n);
  for (int k = 0; k < n; ++k) {
    if (std::abs(u_grid[size_t(k)] - ref[size_t(k)]) > 1e-9) {
      throw PreconditionError("invert_distribution: non-uniform or mismatched u grid");
    }
  }

  EnergyDistribution dist;
  dist.spacing = spacing;
  dist.m_min = -n / 2;
  dist.probabilities.resize(size_t(n));
  double max_imag = 0.0, min_real = 0.0, sum = 0.0;
  for (int i = 0; i < n; ++i) {
    const int m = dist.m_min + i;
    Complex acc = 0.0;
    for (int k = 0; k < n; ++k) {
      acc += gf_samples[size_t(k)] * std::exp(-kI * ref[size_t(k)] * (double(m) * spacing));
    }
    acc /= double(n);
    max_imag = std::max(max_imag, std::abs(acc.imag()));
    min_real = std::min(min_real, acc.real());
    sum += acc.real();
    dist.probabilities[size_t(i)] = acc.real();
  }
  if (max_imag > opts.imag_tol) {
    throw NumericalError("invert_distribution: imaginary residue " + std::to_string(max_imag));
  }
  if (min_real < -opts.negativity_tol) {
    throw NumericalError("invert_distribution: negative probability " + std::to_string(min_real));
  }
  if (std::abs(sum - 1.0) > opts.sum_tol) {
    throw NumericalError("invert_distribution: normalization " + std::to_string(sum));
  }
  double clipped_sum = 0.0;
  for (double& p : dist.probabilities) {
    if (p < 0.0) p = 0.0;
    clipped_sum += p;
  }
  for (double& p : dist.probabilities) p /= clipped_sum;
  return dist;
}

EnergyDistribution invert_adaptive(const std::function<Complex(Complex)>& gf, double spacing,
                                   int n0, double boundary_mass, int max_n,
                                   const InversionOptions& opts) {
  int n = n0;
  for (;;) {
    const auto grid = counting_grid(spacing, n);
    std::vector<Complex> samples(grid.size());
    for (size_t k = 0; k < grid.size(); ++k) samples[k] = gf(grid[k]);
    EnergyDistribution dist = invert_distribution(samples, grid, spacing, opts);
    const auto& p = dist.probabilities;
    double edge = std::max(p.front(), p.back());
    if (p.size() >= 4) edge = std::max(edge, std::max(p[1], p[p.size() - 2]));
    if (edge < boundary_mass || n >= max_n) return dist;
    n *= 2;
  }
}

MomentSet distribution_moments(const EnergyDistribution& dist) {
  double mean = 0.0, second = 0.0;
  for (int i = 0; i < dist.size(); ++i) {
    const double e = dist.energy(i);
    mean += e * dist.probabilities[size_t(i)];
    second += e * e * dist.probabilities[size_t(i)];
  }
  return MomentSet{mean, second - mean * mean};
}

double moment_ratio(const MomentSet& m, double beta, double nu) {
  return std::tanh(beta * nu / 2.0) * m.variance / (nu * m.mean);
}

namespace {

struct Stencil {
  Complex d1, d2;
};

// 5-point central first/second derivatives from ln G at {0, +-h, +-2h}.
Stencil five_point(Complex fm2, Complex fm, Complex f0, Complex fp, Complex fp2, double h) {
  Stencil s;
  s.d1 = (-fp2 + 8.0 * fp - 8.0 * fm + fm2) / (12.0 * h);
  s.d2 = (-fp2 + 16.0 * fp - 30.0 * f0 + 16.0 * fm - fm2) / (12.0 * h * h);
  return s;
}

}  // namespace

MomentSet cumulants_from_nodes(const std::array<Complex, 7>& g, double h, double instability_tol,
                               double noise_floor) {
  std::array<Complex, 7> f;
  for (size_t i = 0; i < 7; ++i) f[i] = std::log(g[i]);
  // node order: -2h, -h, -h/2, 0, +h/2, +h, +2h
  const Stencil a = five_point(f[0], f[1], f[3], f[5], f[6], h);
  const Stencil b = five_point(f[1], f[2], f[3], f[4], f[5], h / 2.0);
  // Richardson refinement of an O(h^4) scheme.
  const Complex d1 = (16.0 * b.d1 - a.d1) / 15.0;
  const Complex d2 = (16.0 * b.d2 - a.d2) / 15.0;
  const double dev1 = std::abs(b.d1 - a.d1) / std::max(std::abs(d1), noise_floor);
  const double dev2 = std::abs(b.d2 - a.d2) / std::max(std::abs(d2), noise_floor);
  if (dev1 > instability_tol || dev2 > instability_tol) {
    throw NumericalError("cumulants_from_gf: difference scheme unstable (rel dev " +
                         std::to_string(std::max(dev1, dev2)) + ")");
  }
  const Complex k1 = -kI * d1;
  const Complex k2 = -d2;
  return MomentSet{k1.real(), k2.real()};
}

MomentSet cumulants_from_gf(const std::function<Complex(double)>& gf, double h,
                            double instability_tol, double noise_floor) {
  const std::array<Complex, 7> g{gf(-2.0 * h), gf(-h), gf(-h / 2.0), gf(0.0),
                                 gf(h / 2.0),  gf(h),  gf(2.0 * h)};
  return cumulants_from_nodes(g, h, instability_tol, noise_floor);
}

double check_jarzynski(const SystemModel& model, double t, const PropagationOptions& opts) {
  if (model.zero_temperature()) {
    throw PreconditionError("check_jarzynski: requires finite beta");
  }
  const GFSample g = generating_function_work(model, kI * model.beta(), t, opts);
  return std::abs(g.value - 1.0);
}

double check_crooks(const EnergyDistribution& fwd, const EnergyDistribution& rev, double beta,
                    double p_floor) {
  if (std::abs(fwd.spacing - rev.spacing) > 1e-12) {
    throw PreconditionError("check_crooks: lattice spacing mismatch");
  }
  double worst = 0.0;
  bool any = false;
  for (int i = 0; i < fwd.size(); ++i) {
    const int m = fwd.m_min + i;
    const double p = fwd.probabilities[size_t(i)];
    const double pr = rev.at_m(-m);
    if (p <= p_floor || pr <= p_floor) continue;
    any = true;
    const double w = double(m) * fwd.spacing;
    worst = std::max(worst, std::abs(std::log(p / pr) - beta * w));
  }
  if (!any) throw NumericalError("check_crooks: no lattice point above the probability floor");
  return worst;
}

double check_symmetry(const SystemModel& model, double t, std::span<const double> u_set,
                      const PropagationOptions& opts) {
  if (model.zero_temperature()) {
    throw PreconditionError("check_symmetry: requires finite beta");
  }
  const OperatorMatrix h0 = model.hamiltonian_at(0.0);
  const OperatorMatrix ht = model.hamiltonian_at(t);
  const double scale = std::max(1.0, h0.cwiseAbs().maxCoeff());
  if ((h0 - ht).cwiseAbs().maxCoeff() > 1e-10 * scale) {
    throw PreconditionError("check_symmetry: requires H(0) = H(t)");
  }
  double worst = 0.0;
  for (double u : u_set) {
    const Complex fwd = generating_function_work(model, u, t, opts).value;
    const Complex rev =
        generating_function_work_reversed(model, kI * model.beta() - u, t, opts).value;
    worst = std::max(worst, std::abs(fwd - rev));
  }
  return worst;
}

}  // namespace qfcs
