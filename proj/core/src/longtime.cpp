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

#include "qfcs/longtime.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/MatrixFunctions>

#include "qfcs/linop.hpp"
#include "qfcs/parallel.hpp"

namespace qfcs {

namespace {

constexpr Complex kI{0.0, 1.0};

// First- and second-order terms of A_u along the counting direction s:
//   A1 = sum_j i s_j nu_j (G- K- - G+ K+),  A2 = -1/2 sum_j (s_j nu_j)^2 (G- K- + G+ K+),
// with K- = S . S^dag and K+ = S^dag . S sandwich superoperators.
struct DirectionalTerms {
  SuperOperator a1, a2;
};

DirectionalTerms directional_terms(const SystemModel& model, std::span<const double> direction) {
  const int d2 = model.dim() * model.dim();
  DirectionalTerms t{SuperOperator::Zero(d2, d2), SuperOperator::Zero(d2, d2)};
  for (const auto& ch : model.channels()) {
    const double s = direction[size_t(ch.counting_tag)];
    if (s == 0.0) continue;
    const double x = s * ch.transition_energy;
    const SuperOperator km = sandwich_superop(ch.lowering_op, ch.lowering_op.adjoint());
    t.a1 += kI * x * ch.down_rate * km;
    t.a2 += -0.5 * x * x * ch.down_rate * km;
    const double gp = model.up_rate(ch);
    if (gp != 0.0) {
      const SuperOperator kp = sandwich_superop(ch.lowering_op.adjoint(), ch.lowering_op);
      t.a1 += -kI * x * gp * kp;
      t.a2 += -0.5 * x * x * gp * kp;
    }
  }
  return t;
}

struct DirectionalCumulants {
  double kappa1, kappa2;
};

// Solvability-condition iteration along one counting direction.
DirectionalCumulants expand_direction(const SuperOperator& a0, const ComplexVector& rho_st_vec,
                                      const ComplexVector& trace_vec,
                                      const DirectionalTerms& terms) {
  const Complex lam1 = trace_vec.dot(terms.a1 * rho_st_vec);
  ComplexVector b = lam1 * rho_st_vec - terms.a1 * rho_st_vec;
  Eigen::CompleteOrthogonalDecomposition<SuperOperator> cod(a0);
  ComplexVector x = cod.solve(b);
  const double resid = (a0 * x - b).norm();
  if (resid > 1e-8 * std::max(1.0, b.norm())) {
    throw NumericalError("cumulant_expansion: singular projected solve, residual " +
                         std::to_string(resid));
  }
  // Gauge: Tr rho^(1) = 0.
  x -= trace_vec.dot(x) * rho_st_vec;
  const Complex lam2 = trace_vec.dot(terms.a2 * rho_st_vec + terms.a1 * x);
  const Complex k1 = -kI * lam1;
  const Complex k2 = -2.0 * lam2;
  const double scale = std::max({1.0, std::abs(k1), std::abs(k2)});
  if (std::abs(k1.imag()) > 1e-9 * scale || std::abs(k2.imag()) > 1e-9 * scale) {
    throw NumericalError("cumulant_expansion: cumulants acquired imaginary parts");
  }
  return DirectionalCumulants{k1.real(), k2.real()};
}

ComplexVector trace_functional(int dim) {
  // Row vector of vec(I); works as a dot() partner because its entries are real.
  return vectorize(OperatorMatrix::Identity(dim, dim));
}

}  // namespace

double CumulantSet::fano() const {
  double l1 = 0.0, l2 = 0.0;
  for (double v : lambda1_ch) l1 += v;
  for (double v : lambda2_ch) l2 += v;
  if (channels() == 2) l2 += 2.0 * lambda12;
  return l2 / (nu * l1);
}

double CumulantSet::fano_single() const { return lambda2() / (nu * lambda1()); }

CumulantSet cumulant_expansion(const SystemModel& model) {
  if (!model.is_static()) {
    throw PreconditionError("cumulant_expansion: model must be static");
  }
  const int tags = model.counting_dim();
  if (tags < 1 || tags > 2) {
    throw PreconditionError("cumulant_expansion: expected one or two counting tags");
  }
  const OperatorMatrix rho_st = stationary_state(model);
  const SuperOperator a0 = assemble(model, CountingField::zero(tags), 0.0);
  const ComplexVector rho_vec = vectorize(rho_st);
  const ComplexVector tr = trace_functional(model.dim());

  CumulantSet out;
  out.nu = model.channels().front().transition_energy;
  for (const auto& ch : model.channels()) {
    if (std::abs(ch.transition_energy - out.nu) > 1e-12) {
      throw PreconditionError("cumulant_expansion: channels must share a transition energy");
    }
  }

  std::vector<DirectionalCumulants> single(static_cast<size_t>(tags));
  for (int tag = 0; tag < tags; ++tag) {
    std::vector<double> dir(size_t(tags), 0.0);
    dir[size_t(tag)] = 1.0;
    single[size_t(tag)] =
        expand_direction(a0, rho_vec, tr, directional_terms(model, dir));
    out.lambda1_ch.push_back(single[size_t(tag)].kappa1);
    out.lambda2_ch.push_back(single[size_t(tag)].kappa2);
  }
  if (tags == 2) {
    const std::vector<double> both{1.0, 1.0};
    const DirectionalCumulants d = expand_direction(a0, rho_vec, tr, directional_terms(model, both));
    // Polarization: kappa2(1,1) = lambda2^(1) + lambda2^(2) + 2 lambda12.
    out.lambda12 = 0.5 * (d.kappa2 - single[0].kappa2 - single[1].kappa2);
  }
  return out;
}

Complex dominant_eigenvalue_numeric(const SystemModel& model, const CountingField& u) {
  if (!model.is_static()) {
    throw PreconditionError("dominant_eigenvalue_numeric: model must be static");
  }
  const SuperOperator a = assemble(model, u, 0.0);
  Eigen::ComplexEigenSolver<SuperOperator> es(a, /*computeEigenvectors=*/false);
  if (es.info() != Eigen::Success) {
    throw NumericalError("dominant_eigenvalue_numeric: eigensolver failed");
  }
  const auto& ev = es.eigenvalues();
  Eigen::Index best = 0;
  for (Eigen::Index i = 1; i < ev.size(); ++i) {
    if (ev(i).real() > ev(best).real()) best = i;
  }
  return ev(best);
}

Complex dominant_eigenvalue_numeric(const SystemModel& model, Complex u) {
  return dominant_eigenvalue_numeric(model,
                                     CountingField::uniform(u, std::max(1, model.counting_dim())));
}

std::vector<double> g2_correlator(const SystemModel& model, std::span<const double> t_grid,
                                  std::span<const int> channel_selection) {
  if (!model.is_static()) throw PreconditionError("g2_correlator: model must be static");
  std::vector<int> sel(channel_selection.begin(), channel_selection.end());
  if (sel.empty()) {
    sel.resize(model.channels().size());
    for (size_t i = 0; i < sel.size(); ++i) sel[i] = int(i);
  }
  const OperatorMatrix rho_st = stationary_state(model);
  const int d = model.dim();
  OperatorMatrix detect = OperatorMatrix::Zero(d, d);
  OperatorMatrix collapsed = OperatorMatrix::Zero(d, d);
  for (int idx : sel) {
    const auto& ch = model.channels().at(size_t(idx));
    detect += ch.down_rate * (ch.lowering_op.adjoint() * ch.lowering_op);
    collapsed += ch.down_rate * (ch.lowering_op * rho_st * ch.lowering_op.adjoint());
  }
  const double intensity = (detect * rho_st).trace().real();
  if (intensity <= 0.0) throw NumericalError("g2_correlator: zero stationary intensity");

  const SuperOperator a0 = assemble(model, CountingField::zero(model.counting_dim()), 0.0);
  std::vector<double> out(t_grid.size());
  std::map<double, SuperOperator> step_cache;
  ComplexVector v = vectorize(collapsed);
  double t_prev = 0.0;
  for (size_t i = 0; i < t_grid.size(); ++i) {
    const double gap = t_grid[i] - t_prev;
    if (gap < 0) throw PreconditionError("g2_correlator: grid must be ascending");
    if (gap > 0) {
      auto it = step_cache.find(gap);
      if (it == step_cache.end()) {
        it = step_cache.emplace(gap, SuperOperator((a0 * gap).exp())).first;
      }
      v = it->second * v;
    }
    out[i] = ((detect * devectorize(v)).trace() / (intensity * intensity)).real();
    t_prev = t_grid[i];
  }
  return out;
}

std::vector<SweepPoint> sweep_fano(std::span<const double> omegas,
                                   std::span<const double> omega_xxs, double gamma,
                                   int threads) {
  const int n_om = int(omegas.size());
  const int n_xx = int(omega_xxs.size());
  std::vector<SweepPoint> grid(size_t(n_om) * size_t(n_xx));
  parallel_for(n_om * n_xx, threads, [&](int idx) {
    const double om = omegas[size_t(idx / n_xx)];
    const double xx = omega_xxs[size_t(idx % n_xx)];
    SweepPoint& p = grid[size_t(idx)];
    p.omega = om;
    p.omega_xx = xx;
    p.entangled = xx > om * om / (2.0 * gamma);
    try {
      const SystemModel m = build_coupled_qubits(om, xx, gamma);
      const CumulantSet c = cumulant_expansion(m);
      p.fano_double = c.fano();
      p.fano_single = c.fano_single();
      p.c12_rate = c.lambda12 / (c.nu * c.nu * gamma);
      p.ok = true;
    } catch (const std::exception& e) {
      p.ok = false;
      p.error = e.what();
    }
  });
  return grid;
}

}  // namespace qfcs
