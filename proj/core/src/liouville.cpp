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

#include "qfcs/liouville.hpp"

#include <cmath>
#include <string>

#include <Eigen/SVD>

#include "qfcs/linop.hpp"

namespace qfcs {

namespace {
constexpr Complex kI{0.0, 1.0};
}

Complex CountingField::at(int tag) const {
  if (tag < 0 || tag >= size()) {
    throw PreconditionError("CountingField: counting field shorter than channel tag " +
                            std::to_string(tag));
  }
  return values[tag];
}

DressedGenerator::DressedGenerator(const SystemModel& model, const CountingField& u,
                                   bool time_reversed)
    : dim_(model.dim()),
      commutator_sign_(time_reversed ? kI : -kI),
      model_(&model) {
  if (u.size() < model.counting_dim()) {
    throw PreconditionError("DressedGenerator: counting field shorter than channel tags");
  }
  damping_ = OperatorMatrix::Zero(dim_, dim_);
  for (const auto& ch : model.channels()) {
    Channel c;
    c.s = ch.lowering_op;
    c.s_dag = ch.lowering_op.adjoint();
    const double gm = ch.down_rate;
    const double gp = model.up_rate(ch);
    const Complex uj = u.at(ch.counting_tag);
    c.f_minus = gm * std::exp(kI * uj * ch.transition_energy);
    c.f_plus = gp * std::exp(-kI * uj * ch.transition_energy);
    damping_ += 0.5 * (gm * (c.s_dag * c.s) + gp * (c.s * c.s_dag));
    channels_.push_back(std::move(c));
  }
  h_buf_.resize(dim_, dim_);
  t1_.resize(dim_, dim_);
}

void DressedGenerator::hamiltonian_at(double t, OperatorMatrix& h) const {
  h = model_->static_hamiltonian();
  for (const auto& d : model_->drives()) {
    const double td = d.stop_time ? std::min(t, *d.stop_time) : t;
    if (d.form == DriveForm::kCosine) {
      h += d.amplitude * std::cos(d.frequency * td + d.phase) * d.op;
    } else {
      const Complex ph = std::exp(-kI * (d.frequency * td + d.phase));
      h += d.amplitude * (ph * d.op);
      h += d.amplitude * (std::conj(ph) * d.op.adjoint());
    }
  }
}

void DressedGenerator::apply(double t, const OperatorMatrix& rho, OperatorMatrix& out) {
  hamiltonian_at(t, h_buf_);
  out.noalias() = commutator_sign_ * (h_buf_ * rho);
  out.noalias() -= commutator_sign_ * (rho * h_buf_);
  out.noalias() -= damping_ * rho;
  out.noalias() -= rho * damping_;
  for (const auto& c : channels_) {
    if (c.f_minus != 0.0) {
      t1_.noalias() = c.s * rho;
      out.noalias() += c.f_minus * (t1_ * c.s_dag);
    }
    if (c.f_plus != 0.0) {
      t1_.noalias() = c.s_dag * rho;
      out.noalias() += c.f_plus * (t1_ * c.s);
    }
  }
}

SuperOperator DressedGenerator::matrix(double t) const {
  OperatorMatrix h(dim_, dim_);
  hamiltonian_at(t, h);
  SuperOperator a = commutator_sign_ * commutator_superop(h);
  a -= anticommutator_superop(damping_);
  for (const auto& c : channels_) {
    if (c.f_minus != 0.0) a += c.f_minus * sandwich_superop(c.s, c.s_dag);
    if (c.f_plus != 0.0) a += c.f_plus * sandwich_superop(c.s_dag, c.s);
  }
  return a;
}

SuperOperator assemble(const SystemModel& model, const CountingField& u, double t) {
  return DressedGenerator(model, u, false).matrix(t);
}

SuperOperator assemble_time_reversed(const SystemModel& model, const CountingField& u,
                                     double t) {
  return DressedGenerator(model, u, true).matrix(t);
}

OperatorMatrix stationary_state(const SystemModel& model) {
  if (!model.is_static()) {
    throw PreconditionError("stationary_state: model must be static");
  }
  const SuperOperator a0 = assemble(model, CountingField::zero(model.counting_dim()), 0.0);
  Eigen::JacobiSVD<SuperOperator> svd(a0, Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  const double tol = sv(0) * 1e-10 * double(a0.rows());
  int kernel_dim = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) <= tol) ++kernel_dim;
  }
  if (kernel_dim != 1) {
    throw DegenerateKernelError(kernel_dim, "stationary_state: Liouvillian kernel dimension is " +
                                                std::to_string(kernel_dim));
  }
  OperatorMatrix rho = devectorize(svd.matrixV().col(sv.size() - 1));
  rho = 0.5 * (rho + rho.adjoint()).eval();
  const double tr = rho.trace().real();
  if (std::abs(tr) < 1e-14) throw NumericalError("stationary_state: traceless kernel vector");
  rho /= tr;
  const double min_eig = min_eigenvalue_hermitian(rho);
  if (min_eig < -1e-9) {
    throw NumericalError("stationary_state: negative population " + std::to_string(min_eig));
  }
  return rho;
}

}  // namespace qfcs
