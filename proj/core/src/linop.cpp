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

#include "qfcs/linop.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>

namespace qfcs {

OperatorMatrix kron(const OperatorMatrix& a, const OperatorMatrix& b) {
  if (a.rows() != a.cols() || b.rows() != b.cols()) {
    throw DimensionError("kron: inputs must be square");
  }
  const Eigen::Index n = a.rows(), m = b.rows();
  OperatorMatrix out(n * m, n * m);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      out.block(i * m, j * m, m, m) = a(i, j) * b;
    }
  }
  return out;
}

ComplexVector vectorize(const OperatorMatrix& rho) {
  if (rho.rows() != rho.cols()) {
    throw DimensionError("vectorize: input must be square");
  }
  // Eigen matrices are column-major, so the raw storage is the column stacking.
  return Eigen::Map<const ComplexVector>(rho.data(), rho.size());
}

OperatorMatrix devectorize(const ComplexVector& v) {
  const auto d = static_cast<Eigen::Index>(std::llround(std::sqrt(double(v.size()))));
  if (d * d != v.size()) {
    throw DimensionError("devectorize: length is not a perfect square");
  }
  return Eigen::Map<const OperatorMatrix>(v.data(), d, d);
}

SuperOperator sandwich_superop(const OperatorMatrix& a, const OperatorMatrix& b) {
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows()) {
    throw DimensionError("sandwich_superop: dimension mismatch");
  }
  return kron(b.transpose(), a);
}

SuperOperator commutator_superop(const OperatorMatrix& h) {
  const Eigen::Index d = h.rows();
  const OperatorMatrix id = OperatorMatrix::Identity(d, d);
  return kron(id, h) - kron(h.transpose(), id);
}

SuperOperator anticommutator_superop(const OperatorMatrix& x) {
  const Eigen::Index d = x.rows();
  const OperatorMatrix id = OperatorMatrix::Identity(d, d);
  return kron(id, x) + kron(x.transpose(), id);
}

double hermiticity_error(const OperatorMatrix& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

bool is_hermitian(const OperatorMatrix& m, double tol) {
  return hermiticity_error(m) <= tol;
}

OperatorMatrix hermitian_exponential_factor(const OperatorMatrix& h, Complex z) {
  const double scale = std::max(1.0, h.cwiseAbs().maxCoeff());
  if (hermiticity_error(h) > 1e-10 * scale) {
    throw PreconditionError("hermitian_exponential_factor: input is not Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<OperatorMatrix> es(h);
  const Eigen::VectorXd w = es.eigenvalues();
  ComplexVector phases(w.size());
  for (Eigen::Index i = 0; i < w.size(); ++i) phases(i) = std::exp(z * w(i));
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

double min_eigenvalue_hermitian(const OperatorMatrix& m) {
  Eigen::SelfAdjointEigenSolver<OperatorMatrix> es(m);
  return es.eigenvalues().minCoeff();
}

OperatorMatrix gibbs_state(const OperatorMatrix& h, double beta) {
  const double scale = std::max(1.0, h.cwiseAbs().maxCoeff());
  if (hermiticity_error(h) > 1e-10 * scale) {
    throw PreconditionError("gibbs_state: Hamiltonian is not Hermitian");
  }
  if (beta < 0) throw PreconditionError("gibbs_state: beta must be >= 0");
  Eigen::SelfAdjointEigenSolver<OperatorMatrix> es(h);
  const Eigen::VectorXd w = es.eigenvalues();
  Eigen::VectorXd p(w.size());
  const double w0 = w.minCoeff();
  if (std::isinf(beta)) {
    for (Eigen::Index i = 0; i < w.size(); ++i) p(i) = (w(i) - w0 < 1e-12) ? 1.0 : 0.0;
  } else {
    for (Eigen::Index i = 0; i < w.size(); ++i) p(i) = std::exp(-beta * (w(i) - w0));
  }
  p /= p.sum();
  return es.eigenvectors() * p.cast<Complex>().asDiagonal() * es.eigenvectors().adjoint();
}

OperatorMatrix snap_spectrum(const OperatorMatrix& h, double spacing, double reference) {
  if (spacing <= 0) throw PreconditionError("snap_spectrum: spacing must be positive");
  Eigen::SelfAdjointEigenSolver<OperatorMatrix> es(h);
  const Eigen::VectorXd w = es.eigenvalues();
  ComplexVector snapped(w.size());
  for (Eigen::Index i = 0; i < w.size(); ++i) {
    snapped(i) = reference + std::round((w(i) - reference) / spacing) * spacing;
  }
  return es.eigenvectors() * snapped.asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace qfcs
