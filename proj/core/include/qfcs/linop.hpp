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

#ifndef QFCS_LINOP_HPP
#define QFCS_LINOP_HPP

#include "qfcs/types.hpp"

namespace qfcs {

// Tensor product with the standard layout: (A kron B)(i*p+k, j*q+l) = A(i,j)B(k,l).
OperatorMatrix kron(const OperatorMatrix& a, const OperatorMatrix& b);

// Column-stacking vectorization, vec(rho)[i + j*D] = rho(i, j).
// All superoperator builders in this library use this convention.
ComplexVector vectorize(const OperatorMatrix& rho);
OperatorMatrix devectorize(const ComplexVector& v);

// Superoperator of rho -> A rho B: kron(B^T, A) in the column-stacking convention.
SuperOperator sandwich_superop(const OperatorMatrix& a, const OperatorMatrix& b);

// Superoperator of rho -> [H, rho].
SuperOperator commutator_superop(const OperatorMatrix& h);

// Superoperator of rho -> {X, rho}.
SuperOperator anticommutator_superop(const OperatorMatrix& x);

// exp(z*H) for Hermitian H via eigendecomposition; rejects non-Hermitian input.
OperatorMatrix hermitian_exponential_factor(const OperatorMatrix& h, Complex z);

// Max abs deviation from M = M^dagger.
double hermiticity_error(const OperatorMatrix& m);
bool is_hermitian(const OperatorMatrix& m, double tol = 1e-12);

double min_eigenvalue_hermitian(const OperatorMatrix& m);

// exp(-beta H)/Tr exp(-beta H); beta = kInfiniteBeta gives the normalized
// projector onto the ground eigenspace.
OperatorMatrix gibbs_state(const OperatorMatrix& h, double beta);

// Spectrum of Hermitian H with each eigenvalue moved to the nearest point of
// the lattice reference + m*spacing. Used to accumulate near-lattice two-point
// measurement energies onto their nearest energy bin.
OperatorMatrix snap_spectrum(const OperatorMatrix& h, double spacing, double reference);

}  // namespace qfcs

#endif  // QFCS_LINOP_HPP
