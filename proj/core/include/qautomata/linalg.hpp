// Copyright 2026 The qautomata Authors
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

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

namespace qautomata {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

/**
 * A subspace of C^n stored as an orthonormal column basis.
 *
 * The zero subspace is an ordinary value: its basis has n rows and no
 * columns.
 */
class Subspace {
 public:
  /// Zero subspace of C^0.
  Subspace() = default;

  /// Wraps a basis whose columns are orthonormal to 1e-10; throws
  /// InvalidInput otherwise.
  explicit Subspace(ComplexMatrix orthonormal_basis);

  static Subspace zero(Index ambient_dim);
  static Subspace full(Index ambient_dim);

  Index ambient_dim() const { return basis_.rows(); }
  Index dim() const { return basis_.cols(); }
  bool is_zero() const { return basis_.cols() == 0; }
  const ComplexMatrix& basis() const { return basis_; }

  /// Orthogonal projector B B^†.
  ComplexMatrix projector() const;

 private:
  ComplexMatrix basis_;
};

enum class SubspaceRelation { kContained, kOrthogonal, kNeither, kEqual };

const char* to_string(SubspaceRelation relation);

struct EigenDecomposition {
  RealVector values;     // ascending
  ComplexMatrix vectors; // columns, unitary
};

/// Eigendecomposition of a Hermitian matrix. Throws NonHermitian when
/// ‖M − M^†‖_max exceeds 1e-9 (scaled by ‖M‖_max when that is above one) and
/// ConvergenceFailure if the solver gives up.
EigenDecomposition hermitian_eig(const ComplexMatrix& m);

/// Rank-revealing orthonormal basis of the column span of `columns`.
/// Directions with singular value ≤ tol·σ_max are dropped.
Subspace orthonormal_span(const ComplexMatrix& columns, double tol);

/// Same, for a list of vectors. Throws EmptyInput on an empty list and
/// DimensionMismatch when the vectors disagree in length.
Subspace orthonormal_span(const std::vector<ComplexVector>& vectors, double tol);

/// Span of the union of two subspaces of the same ambient space.
Subspace span_union(const Subspace& a, const Subspace& b, double tol);

/**
 * Classifies V against W.
 *
 * contained  iff ‖(I − P_W) P_V‖₂ ≤ tol,
 * orthogonal iff ‖P_W P_V‖₂ ≤ tol,
 * equal      iff V ⊆ W and W ⊆ V.
 *
 * Equal takes precedence over contained, which takes precedence over
 * orthogonal (the zero subspace is both contained in and orthogonal to
 * everything).
 */
SubspaceRelation subspace_relation(const Subspace& v, const Subspace& w, double tol);

bool is_contained(const Subspace& v, const Subspace& w, double tol);
bool is_orthogonal(const Subspace& v, const Subspace& w, double tol);

/// Eigenvalue-1 eigenspace of a square matrix: the null space of M − I from
/// an SVD, keeping singular values ≤ tol·max(1, ‖M‖₂).
Subspace eigenspace_one(const ComplexMatrix& m, double tol);

/// Null space of a (not necessarily square) matrix; singular values
/// ≤ tol·max(1, σ_max) count as zero.
Subspace null_space(const ComplexMatrix& m, double tol);

Subspace orthogonal_complement(const Subspace& v);

/// Range of a positive semidefinite matrix: eigenvectors whose eigenvalue
/// exceeds rel_cutoff times the largest eigenvalue.
Subspace support(const ComplexMatrix& psd, double rel_cutoff);

double spectral_norm(const ComplexMatrix& m);
double max_abs(const ComplexMatrix& m);
bool all_finite(const ComplexMatrix& m);

/// Column-stacking vectorisation: vec(X)[i + n*j] = X(i, j).
ComplexVector vec(const ComplexMatrix& x);
ComplexMatrix unvec(const ComplexVector& v, Index rows);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Unitary factor of the polar decomposition M = U P.
ComplexMatrix polar_unitary(const ComplexMatrix& m);

}  // namespace qautomata
