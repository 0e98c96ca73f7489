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

#include "qautomata/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qautomata/errors.hpp"

namespace qautomata {

namespace {

constexpr double kOrthonormalityTol = 1e-10;
constexpr double kHermitianTol = 1e-9;

void require_square(const ComplexMatrix& m, const char* what) {
  if (m.rows() != m.cols()) {
    throw DimensionMismatch(std::string(what) + ": matrix is " +
                            std::to_string(m.rows()) + "x" +
                            std::to_string(m.cols()) + ", expected square");
  }
}

}  // namespace

Subspace::Subspace(ComplexMatrix orthonormal_basis)
    : basis_(std::move(orthonormal_basis)) {
  if (basis_.cols() > basis_.rows()) {
    throw InvalidInput("Subspace: more basis vectors than ambient dimension");
  }
  if (basis_.cols() > 0) {
    const ComplexMatrix gram = basis_.adjoint() * basis_;
    const double err =
        max_abs(gram - ComplexMatrix::Identity(gram.rows(), gram.cols()));
    if (!(err <= kOrthonormalityTol)) {
      throw InvalidInput("Subspace: basis is not orthonormal (residual " +
                         std::to_string(err) + ")");
    }
  }
}

Subspace Subspace::zero(Index ambient_dim) {
  return Subspace(ComplexMatrix(ambient_dim, 0));
}

Subspace Subspace::full(Index ambient_dim) {
  return Subspace(ComplexMatrix::Identity(ambient_dim, ambient_dim));
}

ComplexMatrix Subspace::projector() const {
  return basis_ * basis_.adjoint();
}

const char* to_string(SubspaceRelation relation) {
  switch (relation) {
    case SubspaceRelation::kContained:
      return "contained";
    case SubspaceRelation::kOrthogonal:
      return "orthogonal";
    case SubspaceRelation::kNeither:
      return "neither";
    case SubspaceRelation::kEqual:
      return "equal";
  }
  return "unknown";
}

EigenDecomposition hermitian_eig(const ComplexMatrix& m) {
  require_square(m, "hermitian_eig");
  if (!all_finite(m)) throw InvalidInput("hermitian_eig: non-finite entry");
  const double scale = std::max(1.0, max_abs(m));
  const double asym = max_abs(m - m.adjoint());
  if (asym > kHermitianTol * scale) {
    throw NonHermitian("hermitian_eig: ‖M − M†‖_max = " + std::to_string(asym));
  }
  const ComplexMatrix sym = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
  if (solver.info() != Eigen::Success) {
    throw ConvergenceFailure("hermitian_eig: eigensolver did not converge");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

Subspace orthonormal_span(const ComplexMatrix& columns, double tol) {
  if (!(tol > 0)) throw InvalidInput("orthonormal_span: tol must be positive");
  const Index n = columns.rows();
  if (columns.cols() == 0 || n == 0) return Subspace::zero(n);
  Eigen::JacobiSVD<ComplexMatrix> svd(columns, Eigen::ComputeThinU);
  const RealVector& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) == 0.0) return Subspace::zero(n);
  Index rank = 0;
  while (rank < sv.size() && sv(rank) > tol * sv(0)) ++rank;
  return Subspace(svd.matrixU().leftCols(rank));
}

Subspace orthonormal_span(const std::vector<ComplexVector>& vectors, double tol) {
  if (vectors.empty()) throw EmptyInput("orthonormal_span: no vectors given");
  const Index n = vectors.front().size();
  ComplexMatrix cols(n, static_cast<Index>(vectors.size()));
  for (std::size_t k = 0; k < vectors.size(); ++k) {
    if (vectors[k].size() != n) {
      throw DimensionMismatch("orthonormal_span: vectors of different length");
    }
    cols.col(static_cast<Index>(k)) = vectors[k];
  }
  return orthonormal_span(cols, tol);
}

Subspace span_union(const Subspace& a, const Subspace& b, double tol) {
  if (a.ambient_dim() != b.ambient_dim()) {
    throw DimensionMismatch("span_union: ambient dimensions differ");
  }
  ComplexMatrix cols(a.ambient_dim(), a.dim() + b.dim());
  cols << a.basis(), b.basis();
  return orthonormal_span(cols, tol);
}

namespace {

// ‖(I − P_W) V‖₂ for orthonormal V.
double outside_residual(const Subspace& v, const Subspace& w) {
  if (v.is_zero()) return 0.0;
  const ComplexMatrix rest =
      v.basis() - w.basis() * (w.basis().adjoint() * v.basis());
  return spectral_norm(rest);
}

double overlap(const Subspace& v, const Subspace& w) {
  if (v.is_zero() || w.is_zero()) return 0.0;
  return spectral_norm(w.basis().adjoint() * v.basis());
}

void require_same_ambient(const Subspace& v, const Subspace& w) {
  if (v.ambient_dim() != w.ambient_dim()) {
    throw DimensionMismatch("subspace ambient dimensions differ: " +
                            std::to_string(v.ambient_dim()) + " vs " +
                            std::to_string(w.ambient_dim()));
  }
}

}  // namespace

bool is_contained(const Subspace& v, const Subspace& w, double tol) {
  require_same_ambient(v, w);
  return outside_residual(v, w) <= tol;
}

bool is_orthogonal(const Subspace& v, const Subspace& w, double tol) {
  require_same_ambient(v, w);
  return overlap(v, w) <= tol;
}

SubspaceRelation subspace_relation(const Subspace& v, const Subspace& w,
                                   double tol) {
  require_same_ambient(v, w);
  const bool v_in_w = outside_residual(v, w) <= tol;
  const bool w_in_v = outside_residual(w, v) <= tol;
  if (v_in_w && w_in_v) return SubspaceRelation::kEqual;
  if (v_in_w) return SubspaceRelation::kContained;
  if (overlap(v, w) <= tol) return SubspaceRelation::kOrthogonal;
  return SubspaceRelation::kNeither;
}

Subspace eigenspace_one(const ComplexMatrix& m, double tol) {
  require_square(m, "eigenspace_one");
  const Index n = m.rows();
  if (n == 0) return Subspace::zero(0);
  const double cutoff = tol * std::max(1.0, spectral_norm(m));
  const ComplexMatrix shifted = m - ComplexMatrix::Identity(n, n);
  Eigen::JacobiSVD<ComplexMatrix> svd(shifted, Eigen::ComputeFullV);
  const RealVector& sv = svd.singularValues();
  Index nullity = 0;
  for (Index k = sv.size() - 1; k >= 0 && sv(k) <= cutoff; --k) ++nullity;
  return Subspace(svd.matrixV().rightCols(nullity));
}

Subspace null_space(const ComplexMatrix& m, double tol) {
  const Index n = m.cols();
  if (m.rows() == 0) return Subspace::full(n);
  if (n == 0) return Subspace::zero(0);
  Eigen::JacobiSVD<ComplexMatrix> svd(m, Eigen::ComputeFullV);
  const RealVector& sv = svd.singularValues();
  const double cutoff = tol * std::max(1.0, sv.size() ? sv(0) : 0.0);
  Index rank = 0;
  while (rank < sv.size() && sv(rank) > cutoff) ++rank;
  return Subspace(svd.matrixV().rightCols(n - rank));
}

Subspace orthogonal_complement(const Subspace& v) {
  const Index n = v.ambient_dim();
  if (v.is_zero()) return Subspace::full(n);
  if (v.dim() == n) return Subspace::zero(n);
  Eigen::JacobiSVD<ComplexMatrix> svd(v.basis(), Eigen::ComputeFullU);
  return Subspace(svd.matrixU().rightCols(n - v.dim()));
}

Subspace support(const ComplexMatrix& psd, double rel_cutoff) {
  const EigenDecomposition eig = hermitian_eig(psd);
  const Index n = psd.rows();
  if (n == 0) return Subspace::zero(0);
  const double top = eig.values(n - 1);
  if (!(top > 0)) return Subspace::zero(n);
  Index first = n;
  while (first > 0 && eig.values(first - 1) > rel_cutoff * top) --first;
  // Reverse so the dominant direction comes first.
  return Subspace(eig.vectors.rightCols(n - first).rowwise().reverse().eval());
}

double spectral_norm(const ComplexMatrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  return svd.singularValues()(0);
}

double max_abs(const ComplexMatrix& m) {
  if (m.size() == 0) return 0.0;
  return m.cwiseAbs().maxCoeff();
}

bool all_finite(const ComplexMatrix& m) { return m.allFinite(); }

ComplexVector vec(const ComplexMatrix& x) {
  return Eigen::Map<const ComplexVector>(x.data(), x.size());
}

ComplexMatrix unvec(const ComplexVector& v, Index rows) {
  if (rows <= 0 || v.size() % rows != 0) {
    throw DimensionMismatch("unvec: length " + std::to_string(v.size()) +
                            " is not a multiple of " + std::to_string(rows));
  }
  return Eigen::Map<const ComplexMatrix>(v.data(), rows, v.size() / rows);
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

ComplexMatrix polar_unitary(const ComplexMatrix& m) {
  require_square(m, "polar_unitary");
  Eigen::JacobiSVD<ComplexMatrix> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return svd.matrixU() * svd.matrixV().adjoint();
}

}  // namespace qautomata
