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

#include "qautomata/fixed_points.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "qautomata/errors.hpp"

namespace qautomata {

namespace {

// Repeated squaring multiplies rounding error in M^T by roughly T, so the
// fallback stops at T = 2^26.
constexpr int kFallbackDoublings = 26;

double projector_residual(const ComplexMatrix& m, const ComplexMatrix& p) {
  const double scale = std::max(1.0, max_abs(p));
  const double idem = max_abs(p * p - p);
  const double left = max_abs(m * p - p);
  const double right = max_abs(p * m - p);
  return std::max({idem, left, right}) / scale;
}

ComplexMatrix averaged_fallback(const ComplexMatrix& m, const Tolerances& tol,
                                const std::string& reason) {
  ComplexMatrix p = dyadic_cesaro_average(m, kFallbackDoublings);
  const double residual = projector_residual(m, p);
  if (!(residual <= tol.projector)) {
    throw IllConditionedProjector(
        "Cesàro projector unavailable (" + reason +
        "); averaged fallback residual " + std::to_string(residual));
  }
  return p;
}

}  // namespace

ComplexMatrix FixSpace::element(Index k) const {
  return unvec(basis.basis().col(k), channel_dim);
}

FixSpace fix_space(const KrausChannel& ch, double tol) {
  const Superoperator s = superoperator(ch);
  return FixSpace{ch.dim(), eigenspace_one(s.matrix, tol)};
}

ComplexMatrix dyadic_cesaro_average(const ComplexMatrix& m, int doublings) {
  // avg holds (1/T) Σ_{t=1}^T M^t and power holds M^T.
  ComplexMatrix avg = m;
  ComplexMatrix power = m;
  for (int k = 0; k < doublings; ++k) {
    avg = 0.5 * (avg + power * avg);
    power = power * power;
  }
  return avg;
}

ComplexMatrix cesaro_projector(const ComplexMatrix& m, const Tolerances& tol) {
  if (m.rows() != m.cols()) throw DimensionMismatch("cesaro_projector: matrix not square");
  const Index n = m.rows();
  const Subspace right = eigenspace_one(m, tol.rank);
  const Subspace left = eigenspace_one(m.adjoint(), tol.rank);
  if (right.dim() != left.dim()) {
    return averaged_fallback(m, tol, "left and right eigenvalue-1 spaces differ in dimension");
  }
  if (right.is_zero()) return ComplexMatrix::Zero(n, n);

  const ComplexMatrix gram = left.basis().adjoint() * right.basis();
  Eigen::JacobiSVD<ComplexMatrix> svd(gram);
  const RealVector& sv = svd.singularValues();
  const double cond = sv(sv.size() - 1) > 0 ? sv(0) / sv(sv.size() - 1)
                                            : std::numeric_limits<double>::infinity();
  if (!(cond <= tol.max_condition)) {
    return averaged_fallback(m, tol, "cond(L†R) = " + std::to_string(cond));
  }
  ComplexMatrix p = right.basis() * gram.partialPivLu().solve(left.basis().adjoint());
  if (!(projector_residual(m, p) <= tol.projector)) {
    return averaged_fallback(m, tol, "spectral projector failed its residual check");
  }
  return p;
}

Superoperator cesaro_limit(const KrausChannel& ch, const Tolerances& tol) {
  return Superoperator{ch.dim(), cesaro_projector(superoperator(ch).matrix, tol)};
}

ComplexMatrix clean_state(const ComplexMatrix& rho) {
  ComplexMatrix h = 0.5 * (rho + rho.adjoint());
  const double tr = h.trace().real();
  if (tr > 0) h /= tr;
  return h;
}

DensityOperator cesaro_finite(const KrausChannel& ch, const DensityOperator& rho0,
                              std::int64_t steps) {
  if (steps < 1) throw InvalidInput("cesaro_finite: T must be at least 1");
  if (rho0.dim() != ch.dim()) throw DimensionMismatch("cesaro_finite: state dimension");
  ComplexMatrix rho = rho0.matrix();
  ComplexMatrix sum = ComplexMatrix::Zero(ch.dim(), ch.dim());
  for (std::int64_t t = 0; t < steps; ++t) {
    rho = qautomata::apply(ch, rho);
    sum += rho;
  }
  return DensityOperator(clean_state(sum / static_cast<double>(steps)));
}

namespace {

std::vector<ComplexMatrix> spanning_states(Index d) {
  std::vector<ComplexMatrix> states;
  states.reserve(static_cast<std::size_t>(d * d));
  const Complex i_unit(0.0, 1.0);
  for (Index i = 0; i < d; ++i) {
    ComplexVector e = ComplexVector::Zero(d);
    e(i) = 1.0;
    states.push_back(e * e.adjoint());
  }
  for (Index i = 0; i < d; ++i) {
    for (Index j = i + 1; j < d; ++j) {
      ComplexVector plus = ComplexVector::Zero(d);
      plus(i) = 1.0;
      plus(j) = 1.0;
      states.push_back(plus * plus.adjoint() / 2.0);
      ComplexVector phase = ComplexVector::Zero(d);
      phase(i) = 1.0;
      phase(j) = i_unit;
      states.push_back(phase * phase.adjoint() / 2.0);
    }
  }
  return states;
}

}  // namespace

std::vector<DensityOperator> invariant_state_basis(const KrausChannel& ch,
                                                   const Tolerances& tol) {
  const Index d = ch.dim();
  const Index m = fix_space(ch, tol.rank).m();
  if (m == 0) {
    // Every channel has an invariant state, so the rank cutoff is too tight.
    throw SpanDeficit("invariant_state_basis: no eigenvalue-1 direction found at rank tolerance " +
                      std::to_string(tol.rank));
  }
  const Superoperator limit = cesaro_limit(ch, tol);

  std::vector<DensityOperator> basis;
  ComplexMatrix picked(d * d, 0);
  for (const ComplexMatrix& sigma : spanning_states(d)) {
    if (static_cast<Index>(basis.size()) == m) break;
    const ComplexMatrix fixed = clean_state(limit.apply(sigma));
    const ComplexVector v = vec(fixed);
    const ComplexVector residual = v - picked * (picked.adjoint() * v);
    if (residual.norm() <= tol.subspace * v.norm()) continue;
    picked.conservativeResize(Eigen::NoChange, picked.cols() + 1);
    picked.col(picked.cols() - 1) = residual / residual.norm();
    basis.emplace_back(fixed);
  }
  if (static_cast<Index>(basis.size()) < m) {
    throw SpanDeficit("invariant_state_basis: found " + std::to_string(basis.size()) +
                      " independent invariant states, fix space has dimension " +
                      std::to_string(m));
  }
  return basis;
}

RecurrentSplit recurrent_and_decaying(const KrausChannel& ch, const Tolerances& tol) {
  const Index d = ch.dim();
  ComplexMatrix supports(d, 0);
  for (const DensityOperator& rho : invariant_state_basis(ch, tol)) {
    const Subspace s = support(rho.matrix(), tol.support);
    const Index old = supports.cols();
    supports.conservativeResize(Eigen::NoChange, old + s.dim());
    supports.rightCols(s.dim()) = s.basis();
  }
  Subspace recurrent = orthonormal_span(supports, tol.rank);
  Subspace decaying = orthogonal_complement(recurrent);
  return {std::move(recurrent), std::move(decaying)};
}

}  // namespace qautomata
