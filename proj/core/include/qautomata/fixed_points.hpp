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

#include <cstdint>
#include <vector>

#include "qautomata/channel.hpp"
#include "qautomata/tolerances.hpp"

namespace qautomata {

/// Fixed points of a channel as a subspace of vectorised operators, with
/// orthonormality in the Hilbert–Schmidt inner product.
struct FixSpace {
  Index channel_dim = 0;
  Subspace basis;

  Index m() const { return basis.dim(); }
  /// k-th basis element reshaped to a channel_dim × channel_dim operator.
  ComplexMatrix element(Index k) const;
};

FixSpace fix_space(const KrausChannel& ch, double tol = Tolerances{}.rank);

/**
 * Spectral projector onto the eigenvalue-1 eigenspace of a square matrix,
 * R (L†R)^{-1} L† with R and L the right and left eigenvalue-1 bases.
 *
 * For any matrix whose eigenvalue 1 is semisimple (channels, stochastic
 * matrices) this is the Cesàro limit lim (1/T) Σ_{t=1}^T M^t. If L†R is
 * ill conditioned, or the projector fails its idempotency/commutation
 * check, the limit is recomputed by dyadic averaging; IllConditionedProjector
 * is thrown only when that also fails.
 */
ComplexMatrix cesaro_projector(const ComplexMatrix& m, const Tolerances& tol = {});

/// (1/T) Σ_{t=1}^T M^t with T = 2^doublings, by repeated doubling.
ComplexMatrix dyadic_cesaro_average(const ComplexMatrix& m, int doublings);

/// Φ^∞ as a superoperator.
Superoperator cesaro_limit(const KrausChannel& ch, const Tolerances& tol = {});

/// (1/T) Σ_{t=1}^T Φ^t(ρ0) by direct iteration.
DensityOperator cesaro_finite(const KrausChannel& ch, const DensityOperator& rho0,
                              std::int64_t steps);

/**
 * m linearly independent invariant states spanning Fix(Φ): Φ^∞ applied to
 * the d² states |i⟩⟨i|, (|i⟩+|j⟩)(⟨i|+⟨j|)/2, (|i⟩+i|j⟩)(⟨i|−i⟨j|)/2,
 * kept greedily while they grow the span. Throws SpanDeficit when fewer
 * than m are found, or when the fix space comes out empty.
 */
std::vector<DensityOperator> invariant_state_basis(const KrausChannel& ch,
                                                   const Tolerances& tol = {});

struct RecurrentSplit {
  Subspace recurrent;  // R: span of supports of invariant states
  Subspace decaying;   // D = R^⊥
};

RecurrentSplit recurrent_and_decaying(const KrausChannel& ch, const Tolerances& tol = {});

/// Hermitian part and unit trace restored, for outputs that are states up to
/// rounding.
ComplexMatrix clean_state(const ComplexMatrix& rho);

}  // namespace qautomata
