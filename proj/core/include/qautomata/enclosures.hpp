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
#include <optional>
#include <vector>

#include "qautomata/channel.hpp"
#include "qautomata/tolerances.hpp"

namespace qautomata {

/// K_i V ⊆ V for every Kraus operator, i.e. ‖(I − P_V) K_i P_V‖₂ ≤ tol.
bool is_enclosure(const KrausChannel& ch, const Subspace& v,
                  double tol = Tolerances{}.subspace);

/// Smallest enclosure containing W, grown by V ← span(V ∪ K_i V) until no
/// Kraus operator moves V by more than tol.
Subspace enclosure_closure(const KrausChannel& ch, const Subspace& w,
                           double tol = Tolerances{}.subspace);

/// Kraus operators V† K_i V acting on the coordinates of an enclosure V.
/// Trace preserving because V is invariant. Throws NotAnEnclosure.
KrausChannel restrict_to(const KrausChannel& ch, const Subspace& v,
                         const Tolerances& tol = {});

/// True iff the channel restricted to V has a one-dimensional fix space
/// and its unique invariant state has full support on V. Throws
/// NotAnEnclosure when V is not an enclosure; the zero subspace is never
/// minimal.
bool is_minimal_enclosure(const KrausChannel& ch, const Subspace& v,
                          const Tolerances& tol = {});

/**
 * One block W_i = V_{i,1} ⊕ … ⊕ V_{i,m_i}.
 *
 * The enclosure bases are aligned: in the basis formed by concatenating
 * them, every fixed point restricted to W_i reads A_i ⊗ rho.
 */
struct EnclosureBlock {
  std::vector<Subspace> enclosures;
  DensityOperator rho;  // d_i × d_i, in the basis of enclosures[0]

  Index multiplicity() const { return static_cast<Index>(enclosures.size()); }
  Index block_dim() const { return rho.dim(); }
};

/// H = D ⊕ ⊕_i W_i with W_i split into m_i minimal enclosures of dimension d_i.
struct EnclosureDecomposition {
  Subspace decaying;
  std::vector<EnclosureBlock> blocks;

  Index ambient_dim() const { return decaying.ambient_dim(); }
  /// Σ_i m_i².
  Index sum_squared_multiplicities() const;
  /// Unitary whose columns are D's basis followed by every enclosure basis,
  /// block by block.
  ComplexMatrix compatible_basis() const;
  /// Span of all V_{i,j} for a single block.
  Subspace block_span(std::size_t i) const;
};

/**
 * Randomised search for a minimal enclosure decomposition.
 *
 * The recurrent subspace is peeled one minimal enclosure at a time: a
 * random Hermitian fixed point is drawn, the Kraus closure of one of its
 * eigenvectors is taken, non-minimal closures are refined recursively, and
 * the orthogonal complement (again an enclosure on the recurrent part) is
 * processed next. Enclosures are grouped into blocks when some fixed point
 * couples them, and their bases aligned through the polar factor of that
 * coupling.
 *
 * The result is checked against every structural invariant (orthogonality,
 * dimension count, equal block dimensions, strictly positive rho_i,
 * Σ m_i² = dim Fix). A failed check triggers a retry with seed+1, up to five
 * retries, then DecompositionFailure.
 */
EnclosureDecomposition minimal_enclosure_decomposition(const KrausChannel& ch,
                                                       std::uint64_t seed,
                                                       const Tolerances& tol = {});

/// Throws DecompositionFailure naming the first violated invariant.
void check_decomposition(const KrausChannel& ch, const EnclosureDecomposition& dec,
                         const Tolerances& tol = {});

/**
 * Whether X = 0 ⊕ ⊕_i A_i ⊗ rho_i in the decomposition's compatible basis.
 * A_i is recovered by partial trace over the rho_i factor; every residual
 * is compared against tol·‖X‖₂.
 */
bool respects(const ComplexMatrix& x, const EnclosureDecomposition& dec, double tol);

/**
 * Minimal enclosures drawn independently of a decomposition: closures of
 * eigenvectors of fresh random fixed points, kept when minimal. Used to
 * probe the block-containment property of a decomposition.
 */
std::vector<Subspace> sample_minimal_enclosures(const KrausChannel& ch, int draws,
                                                std::uint64_t seed,
                                                const Tolerances& tol = {});

/// For each sampled minimal enclosure X and block W_i: X ⊥ W_i or X ⊆ W_i.
bool satisfies_block_containment(const EnclosureDecomposition& dec,
                                 const std::vector<Subspace>& minimal_enclosures,
                                 double tol);

struct ProportionalMatch {
  std::size_t from = 0;  // index in the first list
  std::size_t to = 0;    // index in the second list
  Complex factor;        // from-operator = factor · to-operator
};

struct EquivalenceReport {
  bool equivalent = false;
  std::vector<ProportionalMatch> forward;   // a → b
  std::vector<ProportionalMatch> backward;  // b → a
  /// First operator without a proportional partner: (side, index) with
  /// side 0 for a and 1 for b.
  std::optional<std::pair<int, std::size_t>> unmatched;
};

/// Every nonzero Kraus operator of a is proportional to one of b and vice
/// versa, proportionality meaning |⟨K, K̂⟩| ≥ (1 − tol)‖K‖‖K̂‖. Operators with
/// Hilbert–Schmidt norm ≤ 1e-12 are ignored.
EquivalenceReport equivalence_report(const KrausChannel& a, const KrausChannel& b,
                                     double tol = 1e-9);

bool combinatorially_equivalent(const KrausChannel& a, const KrausChannel& b,
                                double tol = 1e-9);

}  // namespace qautomata
