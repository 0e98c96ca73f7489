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

#include <vector>

#include "qautomata/linalg.hpp"

namespace qautomata {

/**
 * Quantum channel on C^d in Kraus form, X ↦ Σ_i K_i X K_i^†.
 *
 * Construction only checks shapes (at least one operator, all d×d, finite
 * entries). Trace preservation is checked by validate(); file loaders
 * always call it. The Kraus list is stored exactly as given.
 */
class KrausChannel {
 public:
  explicit KrausChannel(std::vector<ComplexMatrix> kraus);

  Index dim() const { return dim_; }
  std::size_t num_kraus() const { return kraus_.size(); }
  const std::vector<ComplexMatrix>& kraus() const { return kraus_; }
  const ComplexMatrix& operator[](std::size_t i) const { return kraus_[i]; }

 private:
  Index dim_ = 0;
  std::vector<ComplexMatrix> kraus_;
};

/// Positive semidefinite, trace-one, Hermitian to 1e-9.
class DensityOperator {
 public:
  /// Throws InvalidState when the matrix is not a density operator.
  explicit DensityOperator(ComplexMatrix matrix);

  static DensityOperator basis_state(Index dim, Index i);
  static DensityOperator pure(const ComplexVector& psi);
  static DensityOperator maximally_mixed(Index dim);

  Index dim() const { return matrix_.rows(); }
  const ComplexMatrix& matrix() const { return matrix_; }

 private:
  ComplexMatrix matrix_;
};

/// d²×d² matrix of a channel acting on column-stacked vec(X).
struct Superoperator {
  Index dim = 0;
  ComplexMatrix matrix;

  ComplexMatrix apply(const ComplexMatrix& x) const;
};

struct ValidationReport {
  double tp_residual = 0.0;             // ‖Σ K_i†K_i − I‖_max
  double cp_min_choi_eigenvalue = 0.0;  // smallest eigenvalue of Σ vec(K_i)vec(K_i)†
};

/// Throws InvalidChannel when tp_residual > 1e-6.
ValidationReport validate(const KrausChannel& ch);

/// validate() plus the Choi positivity check used for channels read from
/// files (minimum Choi eigenvalue ≥ −1e-7).
ValidationReport validate_loaded(const KrausChannel& ch);

/// Call it qualified: Eigen's complex matrices make std::apply visible
/// through argument-dependent lookup.
ComplexMatrix apply(const KrausChannel& ch, const ComplexMatrix& x);

/// Σ_i conj(K_i) ⊗ K_i, i.e. vec(K X K†) = (conj(K) ⊗ K) vec(X) under
/// column stacking.
Superoperator superoperator(const KrausChannel& ch);

ComplexMatrix choi_matrix(const KrausChannel& ch);

/**
 * Kraus form of p·ch1 + (1−p)·ch0: {√(1−p) K^(0)_i} ∪ {√p K^(1)_j}.
 * At p = 0 or p = 1 the side with weight zero is dropped entirely.
 */
KrausChannel mix(const KrausChannel& ch0, const KrausChannel& ch1, double p);

// A few standard channels.
KrausChannel identity_channel(Index dim);
/// Completely depolarizing: X ↦ tr(X) I/d, Kraus {|i⟩⟨j|/√d}.
KrausChannel depolarizing_channel(Index dim);
KrausChannel amplitude_damping_channel(double gamma);
KrausChannel unitary_channel(const ComplexMatrix& u);

}  // namespace qautomata
