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

namespace qautomata {

/**
 * Cutoff policy shared by every module. One instance is threaded from the
 * top-level entry points (CLI, experiments) down to the linear algebra, so
 * that every rank, containment and support decision in a run uses the same
 * numbers.
 */
struct Tolerances {
  /// Relative singular-value cutoff for spans, null spaces and the
  /// eigenvalue-1 multiplicity of a superoperator.
  double rank = 1e-9;
  /// Residual bound for containment, orthogonality and K V ⊆ V tests.
  double subspace = 1e-8;
  /// Eigenvalues of a state below support * lambda_max are not in its support.
  double support = 1e-8;
  /// Above this condition number the spectral projector is not trusted.
  double max_condition = 1e8;
  /// Idempotency and commutation residual accepted for Cesàro projectors.
  double projector = 1e-7;
};

}  // namespace qautomata
