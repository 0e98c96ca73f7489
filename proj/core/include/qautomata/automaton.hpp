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

/// Reads p-biased bits: Φ_1 on heads, Φ_0 on tails, accepting "Fair" with
/// the effect E_fair (0 ⪯ E_fair ⪯ I).
class QuantumCoinAutomaton {
 public:
  QuantumCoinAutomaton(KrausChannel phi0, KrausChannel phi1, DensityOperator rho0,
                       ComplexMatrix e_fair);

  const KrausChannel& phi0() const { return phi0_; }
  const KrausChannel& phi1() const { return phi1_; }
  const DensityOperator& rho0() const { return rho0_; }
  const ComplexMatrix& e_fair() const { return e_fair_; }
  Index dim() const { return phi0_.dim(); }

 private:
  KrausChannel phi0_;
  KrausChannel phi1_;
  DensityOperator rho0_;
  ComplexMatrix e_fair_;
};

/// Probabilistic automaton with column-stochastic S_0, S_1 (π_{t+1} = S π_t).
class ClassicalCoinAutomaton {
 public:
  ClassicalCoinAutomaton(RealMatrix s0, RealMatrix s1, RealVector pi0, RealVector e_fair);

  const RealMatrix& s0() const { return s0_; }
  const RealMatrix& s1() const { return s1_; }
  const RealVector& pi0() const { return pi0_; }
  const RealVector& e_fair() const { return e_fair_; }
  Index dim() const { return s0_.rows(); }

 private:
  RealMatrix s0_;
  RealMatrix s1_;
  RealVector pi0_;
  RealVector e_fair_;
};

enum class Decision { kFair, kBiased, kIndecisive };

const char* to_string(Decision decision);

struct VerdictThresholds {
  double fair = 2.0 / 3.0;
  double biased = 1.0 / 3.0;
};

struct Verdict {
  Decision value = Decision::kIndecisive;
  double f_value = 0.0;
};

Verdict make_verdict(double f, const VerdictThresholds& thresholds = {});

/// Φ_p = pΦ_1 + (1−p)Φ_0.
KrausChannel averaged_channel(const QuantumCoinAutomaton& a, double p);

/// (1/T) Σ_{t=1}^T ⟨E_fair, Φ_p^t(ρ_0)⟩, clamped to [0,1].
double f_T(const QuantumCoinAutomaton& a, double p, std::int64_t steps);

/// ⟨E_fair, Φ_p^∞(ρ_0)⟩ and the resulting verdict.
Verdict f_limit(const QuantumCoinAutomaton& a, double p, const Tolerances& tol = {},
                const VerdictThresholds& thresholds = {});

/// One sampled run: w_t ~ Bernoulli(p), ρ_t = Φ_{w_t}(ρ_{t−1}), returns the
/// time average of ⟨E_fair, ρ_t⟩ over t = 1..T.
double simulate_trajectory(const QuantumCoinAutomaton& a, double p, std::int64_t steps,
                           std::uint64_t seed);

RealMatrix classical_mix(const RealMatrix& s0, const RealMatrix& s1, double p);

/// ⟨e_fair, S_p^∞ π_0⟩ with S_p^∞ the spectral Cesàro projector.
Verdict classical_f_limit(const ClassicalCoinAutomaton& a, double p, const Tolerances& tol = {},
                          const VerdictThresholds& thresholds = {});

struct CommunicationStructure {
  std::vector<std::vector<Index>> classes;  // each sorted; ordered by smallest member
  std::vector<bool> closed;                 // parallel to classes
  Index closed_classes = 0;
};

/// Strongly connected components of the digraph with an edge i → j iff
/// S(j, i) > tol.
CommunicationStructure communication_structure(const RealMatrix& s, double tol = 1e-12);

/// dim of the eigenvalue-1 eigenspace of S.
Index classical_fix_dim(const RealMatrix& s, double tol = Tolerances{}.rank);

/// Diagonal quantum automaton with Kraus {√S_{ji} |j⟩⟨i|}, ρ_0 = diag(π_0),
/// E_fair = diag(e_fair).
QuantumCoinAutomaton embed_classical(const ClassicalCoinAutomaton& a);

KrausChannel embed_stochastic(const RealMatrix& s);

}  // namespace qautomata
