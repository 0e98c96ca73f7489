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

// Hand-built channels with known fixed-point structure, shared by the unit
// and acceptance tests.

#include <cmath>
#include <string>
#include <vector>

#include "qautomata/channel.hpp"

namespace fixtures {

using qautomata::Complex;
using qautomata::ComplexMatrix;
using qautomata::Index;
using qautomata::KrausChannel;

struct Named {
  std::string name;
  KrausChannel channel;
  Index fix_dim;  // known by construction
};

inline KrausChannel diagonal_phase(double theta) {
  ComplexMatrix u = ComplexMatrix::Identity(2, 2);
  u(1, 1) = std::polar(1.0, theta);
  return qautomata::unitary_channel(u);
}

// Identity on qubit A, complete depolarisation on qubit B: {I ⊗ |i⟩⟨j|/√2}.
// Fixed points are A ⊗ I/2, so one block with m = 2, d = 2.
inline KrausChannel noiseless_subsystem() {
  std::vector<ComplexMatrix> ops;
  for (Index i = 0; i < 2; ++i) {
    for (Index j = 0; j < 2; ++j) {
      ComplexMatrix unit = ComplexMatrix::Zero(2, 2);
      unit(i, j) = 1.0 / std::sqrt(2.0);
      ops.push_back(qautomata::kron(ComplexMatrix::Identity(2, 2), unit));
    }
  }
  return KrausChannel(std::move(ops));
}

// Amplitude damping on span{e1, e2} next to an untouched e3, with separate
// Kraus operators so coherences between the two parts decay:
// {diag(1, √(1−γ), 0), √γ |e1⟩⟨e2|, |e3⟩⟨e3|}. Two blocks (e1 and e3), D = e2.
inline KrausChannel damped_direct_sum(double gamma) {
  ComplexMatrix a0 = ComplexMatrix::Zero(3, 3);
  a0(0, 0) = 1.0;
  a0(1, 1) = std::sqrt(1.0 - gamma);
  ComplexMatrix a1 = ComplexMatrix::Zero(3, 3);
  a1(0, 1) = std::sqrt(gamma);
  ComplexMatrix a2 = ComplexMatrix::Zero(3, 3);
  a2(2, 2) = 1.0;
  return KrausChannel({a0, a1, a2});
}

// Same blocks but the identity on e3 shares the first Kraus operator:
// {diag(1, √(1−γ), 1), √γ |e1⟩⟨e2|}. Coherences between e1 and e3 survive,
// so e1 and e3 form a single block with m = 2.
inline KrausChannel damped_shared_kraus(double gamma) {
  ComplexMatrix a0 = ComplexMatrix::Zero(3, 3);
  a0(0, 0) = 1.0;
  a0(1, 1) = std::sqrt(1.0 - gamma);
  a0(2, 2) = 1.0;
  ComplexMatrix a1 = ComplexMatrix::Zero(3, 3);
  a1(0, 1) = std::sqrt(gamma);
  return KrausChannel({a0, a1});
}

inline std::vector<Named> hand_built() {
  return {
      {"identity", qautomata::identity_channel(2), 4},
      {"depolarizing", qautomata::depolarizing_channel(2), 1},
      {"amplitude damping", qautomata::amplitude_damping_channel(0.5), 1},
      {"diagonal unitary", diagonal_phase(1.0), 2},
      {"noiseless subsystem", noiseless_subsystem(), 4},
      {"two-block direct sum", damped_direct_sum(0.5), 2},
  };
}

}  // namespace fixtures
