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
#include <random>
#include <vector>

#include "qautomata/channel.hpp"

namespace qautomata {

/// Every random draw in the library goes through an explicitly seeded engine.
using Rng = std::mt19937_64;

/// i.i.d. standard complex Gaussian entries.
ComplexMatrix random_ginibre(Index rows, Index cols, Rng& rng);
ComplexMatrix random_hermitian(Index dim, Rng& rng);
/// Haar-distributed unitary (QR of a Ginibre matrix with phase correction).
ComplexMatrix random_unitary(Index dim, Rng& rng);
/// Full-rank random state (normalised W W† with W Ginibre).
DensityOperator random_density(Index dim, Rng& rng);
/// Random 0 ⪯ E ⪯ I: uniform eigenvalues in [0,1], Haar eigenbasis.
ComplexMatrix random_effect(Index dim, Rng& rng);

/**
 * Random channel: num_kraus Ginibre d×d blocks stacked into a (num_kraus·d)×d
 * column, orthonormalised, and split back into Kraus operators. Each
 * operator is then multiplied by the phase that makes its first nonzero
 * entry real positive (this does not change the channel).
 */
KrausChannel random_channel(Index dim, Index num_kraus, std::uint64_t seed);
KrausChannel random_channel(Index dim, Index num_kraus, Rng& rng);

/// One W_i = C^multiplicity ⊗ C^block_dim, acted on by 1 ⊗ (random channel
/// with num_kraus operators).
struct BlockSpec {
  Index multiplicity = 1;
  Index block_dim = 1;
  Index num_kraus = 2;
};

struct ChannelStructure {
  std::vector<BlockSpec> blocks;
  Index decaying_dim = 0;

  Index dim() const;
  Index fix_dim() const;  // Σ multiplicity²
};

/**
 * Channel with a prescribed minimal enclosure structure, rotated by a Haar
 * unitary. Block channels use at least two Kraus operators when
 * block_dim > 1 so that they are irreducible with probability one; the
 * decaying part leaks into the recurrent part through a random isometry.
 */
KrausChannel random_structured_channel(const ChannelStructure& structure, Rng& rng);

/// Same, in the given unitary frame instead of a Haar-random one. Channels
/// drawn with one frame share their decomposition and fixed-point dimension.
KrausChannel random_structured_channel(const ChannelStructure& structure,
                                       const ComplexMatrix& frame, Rng& rng);

/// Random partition of dim into a decaying part and blocks.
ChannelStructure random_structure(Index dim, Rng& rng);

/// Column-stochastic matrix; each off-diagonal entry is present with
/// probability `density`, weights uniform, empty columns become self-loops.
RealMatrix random_stochastic(Index dim, double density, Rng& rng);

}  // namespace qautomata
