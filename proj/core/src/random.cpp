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

#include "qautomata/random.hpp"

#include <algorithm>
#include <cmath>

#include "qautomata/errors.hpp"

namespace qautomata {

namespace {

// Multiplies k by the phase that makes its first entry above the cutoff
// (column-major order) real positive, and clears the rounding residue in
// that entry's imaginary part.
void gauge_fix(Eigen::Ref<ComplexMatrix> k) {
  for (Index c = 0; c < k.cols(); ++c) {
    for (Index r = 0; r < k.rows(); ++r) {
      const Complex z = k(r, c);
      if (std::abs(z) > 1e-12) {
        k *= std::conj(z) / std::abs(z);
        k(r, c) = std::abs(z);
        return;
      }
    }
  }
}

ComplexMatrix isometry(Index rows, Index cols, Rng& rng) {
  const ComplexMatrix g = random_ginibre(rows, cols, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(rows, cols);
  const ComplexMatrix r = qr.matrixQR().topLeftCorner(cols, cols);
  for (Index j = 0; j < cols; ++j) {
    const Complex d = r(j, j);
    if (std::abs(d) > 0) q.col(j) *= d / std::abs(d);
  }
  return q;
}

}  // namespace

ComplexMatrix random_ginibre(Index rows, Index cols, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix g(rows, cols);
  // Explicit loop order keeps the stream of draws independent of Eigen
  // internals.
  for (Index j = 0; j < cols; ++j) {
    for (Index i = 0; i < rows; ++i) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(i, j) = Complex(re, im) / std::sqrt(2.0);
    }
  }
  return g;
}

ComplexMatrix random_hermitian(Index dim, Rng& rng) {
  const ComplexMatrix g = random_ginibre(dim, dim, rng);
  return 0.5 * (g + g.adjoint());
}

ComplexMatrix random_unitary(Index dim, Rng& rng) { return isometry(dim, dim, rng); }

DensityOperator random_density(Index dim, Rng& rng) {
  const ComplexMatrix w = random_ginibre(dim, dim, rng);
  ComplexMatrix rho = w * w.adjoint();
  rho = 0.5 * (rho + rho.adjoint());
  rho /= rho.trace().real();
  return DensityOperator(std::move(rho));
}

ComplexMatrix random_effect(Index dim, Rng& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const ComplexMatrix u = random_unitary(dim, rng);
  RealVector eig(dim);
  for (Index i = 0; i < dim; ++i) eig(i) = unit(rng);
  ComplexMatrix e = u * eig.cast<Complex>().asDiagonal() * u.adjoint();
  return 0.5 * (e + e.adjoint());
}

KrausChannel random_channel(Index dim, Index num_kraus, std::uint64_t seed) {
  Rng rng(seed);
  return random_channel(dim, num_kraus, rng);
}

KrausChannel random_channel(Index dim, Index num_kraus, Rng& rng) {
  if (dim < 1 || num_kraus < 1) {
    throw InvalidInput("random_channel: dim and num_kraus must be positive");
  }
  ComplexMatrix v = isometry(num_kraus * dim, dim, rng);
  for (Index k = 0; k < num_kraus; ++k) gauge_fix(v.middleRows(k * dim, dim));
  // Householder Q columns can be off unit length by an ulp; rescaling keeps
  // the d = 1, r = 1 channel exactly {1}.
  v.colwise().normalize();
  std::vector<ComplexMatrix> ops;
  ops.reserve(static_cast<std::size_t>(num_kraus));
  for (Index k = 0; k < num_kraus; ++k) ops.emplace_back(v.middleRows(k * dim, dim));
  return KrausChannel(std::move(ops));
}

Index ChannelStructure::dim() const {
  Index d = decaying_dim;
  for (const BlockSpec& b : blocks) d += b.multiplicity * b.block_dim;
  return d;
}

Index ChannelStructure::fix_dim() const {
  Index m = 0;
  for (const BlockSpec& b : blocks) m += b.multiplicity * b.multiplicity;
  return m;
}

KrausChannel random_structured_channel(const ChannelStructure& structure, Rng& rng) {
  const ComplexMatrix u = random_unitary(structure.dim(), rng);
  return random_structured_channel(structure, u, rng);
}

KrausChannel random_structured_channel(const ChannelStructure& structure,
                                       const ComplexMatrix& frame, Rng& rng) {
  const Index d = structure.dim();
  if (frame.rows() != d || frame.cols() != d) {
    throw DimensionMismatch("random_structured_channel: frame does not match the structure");
  }
  if (structure.blocks.empty()) {
    throw InvalidInput("random_structured_channel: need at least one recurrent block");
  }
  std::vector<ComplexMatrix> ops;
  Index offset = 0;
  for (const BlockSpec& b : structure.blocks) {
    const Index r = b.block_dim > 1 ? std::max<Index>(b.num_kraus, 2) : 1;
    const KrausChannel inner = random_channel(b.block_dim, r, rng);
    const Index width = b.multiplicity * b.block_dim;
    for (const ComplexMatrix& k : inner.kraus()) {
      ComplexMatrix op = ComplexMatrix::Zero(d, d);
      op.block(offset, offset, width, width) =
          kron(ComplexMatrix::Identity(b.multiplicity, b.multiplicity), k);
      ops.push_back(std::move(op));
    }
    offset += width;
  }
  if (structure.decaying_dim > 0) {
    const Index nd = structure.decaying_dim;
    constexpr Index kLeakOps = 2;
    const ComplexMatrix v = isometry(kLeakOps * d, nd, rng);
    for (Index k = 0; k < kLeakOps; ++k) {
      ComplexMatrix op = ComplexMatrix::Zero(d, d);
      op.rightCols(nd) = v.middleRows(k * d, d);
      ops.push_back(std::move(op));
    }
  }
  for (ComplexMatrix& op : ops) op = frame * op * frame.adjoint();
  return KrausChannel(std::move(ops));
}

ChannelStructure random_structure(Index dim, Rng& rng) {
  ChannelStructure s;
  std::uniform_int_distribution<Index> coin(0, 2);
  Index remaining = dim;
  if (dim > 1 && coin(rng) == 0) {
    s.decaying_dim = std::uniform_int_distribution<Index>(1, dim / 2)(rng);
    remaining -= s.decaying_dim;
  }
  while (remaining > 0) {
    BlockSpec b;
    b.multiplicity = std::uniform_int_distribution<Index>(1, std::min<Index>(remaining, 2))(rng);
    const Index max_block = remaining / b.multiplicity;
    b.block_dim = std::uniform_int_distribution<Index>(1, std::min<Index>(max_block, 3))(rng);
    b.num_kraus = std::uniform_int_distribution<Index>(2, 3)(rng);
    remaining -= b.multiplicity * b.block_dim;
    s.blocks.push_back(b);
  }
  return s;
}

RealMatrix random_stochastic(Index dim, double density, Rng& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  RealMatrix s = RealMatrix::Zero(dim, dim);
  for (Index j = 0; j < dim; ++j) {
    for (Index i = 0; i < dim; ++i) {
      if (unit(rng) < density) s(i, j) = 0.05 + unit(rng);
    }
    const double col = s.col(j).sum();
    if (col == 0.0) {
      s(j, j) = 1.0;
    } else {
      s.col(j) /= col;
    }
  }
  return s;
}

}  // namespace qautomata
