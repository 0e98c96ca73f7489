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

#include "qautomata/enclosures.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "qautomata/errors.hpp"
#include "qautomata/fixed_points.hpp"
#include "qautomata/random.hpp"

namespace qautomata {

namespace {

constexpr int kMaxRetries = 5;
constexpr int kMaxDrawsPerSplit = 8;
// Two enclosures belong to the same block when the fixed-point space couples
// them by at least this much (Frobenius norm of the compressed projection).
constexpr double kCouplingTol = 1e-6;
constexpr double kRhoAgreementTol = 1e-6;
constexpr double kMinRhoEigenvalue = 1e-8;
constexpr double kZeroKraus = 1e-12;

void require_ambient(const KrausChannel& ch, const Subspace& v, const char* what) {
  if (v.ambient_dim() != ch.dim()) {
    throw DimensionMismatch(std::string(what) + ": subspace lives in C^" +
                            std::to_string(v.ambient_dim()) + ", channel acts on C^" +
                            std::to_string(ch.dim()));
  }
}

ComplexMatrix random_hermitian_fixed_point(const Superoperator& limit, Rng& rng) {
  const ComplexMatrix x = random_hermitian(limit.dim, rng);
  const ComplexMatrix h = limit.apply(x);
  return 0.5 * (h + h.adjoint());
}

// Index of the eigenvalue farthest from its neighbours.
Index most_isolated(const RealVector& values) {
  const Index n = values.size();
  if (n == 1) return 0;
  Index best = 0;
  double best_gap = -1.0;
  for (Index k = 0; k < n; ++k) {
    double gap = std::numeric_limits<double>::infinity();
    if (k > 0) gap = std::min(gap, values(k) - values(k - 1));
    if (k + 1 < n) gap = std::min(gap, values(k + 1) - values(k));
    if (gap > best_gap) {
      best_gap = gap;
      best = k;
    }
  }
  return best;
}

ComplexMatrix lift(const ComplexMatrix& outer, const ComplexMatrix& inner) {
  return outer * inner;
}

// Splits the coordinate space of a channel whose invariant states have full
// support into mutually orthogonal minimal enclosures.
std::vector<ComplexMatrix> peel(const KrausChannel& psi, Rng& rng, const Tolerances& tol) {
  const Index n = psi.dim();
  if (is_minimal_enclosure(psi, Subspace::full(n), tol)) {
    return {ComplexMatrix::Identity(n, n)};
  }
  const Superoperator limit = cesaro_limit(psi, tol);
  for (int draw = 0; draw < kMaxDrawsPerSplit; ++draw) {
    const ComplexMatrix h = random_hermitian_fixed_point(limit, rng);
    const EigenDecomposition eig = hermitian_eig(h);
    const Index k = most_isolated(eig.values);
    const Subspace seed_line(eig.vectors.col(k));
    const Subspace closure = enclosure_closure(psi, seed_line, tol.subspace);
    if (closure.dim() == n) continue;

    const Subspace rest = orthogonal_complement(closure);
    if (!is_enclosure(psi, rest, tol.subspace)) {
      throw DecompositionFailure(
          "complement of an enclosure inside the recurrent subspace is not an enclosure");
    }

    std::vector<ComplexMatrix> out;
    if (is_minimal_enclosure(psi, closure, tol)) {
      out.push_back(closure.basis());
    } else {
      for (const ComplexMatrix& b : peel(restrict_to(psi, closure, tol), rng, tol)) {
        out.push_back(lift(closure.basis(), b));
      }
    }
    if (!rest.is_zero()) {
      for (const ComplexMatrix& b : peel(restrict_to(psi, rest, tol), rng, tol)) {
        out.push_back(lift(rest.basis(), b));
      }
    }
    return out;
  }
  throw DecompositionFailure("random fixed points did not split a non-minimal enclosure");
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

DensityOperator unique_invariant_state(const KrausChannel& ch, const Subspace& v,
                                       const Tolerances& tol) {
  const std::vector<DensityOperator> states =
      invariant_state_basis(restrict_to(ch, v, tol), tol);
  if (states.size() != 1) {
    throw DecompositionFailure("enclosure restricted channel has " +
                               std::to_string(states.size()) + " invariant states");
  }
  return states.front();
}

EnclosureDecomposition decompose_once(const KrausChannel& ch, Rng& rng,
                                      const Tolerances& tol) {
  const RecurrentSplit split = recurrent_and_decaying(ch, tol);
  const KrausChannel on_recurrent = restrict_to(ch, split.recurrent, tol);

  std::vector<Subspace> found;
  for (const ComplexMatrix& b : peel(on_recurrent, rng, tol)) {
    found.emplace_back(lift(split.recurrent.basis(), b));
  }

  // Couplings through the fixed-point space.
  const FixSpace fix = fix_space(ch, tol.rank);
  std::vector<ComplexMatrix> fixed;
  for (Index b = 0; b < fix.m(); ++b) fixed.push_back(fix.element(b));

  UnionFind groups(found.size());
  for (std::size_t j = 0; j < found.size(); ++j) {
    for (std::size_t k = j + 1; k < found.size(); ++k) {
      double coupling = 0.0;
      for (const ComplexMatrix& x : fixed) {
        coupling += (found[j].basis().adjoint() * x * found[k].basis()).squaredNorm();
      }
      if (std::sqrt(coupling) > kCouplingTol) groups.unite(j, k);
    }
  }

  EnclosureDecomposition dec{split.decaying, {}};
  std::vector<bool> used(found.size(), false);
  for (std::size_t root = 0; root < found.size(); ++root) {
    if (used[root] || groups.find(root) != root) continue;
    const Subspace& first = found[root];
    std::vector<Subspace> members{first};
    used[root] = true;
    for (std::size_t j = root + 1; j < found.size(); ++j) {
      if (used[j] || groups.find(j) != root) continue;
      used[j] = true;
      if (found[j].dim() != first.dim()) {
        throw DecompositionFailure("enclosures of one block differ in dimension");
      }
      // Align V_j with V_first through the polar factor of the strongest coupling.
      ComplexMatrix best;
      double best_norm = -1.0;
      for (const ComplexMatrix& x : fixed) {
        ComplexMatrix c = found[j].basis().adjoint() * x * first.basis();
        const double nrm = c.norm();
        if (nrm > best_norm) {
          best_norm = nrm;
          best = std::move(c);
        }
      }
      members.emplace_back(found[j].basis() * polar_unitary(best));
    }
    DensityOperator rho = unique_invariant_state(ch, first, tol);
    for (std::size_t j = 1; j < members.size(); ++j) {
      const DensityOperator other = unique_invariant_state(ch, members[j], tol);
      if (max_abs(other.matrix() - rho.matrix()) > kRhoAgreementTol) {
        throw DecompositionFailure("aligned enclosures carry different invariant states");
      }
    }
    dec.blocks.push_back(EnclosureBlock{std::move(members), std::move(rho)});
  }
  check_decomposition(ch, dec, tol);
  return dec;
}

}  // namespace

bool is_enclosure(const KrausChannel& ch, const Subspace& v, double tol) {
  require_ambient(ch, v, "is_enclosure");
  if (v.is_zero()) return true;
  const ComplexMatrix& b = v.basis();
  for (const ComplexMatrix& k : ch.kraus()) {
    const ComplexMatrix kv = k * b;
    if (spectral_norm(kv - b * (b.adjoint() * kv)) > tol) return false;
  }
  return true;
}

Subspace enclosure_closure(const KrausChannel& ch, const Subspace& w, double tol) {
  require_ambient(ch, w, "enclosure_closure");
  const Index d = ch.dim();
  ComplexMatrix basis = w.basis();
  if (basis.cols() == 0) return w;
  const Index r = static_cast<Index>(ch.num_kraus());
  while (basis.cols() < d) {
    const Index k = basis.cols();
    ComplexMatrix moved(d, r * k);
    for (Index i = 0; i < r; ++i) moved.middleCols(i * k, k) = ch[static_cast<std::size_t>(i)] * basis;
    const ComplexMatrix outside = moved - basis * (basis.adjoint() * moved);
    Eigen::JacobiSVD<ComplexMatrix> svd(outside, Eigen::ComputeThinU);
    const RealVector& sv = svd.singularValues();
    Index grow = 0;
    while (grow < sv.size() && sv(grow) > tol && k + grow < d) ++grow;
    if (grow == 0) break;
    ComplexMatrix next(d, k + grow);
    next << basis, svd.matrixU().leftCols(grow);
    // One re-orthonormalisation pass keeps the basis orthonormal to rounding.
    Eigen::HouseholderQR<ComplexMatrix> qr(next);
    ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(d, k + grow);
    basis = std::move(q);
  }
  return Subspace(std::move(basis));
}

KrausChannel restrict_to(const KrausChannel& ch, const Subspace& v, const Tolerances& tol) {
  require_ambient(ch, v, "restrict_to");
  if (v.is_zero()) throw InvalidInput("restrict_to: cannot restrict to the zero subspace");
  if (!is_enclosure(ch, v, tol.subspace)) {
    throw NotAnEnclosure("restrict_to: subspace is not invariant under the Kraus operators");
  }
  std::vector<ComplexMatrix> ops;
  ops.reserve(ch.num_kraus());
  for (const ComplexMatrix& k : ch.kraus()) ops.push_back(v.basis().adjoint() * k * v.basis());
  return KrausChannel(std::move(ops));
}

bool is_minimal_enclosure(const KrausChannel& ch, const Subspace& v, const Tolerances& tol) {
  require_ambient(ch, v, "is_minimal_enclosure");
  if (v.is_zero()) return false;
  const KrausChannel restricted = restrict_to(ch, v, tol);
  if (fix_space(restricted, tol.rank).m() != 1) return false;
  const std::vector<DensityOperator> states = invariant_state_basis(restricted, tol);
  return support(states.front().matrix(), tol.support).dim() == v.dim();
}

Index EnclosureDecomposition::sum_squared_multiplicities() const {
  Index total = 0;
  for (const EnclosureBlock& b : blocks) total += b.multiplicity() * b.multiplicity();
  return total;
}

ComplexMatrix EnclosureDecomposition::compatible_basis() const {
  const Index d = ambient_dim();
  ComplexMatrix q(d, d);
  Index col = 0;
  q.middleCols(col, decaying.dim()) = decaying.basis();
  col += decaying.dim();
  for (const EnclosureBlock& b : blocks) {
    for (const Subspace& v : b.enclosures) {
      if (col + v.dim() > d) throw DecompositionFailure("decomposition overfills the space");
      q.middleCols(col, v.dim()) = v.basis();
      col += v.dim();
    }
  }
  if (col != d) throw DecompositionFailure("decomposition does not fill the space");
  return q;
}

Subspace EnclosureDecomposition::block_span(std::size_t i) const {
  const EnclosureBlock& b = blocks.at(i);
  ComplexMatrix cols(ambient_dim(), b.multiplicity() * b.block_dim());
  Index col = 0;
  for (const Subspace& v : b.enclosures) {
    cols.middleCols(col, v.dim()) = v.basis();
    col += v.dim();
  }
  return Subspace(std::move(cols));
}

void check_decomposition(const KrausChannel& ch, const EnclosureDecomposition& dec,
                         const Tolerances& tol) {
  const Index d = ch.dim();
  if (dec.ambient_dim() != d) throw DecompositionFailure("ambient dimension mismatch");

  std::vector<const Subspace*> parts{&dec.decaying};
  Index total = dec.decaying.dim();
  for (const EnclosureBlock& b : dec.blocks) {
    if (b.enclosures.empty()) throw DecompositionFailure("block without enclosures");
    for (const Subspace& v : b.enclosures) {
      if (v.dim() != b.block_dim()) {
        throw DecompositionFailure("enclosure dimension differs from its block's d_i");
      }
      if (!is_minimal_enclosure(ch, v, tol)) {
        throw DecompositionFailure("block member is not a minimal enclosure");
      }
      parts.push_back(&v);
      total += v.dim();
    }
    if (hermitian_eig(b.rho.matrix()).values(0) <= kMinRhoEigenvalue) {
      throw DecompositionFailure("block density factor is not strictly positive");
    }
  }
  if (total != d) {
    throw DecompositionFailure("dimensions sum to " + std::to_string(total) + ", expected " +
                               std::to_string(d));
  }
  for (std::size_t a = 0; a < parts.size(); ++a) {
    for (std::size_t b = a + 1; b < parts.size(); ++b) {
      if (!is_orthogonal(*parts[a], *parts[b], 10 * tol.subspace)) {
        throw DecompositionFailure("decomposition parts are not orthogonal");
      }
    }
  }
  const Index m = fix_space(ch, tol.rank).m();
  if (dec.sum_squared_multiplicities() != m) {
    throw DecompositionFailure("sum of squared multiplicities is " +
                               std::to_string(dec.sum_squared_multiplicities()) +
                               " but the fix space has dimension " + std::to_string(m));
  }
}

EnclosureDecomposition minimal_enclosure_decomposition(const KrausChannel& ch,
                                                       std::uint64_t seed,
                                                       const Tolerances& tol) {
  std::string last_error;
  for (int attempt = 0; attempt <= kMaxRetries; ++attempt) {
    Rng rng(seed + static_cast<std::uint64_t>(attempt));
    try {
      return decompose_once(ch, rng, tol);
    } catch (const DecompositionFailure& e) {
      last_error = e.what();
    } catch (const NotAnEnclosure& e) {
      last_error = e.what();
    } catch (const SpanDeficit& e) {
      last_error = e.what();
    }
  }
  throw DecompositionFailure("minimal enclosure decomposition failed after " +
                             std::to_string(kMaxRetries) + " retries: " + last_error);
}

bool respects(const ComplexMatrix& x, const EnclosureDecomposition& dec, double tol) {
  const Index d = dec.ambient_dim();
  if (x.rows() != d || x.cols() != d) {
    throw DimensionMismatch("respects: operator does not match the decomposition");
  }
  const double bound = tol * spectral_norm(x);
  const ComplexMatrix q = dec.compatible_basis();
  const ComplexMatrix y = q.adjoint() * x * q;

  // Block label of each compatible-basis coordinate; -1 marks D.
  std::vector<int> label(static_cast<std::size_t>(d), -1);
  Index pos = dec.decaying.dim();
  for (std::size_t i = 0; i < dec.blocks.size(); ++i) {
    const Index width = dec.blocks[i].multiplicity() * dec.blocks[i].block_dim();
    for (Index c = 0; c < width; ++c) label[static_cast<std::size_t>(pos + c)] = static_cast<int>(i);
    pos += width;
  }
  for (Index r = 0; r < d; ++r) {
    for (Index c = 0; c < d; ++c) {
      const int lr = label[static_cast<std::size_t>(r)];
      const int lc = label[static_cast<std::size_t>(c)];
      if ((lr == -1 || lc == -1 || lr != lc) && std::abs(y(r, c)) > bound) return false;
    }
  }

  pos = dec.decaying.dim();
  for (const EnclosureBlock& b : dec.blocks) {
    const Index m = b.multiplicity();
    const Index n = b.block_dim();
    const ComplexMatrix& rho = b.rho.matrix();
    for (Index j = 0; j < m; ++j) {
      for (Index k = 0; k < m; ++k) {
        const auto sub = y.block(pos + j * n, pos + k * n, n, n);
        const Complex a = sub.trace();
        if (max_abs(sub - a * rho) > bound) return false;
      }
    }
    pos += m * n;
  }
  return true;
}

std::vector<Subspace> sample_minimal_enclosures(const KrausChannel& ch, int draws,
                                                std::uint64_t seed, const Tolerances& tol) {
  Rng rng(seed);
  const Superoperator limit = cesaro_limit(ch, tol);
  std::vector<Subspace> out;
  for (int draw = 0; draw < draws; ++draw) {
    const ComplexMatrix h = random_hermitian_fixed_point(limit, rng);
    const EigenDecomposition eig = hermitian_eig(h);
    const double scale = eig.values.cwiseAbs().maxCoeff();
    for (Index k = 0; k < eig.values.size(); ++k) {
      if (std::abs(eig.values(k)) <= tol.support * scale) continue;
      const Subspace closure =
          enclosure_closure(ch, Subspace(eig.vectors.col(k)), tol.subspace);
      if (is_minimal_enclosure(ch, closure, tol)) out.push_back(closure);
    }
  }
  return out;
}

bool satisfies_block_containment(const EnclosureDecomposition& dec,
                                 const std::vector<Subspace>& minimal_enclosures,
                                 double tol) {
  for (const Subspace& x : minimal_enclosures) {
    for (std::size_t i = 0; i < dec.blocks.size(); ++i) {
      const Subspace w = dec.block_span(i);
      if (!is_orthogonal(x, w, tol) && !is_contained(x, w, tol)) return false;
    }
  }
  return true;
}

namespace {

Complex hs_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
  return (a.conjugate().cwiseProduct(b)).sum();
}

// Match every nonzero operator of `from` to a proportional one of `to`.
std::optional<std::size_t> match_all(const std::vector<ComplexMatrix>& from,
                                     const std::vector<ComplexMatrix>& to, double tol,
                                     std::vector<ProportionalMatch>& matches) {
  for (std::size_t i = 0; i < from.size(); ++i) {
    const double ni = from[i].norm();
    if (ni <= kZeroKraus) continue;
    bool found = false;
    for (std::size_t j = 0; j < to.size() && !found; ++j) {
      const double nj = to[j].norm();
      if (nj <= kZeroKraus) continue;
      const Complex inner = hs_inner(to[j], from[i]);
      if (std::abs(inner) >= (1.0 - tol) * ni * nj) {
        matches.push_back({i, j, inner / (nj * nj)});
        found = true;
      }
    }
    if (!found) return i;
  }
  return std::nullopt;
}

}  // namespace

EquivalenceReport equivalence_report(const KrausChannel& a, const KrausChannel& b,
                                     double tol) {
  if (a.dim() != b.dim()) {
    throw DimensionMismatch("combinatorial equivalence needs channels on the same space");
  }
  EquivalenceReport report;
  if (auto miss = match_all(a.kraus(), b.kraus(), tol, report.forward)) {
    report.unmatched = std::make_pair(0, *miss);
    return report;
  }
  if (auto miss = match_all(b.kraus(), a.kraus(), tol, report.backward)) {
    report.unmatched = std::make_pair(1, *miss);
    return report;
  }
  report.equivalent = true;
  return report;
}

bool combinatorially_equivalent(const KrausChannel& a, const KrausChannel& b, double tol) {
  return equivalence_report(a, b, tol).equivalent;
}

}  // namespace qautomata
