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


#include <catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "qautomata/enclosures.hpp"
#include "qautomata/errors.hpp"
#include "qautomata/fixed_points.hpp"
#include "qautomata/random.hpp"

using namespace qautomata;

namespace {

Subspace line(Index n, Index i) {
  ComplexVector v = ComplexVector::Zero(n);
  v(i) = 1.0;
  return Subspace(v);
}

std::vector<KrausChannel> structured_bag(std::uint64_t seed, int count) {
  Rng rng(seed);
  std::vector<KrausChannel> out;
  for (int k = 0; k < count; ++k) {
    out.push_back(random_structured_channel(random_structure(2 + k % 5, rng), rng));
  }
  return out;
}

// States supported in V stay supported in V, tested on `draws` random states.
bool propagates_support(const KrausChannel& ch, const Subspace& v, int draws, Rng& rng) {
  for (int k = 0; k < draws; ++k) {
    const ComplexMatrix sigma = random_density(v.dim(), rng).matrix();
    const ComplexMatrix rho = v.basis() * sigma * v.basis().adjoint();
    if (oracle::weight_outside(oracle::apply(ch.kraus(), rho), v.basis()) > 1e-9) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("is_enclosure", "[enclosures]") {
  const KrausChannel ad = amplitude_damping_channel(0.5);
  CHECK(is_enclosure(ad, Subspace::full(2)));
  CHECK(is_enclosure(ad, Subspace::zero(2)));
  CHECK(is_enclosure(ad, line(2, 0)));
  CHECK_FALSE(is_enclosure(ad, line(2, 1)));
  CHECK_THROWS_AS(is_enclosure(ad, Subspace::full(3)), DimensionMismatch);

  SECTION("Kraus criterion agrees with support propagation") {
    Rng rng(314);
    int disagreements = 0;
    for (const KrausChannel& ch : structured_bag(5, 30)) {
      const Index d = ch.dim();
      const std::vector<Subspace> candidates{
          enclosure_closure(ch, Subspace(random_ginibre(d, 1, rng).normalized())),
          orthonormal_span(random_ginibre(d, 1 + d / 2, rng), 1e-10),
          recurrent_and_decaying(ch).recurrent};
      for (const Subspace& v : candidates) {
        if (is_enclosure(ch, v) != propagates_support(ch, v, 20, rng)) ++disagreements;
      }
    }
    CHECK(disagreements == 0);
  }
}

TEST_CASE("enclosure_closure", "[enclosures]") {
  const KrausChannel ad = amplitude_damping_channel(0.5);
  CHECK(enclosure_closure(ad, Subspace::full(2)).dim() == 2);
  CHECK(enclosure_closure(ad, line(2, 1)).dim() == 2);
  const Subspace e1 = enclosure_closure(identity_channel(2), line(2, 0));
  CHECK(subspace_relation(e1, line(2, 0), 1e-9) == SubspaceRelation::kEqual);

  SECTION("idempotent, monotone and always an enclosure") {
    Rng rng(77);
    for (const KrausChannel& ch : structured_bag(6, 30)) {
      const Index d = ch.dim();
      const Subspace w = Subspace(random_ginibre(d, 1, rng).normalized());
      const Subspace bigger = span_union(w, Subspace(random_ginibre(d, 1, rng).normalized()), 1e-10);
      const Subspace c = enclosure_closure(ch, w);
      CHECK(is_enclosure(ch, c));
      CHECK(is_contained(w, c, 1e-8));
      CHECK(subspace_relation(enclosure_closure(ch, c), c, 1e-7) == SubspaceRelation::kEqual);
      CHECK(is_contained(c, enclosure_closure(ch, bigger), 1e-7));
    }
  }
}

TEST_CASE("restrict_to and is_minimal_enclosure", "[enclosures]") {
  const KrausChannel ad = amplitude_damping_channel(0.5);
  CHECK(is_minimal_enclosure(ad, line(2, 0)));
  const KrausChannel on_ground = restrict_to(ad, line(2, 0));
  CHECK(on_ground.dim() == 1);
  CHECK(fix_space(on_ground).m() == 1);
  CHECK_FALSE(is_minimal_enclosure(identity_channel(2), Subspace::full(2)));
  CHECK(is_minimal_enclosure(identity_channel(2), line(2, 0)));
  CHECK_FALSE(is_minimal_enclosure(ad, Subspace::zero(2)));
  CHECK_THROWS_AS(restrict_to(ad, line(2, 1)), NotAnEnclosure);
  CHECK_THROWS_AS(is_minimal_enclosure(ad, line(2, 1)), NotAnEnclosure);
  CHECK_THROWS_AS(restrict_to(ad, Subspace::zero(2)), InvalidInput);
}

TEST_CASE("minimal_enclosure_decomposition on hand-built channels", "[enclosures]") {
  SECTION("depolarizing") {
    const auto dec = minimal_enclosure_decomposition(depolarizing_channel(2), 1);
    CHECK(dec.decaying.is_zero());
    REQUIRE(dec.blocks.size() == 1);
    CHECK(dec.blocks[0].multiplicity() == 1);
    CHECK(dec.blocks[0].block_dim() == 2);
    CHECK(max_abs(dec.blocks[0].rho.matrix() - 0.5 * ComplexMatrix::Identity(2, 2)) < 1e-9);
  }
  SECTION("noiseless subsystem") {
    const KrausChannel ch = fixtures::noiseless_subsystem();
    CHECK(oracle::eigenvalue_one_multiplicity(oracle::superoperator_by_action(ch.kraus()), 1e-7) ==
          4);
    const auto dec = minimal_enclosure_decomposition(ch, 2);
    REQUIRE(dec.blocks.size() == 1);
    CHECK(dec.blocks[0].multiplicity() == 2);
    CHECK(dec.blocks[0].block_dim() == 2);
    CHECK(max_abs(dec.blocks[0].rho.matrix() - 0.5 * ComplexMatrix::Identity(2, 2)) < 1e-9);
    CHECK(dec.sum_squared_multiplicities() == 4);
  }
  SECTION("damped direct sum has two blocks") {
    const KrausChannel ch = fixtures::damped_direct_sum(0.5);
    CHECK(oracle::eigenvalue_one_multiplicity(oracle::superoperator_by_action(ch.kraus()), 1e-7) ==
          2);
    const auto dec = minimal_enclosure_decomposition(ch, 3);
    REQUIRE(dec.blocks.size() == 2);
    CHECK(subspace_relation(dec.decaying, line(3, 1), 1e-9) == SubspaceRelation::kEqual);
    for (const EnclosureBlock& b : dec.blocks) {
      CHECK(b.multiplicity() == 1);
      CHECK(b.block_dim() == 1);
      const Subspace& v = b.enclosures[0];
      CHECK((subspace_relation(v, line(3, 0), 1e-9) == SubspaceRelation::kEqual ||
             subspace_relation(v, line(3, 2), 1e-9) == SubspaceRelation::kEqual));
    }
  }
  SECTION("sharing a Kraus operator merges the blocks") {
    const KrausChannel ch = fixtures::damped_shared_kraus(0.5);
    const auto dec = minimal_enclosure_decomposition(ch, 4);
    REQUIRE(dec.blocks.size() == 1);
    CHECK(dec.blocks[0].multiplicity() == 2);
    CHECK(fix_space(ch).m() == 4);
  }
  SECTION("identity qubit") {
    const auto dec = minimal_enclosure_decomposition(identity_channel(2), 5);
    REQUIRE(dec.blocks.size() == 1);
    CHECK(dec.blocks[0].multiplicity() == 2);
    CHECK(dec.blocks[0].block_dim() == 1);
  }
}

TEST_CASE("decomposition invariants on random structured channels", "[enclosures]") {
  Rng rng(808);
  for (int trial = 0; trial < 25; ++trial) {
    const ChannelStructure s = random_structure(2 + trial % 6, rng);
    const KrausChannel ch = random_structured_channel(s, rng);
    const auto dec = minimal_enclosure_decomposition(ch, static_cast<std::uint64_t>(trial));
    INFO("trial " << trial);

    CHECK(dec.sum_squared_multiplicities() == fix_space(ch).m());
    CHECK(dec.sum_squared_multiplicities() == s.fix_dim());
    CHECK(dec.decaying.dim() == s.decaying_dim);

    const RecurrentSplit split = recurrent_and_decaying(ch);
    CHECK(subspace_relation(dec.decaying, split.decaying, 1e-7) == SubspaceRelation::kEqual);
    ComplexMatrix all(ch.dim(), 0);
    for (std::size_t i = 0; i < dec.blocks.size(); ++i) {
      const Subspace w = dec.block_span(i);
      all.conservativeResize(Eigen::NoChange, all.cols() + w.dim());
      all.rightCols(w.dim()) = w.basis();
    }
    CHECK(subspace_relation(orthonormal_span(all, 1e-9), split.recurrent, 1e-7) ==
          SubspaceRelation::kEqual);

    for (const DensityOperator& rho : invariant_state_basis(ch)) {
      CHECK(respects(rho.matrix(), dec, 1e-6));
    }
    const FixSpace fix = fix_space(ch);
    for (Index b = 0; b < fix.m(); ++b) CHECK(respects(fix.element(b), dec, 1e-6));

    const auto sampled = sample_minimal_enclosures(ch, 4, 1000 + trial);
    CHECK(satisfies_block_containment(dec, sampled, 1e-6));
  }
}

TEST_CASE("respects rejects off-structure operators", "[enclosures]") {
  const KrausChannel ch = fixtures::damped_direct_sum(0.5);
  const auto dec = minimal_enclosure_decomposition(ch, 9);
  CHECK(respects(ComplexMatrix::Zero(3, 3), dec, 1e-6));
  ComplexMatrix on_d = ComplexMatrix::Zero(3, 3);
  on_d(1, 1) = 1.0;
  CHECK_FALSE(respects(on_d, dec, 1e-6));
  ComplexMatrix cross = ComplexMatrix::Zero(3, 3);
  cross(0, 2) = 1.0;
  cross(2, 0) = 1.0;
  CHECK_FALSE(respects(cross, dec, 1e-6));
  CHECK_THROWS_AS(respects(ComplexMatrix::Zero(2, 2), dec, 1e-6), DimensionMismatch);

  // Inside a block with d = 2 the operator must factor as A ⊗ rho.
  const auto sub = minimal_enclosure_decomposition(fixtures::noiseless_subsystem(), 1);
  ComplexMatrix not_product = ComplexMatrix::Zero(4, 4);
  not_product(0, 0) = 1.0;
  CHECK_FALSE(respects(not_product, sub, 1e-6));
  CHECK(respects(ComplexMatrix::Identity(4, 4), sub, 1e-6));
}

TEST_CASE("combinatorial equivalence", "[enclosures]") {
  Rng rng(55);
  const KrausChannel a = random_channel(3, 2, rng);
  const KrausChannel b = random_channel(3, 3, rng);
  CHECK(combinatorially_equivalent(a, a));

  const KrausChannel m3 = mix(a, b, 0.3);
  const KrausChannel m7 = mix(a, b, 0.7);
  const EquivalenceReport report = equivalence_report(m3, m7);
  CHECK(report.equivalent);
  REQUIRE(report.forward.size() == m3.num_kraus());
  for (const ProportionalMatch& match : report.forward) {
    CHECK(match.from == match.to);
    const double expected = match.from < a.num_kraus() ? std::sqrt(0.7 / 0.3)
                                                       : std::sqrt(0.3 / 0.7);
    CHECK(std::abs(match.factor - Complex(expected, 0.0)) < 1e-12);
  }

  const EquivalenceReport no = equivalence_report(identity_channel(2), depolarizing_channel(2));
  CHECK_FALSE(no.equivalent);
  REQUIRE(no.unmatched.has_value());
  CHECK(no.unmatched->first == 0);
  CHECK(no.unmatched->second == 0);
  CHECK_THROWS_AS(equivalence_report(a, identity_channel(2)), DimensionMismatch);

  SECTION("equivalent channels share their fix dimension") {
    Rng r2(90);
    for (int trial = 0; trial < 20; ++trial) {
      const ChannelStructure s = random_structure(3, r2);
      const ComplexMatrix frame = random_unitary(3, r2);
      const KrausChannel c0 = random_structured_channel(s, frame, r2);
      const KrausChannel c1 = random_structured_channel(s, frame, r2);
      const KrausChannel p = mix(c0, c1, 0.2);
      const KrausChannel q = mix(c0, c1, 0.9);
      REQUIRE(combinatorially_equivalent(p, q));
      CHECK(fix_space(p).m() == fix_space(q).m());
    }
  }
}
