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

#include "oracles.hpp"
#include "qautomata/channel.hpp"
#include "qautomata/errors.hpp"
#include "qautomata/random.hpp"

using namespace qautomata;
using Catch::Matchers::WithinAbs;

namespace {

std::vector<KrausChannel> sample_channels() {
  Rng rng(2024);
  std::vector<KrausChannel> out{identity_channel(2), depolarizing_channel(2),
                                amplitude_damping_channel(0.3)};
  for (Index d = 1; d <= 4; ++d) {
    for (Index r = 1; r <= 3; ++r) out.push_back(random_channel(d, r, rng));
  }
  ChannelStructure s{{BlockSpec{2, 2, 2}}, 1};
  out.push_back(random_structured_channel(s, rng));
  return out;
}

}  // namespace

TEST_CASE("KrausChannel construction checks shapes only", "[channel]") {
  CHECK_THROWS_AS(KrausChannel({}), InvalidChannel);
  CHECK_THROWS_AS(KrausChannel({ComplexMatrix::Identity(2, 3)}), DimensionMismatch);
  CHECK_THROWS_AS(KrausChannel({ComplexMatrix::Identity(2, 2), ComplexMatrix::Identity(3, 3)}),
                  DimensionMismatch);
  CHECK_THROWS_AS(KrausChannel({ComplexMatrix::Constant(1, 1, std::nan(""))}), InvalidInput);
  const KrausChannel half({0.5 * ComplexMatrix::Identity(2, 2)});
  CHECK(half.num_kraus() == 1);
}

TEST_CASE("validate", "[channel]") {
  CHECK(validate(identity_channel(2)).tp_residual == 0.0);

  const KrausChannel ad = amplitude_damping_channel(0.3);
  CHECK(ad[0](1, 1) == Complex(std::sqrt(0.7)));
  CHECK(ad[1](0, 1) == Complex(std::sqrt(0.3)));
  CHECK(validate(ad).tp_residual < 1e-15);

  CHECK_THROWS_AS(validate(KrausChannel({0.5 * ComplexMatrix::Identity(2, 2)})), InvalidChannel);

  for (const KrausChannel& ch : sample_channels()) {
    const ValidationReport r = validate_loaded(ch);
    CHECK(r.tp_residual < 1e-12);
    CHECK(r.cp_min_choi_eigenvalue > -1e-12);
  }
}

TEST_CASE("apply", "[channel]") {
  Rng rng(4);
  const DensityOperator rho = random_density(2, rng);
  const ComplexMatrix out = qautomata::apply(depolarizing_channel(2), rho.matrix());
  CHECK(max_abs(out - 0.5 * ComplexMatrix::Identity(2, 2)) < 1e-15);
  CHECK(qautomata::apply(identity_channel(2), rho.matrix()) == rho.matrix());
  const ComplexMatrix ground = qautomata::apply(amplitude_damping_channel(1.0),
                                     DensityOperator::basis_state(2, 1).matrix());
  CHECK(max_abs(ground - DensityOperator::basis_state(2, 0).matrix()) < 1e-15);
  CHECK_THROWS_AS(qautomata::apply(identity_channel(2), ComplexMatrix::Identity(3, 3)), DimensionMismatch);
}

TEST_CASE("superoperator", "[channel]") {
  CHECK(superoperator(identity_channel(2)).matrix == ComplexMatrix::Identity(4, 4));

  // Column stacking: vec(U X U†) = (conj(U) ⊗ U) vec(X), so U = diag(1, i)
  // maps E_00, E_10, E_01, E_11 to themselves times 1, i, −i, 1.
  ComplexMatrix u = ComplexMatrix::Identity(2, 2);
  u(1, 1) = Complex(0, 1);
  const ComplexMatrix s = superoperator(unitary_channel(u)).matrix;
  ComplexMatrix expected = ComplexMatrix::Zero(4, 4);
  expected.diagonal() << 1.0, Complex(0, 1), Complex(0, -1), 1.0;
  CHECK(max_abs(s - expected) < 1e-15);

  SECTION("depolarizing has eigenvalues {1,0,0,0}") {
    const oracle::RVec moduli =
        oracle::eigenvalue_moduli(superoperator(depolarizing_channel(2)).matrix);
    std::vector<double> sorted(moduli.data(), moduli.data() + moduli.size());
    std::sort(sorted.begin(), sorted.end());
    CHECK_THAT(sorted[3], WithinAbs(1.0, 1e-12));
    CHECK_THAT(sorted[2], WithinAbs(0.0, 1e-12));
  }

  SECTION("matches the matrix-unit oracle and round-trips vec") {
    for (const KrausChannel& ch : sample_channels()) {
      const Superoperator sup = superoperator(ch);
      CHECK(max_abs(sup.matrix - oracle::superoperator_by_action(ch.kraus())) < 1e-12);
      Rng rng(8);
      for (int trial = 0; trial < 50; ++trial) {
        const ComplexMatrix x = random_hermitian(ch.dim(), rng);
        const ComplexMatrix direct = qautomata::apply(ch, x);
        CHECK(max_abs(sup.apply(x) - direct) < 1e-9);
        CHECK(std::abs(direct.trace() - x.trace()) < 1e-9);
      }
    }
  }

  SECTION("spectral radius one with an eigenvalue at one") {
    for (const KrausChannel& ch : sample_channels()) {
      const oracle::Mat s_ch = superoperator(ch).matrix;
      CHECK(oracle::eigenvalue_moduli(s_ch).maxCoeff() <= 1.0 + 1e-7);
      CHECK(oracle::eigenvalue_one_multiplicity(s_ch, 1e-7) >= 1);
    }
  }
}

TEST_CASE("choi matrix", "[channel]") {
  const ComplexMatrix c = choi_matrix(identity_channel(2));
  CHECK(c.rows() == 4);
  CHECK_THAT(c.trace().real(), WithinAbs(2.0, 1e-15));  // tr = d
}

TEST_CASE("mix", "[channel]") {
  const KrausChannel a = amplitude_damping_channel(0.4);
  const KrausChannel b = depolarizing_channel(2);
  CHECK(mix(a, b, 0.0).num_kraus() == a.num_kraus());
  CHECK(mix(a, b, 1.0).num_kraus() == b.num_kraus());
  CHECK(mix(a, b, 0.0)[1] == a[1]);
  CHECK(mix(a, b, 1.0)[3] == b[3]);

  Rng rng(1);
  const ComplexMatrix x = random_hermitian(2, rng);
  const KrausChannel same = mix(identity_channel(2), identity_channel(2), 0.5);
  CHECK(max_abs(qautomata::apply(same, x) - x) < 1e-15);

  for (double p : {0.0, 0.25, 0.5, 0.75, 1.0}) {
    const ComplexMatrix expected = (1 - p) * qautomata::apply(a, x) + p * qautomata::apply(b, x);
    CHECK(max_abs(qautomata::apply(mix(a, b, p), x) - expected) < 1e-12);
  }
  CHECK_THROWS_AS(mix(a, b, -0.1), InvalidProbability);
  CHECK_THROWS_AS(mix(a, b, 1.5), InvalidProbability);
  CHECK_THROWS_AS(mix(a, b, std::nan("")), InvalidProbability);
  CHECK_THROWS_AS(mix(a, identity_channel(3), 0.5), DimensionMismatch);
}

TEST_CASE("DensityOperator invariants", "[channel]") {
  CHECK_THROWS_AS(DensityOperator(ComplexMatrix::Identity(2, 2)), InvalidState);
  ComplexMatrix neg = ComplexMatrix::Zero(2, 2);
  neg(0, 0) = 1.5;
  neg(1, 1) = -0.5;
  CHECK_THROWS_AS(DensityOperator(neg), InvalidState);
  ComplexMatrix skew = 0.5 * ComplexMatrix::Identity(2, 2);
  skew(0, 1) = 0.1;
  CHECK_THROWS_AS(DensityOperator(skew), InvalidInput);
  CHECK_THAT(DensityOperator::maximally_mixed(4).matrix().trace().real(), WithinAbs(1.0, 1e-15));
  ComplexVector psi(2);
  psi << 3.0, Complex(0, 4.0);
  CHECK_THAT(DensityOperator::pure(psi).matrix()(1, 1).real(), WithinAbs(0.64, 1e-15));
}

TEST_CASE("random channels", "[channel][random]") {
  const KrausChannel scalar = random_channel(1, 1, 77);
  CHECK(scalar[0](0, 0) == Complex(1.0, 0.0));
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const KrausChannel ch = random_channel(4, 3, seed);
    CHECK(validate(ch).tp_residual <= 1e-10);
  }
  const KrausChannel a = random_channel(3, 2, 5);
  const KrausChannel b = random_channel(3, 2, 5);
  CHECK(a[0] == b[0]);
  CHECK(a[1] == b[1]);
}
