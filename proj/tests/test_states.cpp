// Copyright 2026 The qdistill developers.
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

#include <cmath>
#include <limits>

#include "doctest.h"
#include "oracles.hpp"
#include "qdistill/dynamics.hpp"
#include "qdistill/states.hpp"

using namespace qdistill;
using namespace qdistill::testing;

namespace {

Matrix4 projector(const Vector4& v) { return v * v.adjoint(); }

}  // namespace

TEST_SUITE("states") {

TEST_CASE("a single-component mixture is the pure projector") {
  const DensityMatrix rho = from_mixture(
      PureStateMixture{{{1.0, bell_vector(BellState::PhiMinus)}}});
  CHECK((rho.matrix() - projector(bell_vector(BellState::PhiMinus)))
            .cwiseAbs()
            .maxCoeff() < 1e-15);
}

TEST_CASE("the half |++> half Phi+ mixture lands on the rank-2 matrix") {
  const DensityMatrix rho = from_mixture(PureStateMixture{{
      {0.5, basis_ket(0)},
      {0.5, bell_vector(BellState::PhiPlus)},
  }});
  Matrix4 expected = Matrix4::Zero();
  expected(0, 0) = 0.5;
  expected(1, 1) = expected(2, 2) = expected(1, 2) = expected(2, 1) = 0.25;
  CHECK((rho.matrix() - expected).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("the equal Bell mixture is maximally mixed") {
  const DensityMatrix rho = from_mixture(PureStateMixture{{
      {0.25, bell_vector(BellState::PhiPlus)},
      {0.25, bell_vector(BellState::PhiMinus)},
      {0.25, bell_vector(BellState::PsiPlus)},
      {0.25, bell_vector(BellState::PsiMinus)},
  }});
  CHECK((rho.matrix() - Matrix4::Identity() * 0.25).cwiseAbs().maxCoeff() <
        1e-15);
}

TEST_CASE("mixtures reject nonpositive weights and bad sums") {
  CHECK_THROWS_AS(PureStateMixture({{0.0, basis_ket(0)}, {1.0, basis_ket(1)}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(PureStateMixture({{-0.1, basis_ket(0)}, {1.1, basis_ket(1)}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(PureStateMixture({{0.3, basis_ket(0)}, {0.3, basis_ket(1)}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(PureStateMixture({}), std::invalid_argument);
  CHECK_THROWS_AS(PureStateMixture({{1.0, Vector4(2.0 * basis_ket(0))}}),
                  std::invalid_argument);
}

TEST_CASE("random mixtures always validate as density matrices") {
  std::mt19937 rng(21);
  std::uniform_real_distribution<double> uniform(0.05, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<WeightedPureState> parts;
    double total = 0.0;
    for (int i = 0; i < 3; ++i) {
      parts.push_back({uniform(rng), random_pure(rng)});
      total += parts.back().probability;
    }
    for (auto& part : parts) part.probability /= total;
    CHECK_NOTHROW(from_mixture(PureStateMixture(std::move(parts))));
  }
}

TEST_CASE("rank-2 family: concurrence equals the Phi+ weight") {
  for (const double p1 : {0.1, 0.5, 0.9}) {
    CHECK(concurrence(rank2_state(p1)) == doctest::Approx(p1).epsilon(1e-12));
  }
}

TEST_CASE("rank-2 family at p1 = 1/2 has eigenvalues {0, 0, 1/2, 1/2}") {
  const HermitianEigen eig = hermitian_eigen(rank2_state(0.5).matrix());
  CHECK(std::abs(eig.values(0)) < 1e-12);
  CHECK(std::abs(eig.values(1)) < 1e-12);
  CHECK(eig.values(2) == doctest::Approx(0.5));
  CHECK(eig.values(3) == doctest::Approx(0.5));
}

TEST_CASE("rank-2 family rejects endpoint weights") {
  CHECK_THROWS_AS(rank2_state(0.0), std::domain_error);
  CHECK_THROWS_AS(rank2_state(1.0), std::domain_error);
  CHECK_THROWS_AS(rank2_state(-0.1), std::domain_error);
  CHECK_THROWS_AS(rank2_state(1.1), std::domain_error);
}

TEST_CASE("the d = b = c = a/2 = 1/2 entries reproduce the rank-2 state") {
  const DensityMatrix lhs = nondiagonal_state({1.0, 0.5, 0.5, 0.5});
  const DensityMatrix rhs = rank2_state(0.5);
  CHECK((lhs.matrix() - rhs.matrix()).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("the d = 0 member of the family is diag(1/2, 1/4, 1/4, 0)") {
  const DensityMatrix rho = nondiagonal_state({1.0, 0.5, 0.5, 0.0});
  Matrix4 expected = Matrix4::Zero();
  expected(0, 0) = 0.5;
  expected(1, 1) = expected(2, 2) = 0.25;
  CHECK((rho.matrix() - expected).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("a = b with c = d = 0 gives the diagonal product-like state") {
  const DensityMatrix rho = nondiagonal_state({1.0, 1.0, 0.0, 0.0});
  Matrix4 expected = Matrix4::Zero();
  expected(0, 0) = 0.5;
  expected(2, 2) = 0.5;
  CHECK((rho.matrix() - expected).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("an oversized coherence is rejected with the eigenvalue named") {
  CHECK_THROWS_WITH_AS(nondiagonal_state({1.0, 0.5, 0.5, 0.7}),
                       doctest::Contains("min eigenvalue"),
                       std::invalid_argument);
}

TEST_CASE("Bell states have unit concurrence, |++> has none") {
  CHECK(concurrence(from_mixture(PureStateMixture{
            {{1.0, bell_vector(BellState::PhiMinus)}}})) ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(concurrence(from_mixture(PureStateMixture{{{1.0, basis_ket(0)}}})) ==
        0.0);
}

TEST_CASE("the vacuum-evolved singlet at gamma t = ln 2 has concurrence 1/2") {
  const DensityMatrix rho = vacuum_solution(std::log(2.0), 1.0);
  CHECK(concurrence(rho) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("concurrence is invariant under local unitaries") {
  std::mt19937 rng(22);
  for (int trial = 0; trial < 50; ++trial) {
    const Matrix4 rho = random_density(rng);
    const MatrixX local = tensor(random_unitary2(rng), random_unitary2(rng));
    const Matrix4 rotated = Matrix4(local * rho * local.adjoint());
    CHECK(std::abs(concurrence(DensityMatrix(rho)) -
                   concurrence(DensityMatrix(rotated))) < 1e-8);
  }
}

TEST_CASE("Wootters agrees with the X-state closed form") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const Matrix4 x = random_x_state(rng);
    CHECK(std::abs(concurrence(DensityMatrix(x)) - x_state_concurrence(x)) <
          1e-9);
  }
}

TEST_CASE("PPT: equal Bell mixture separable, singlet not, d = 0.3 family not") {
  CHECK(ppt_is_separable(DensityMatrix::maximally_mixed()));
  CHECK_FALSE(ppt_is_separable(
      from_mixture(PureStateMixture{{{1.0, bell_vector(BellState::PhiMinus)}}})));
  // Entangled but (by the family taxonomy) still quasi-separable: the partial
  // transpose picks up a negative eigenvalue from the [[1/2, 0.15], [0.15, 0]]
  // corner block.
  CHECK_FALSE(ppt_is_separable(nondiagonal_state({1.0, 0.5, 0.5, 0.3})));
}

TEST_CASE("for pure states PPT separability coincides with zero concurrence") {
  std::mt19937 rng(24);
  for (int trial = 0; trial < 50; ++trial) {
    // Alternate product states and generic (usually entangled) pure states.
    Vector4 psi;
    if (trial % 2 == 0) {
      Eigen::Vector2cd a, b;
      a << random_complex(rng), random_complex(rng);
      b << random_complex(rng), random_complex(rng);
      a.normalize();
      b.normalize();
      psi << a(0) * b(0), a(0) * b(1), a(1) * b(0), a(1) * b(1);
    } else {
      psi = random_pure(rng);
    }
    const DensityMatrix rho = from_mixture(PureStateMixture{{{1.0, psi}}});
    CHECK(ppt_is_separable(rho) == (concurrence(rho) < 1e-7));
  }
}

TEST_CASE("fidelity against pure states") {
  const DensityMatrix phi_plus = from_mixture(
      PureStateMixture{{{1.0, bell_vector(BellState::PhiPlus)}}});
  CHECK(fidelity_with_pure(phi_plus, bell_vector(BellState::PhiPlus)) ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(fidelity_with_pure(DensityMatrix::maximally_mixed(),
                           bell_vector(BellState::PsiMinus)) ==
        doctest::Approx(0.25).epsilon(1e-12));
  // The Phi- weight of the vacuum-evolved singlet at gamma t = 1 is e^{-1}.
  CHECK(fidelity_with_pure(vacuum_solution(1.0, 1.0),
                           bell_vector(BellState::PhiMinus)) ==
        doctest::Approx(std::exp(-1.0)).epsilon(1e-12));
  CHECK_THROWS_AS(
      fidelity_with_pure(phi_plus, Vector4(2.0 * basis_ket(0))),
      std::invalid_argument);
}

TEST_CASE("density matrix validation rejects bad inputs") {
  Matrix4 not_hermitian = Matrix4::Identity() * 0.25;
  not_hermitian(0, 1) = 0.1;
  CHECK_THROWS_AS(DensityMatrix{not_hermitian}, std::invalid_argument);

  CHECK_THROWS_WITH_AS(DensityMatrix{Matrix4(Matrix4::Identity() * 0.3)},
                       doctest::Contains("trace"), std::invalid_argument);

  Matrix4 indefinite = Matrix4::Zero();
  indefinite(0, 0) = 1.1;
  indefinite(1, 1) = -0.1;
  CHECK_THROWS_WITH_AS(DensityMatrix{indefinite},
                       doctest::Contains("positive semidefinite"),
                       std::invalid_argument);

  Matrix4 poisoned = Matrix4::Identity() * 0.25;
  poisoned(2, 2) = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_WITH_AS(DensityMatrix{poisoned}, doctest::Contains("finite"),
                       std::invalid_argument);
}

}  // TEST_SUITE
