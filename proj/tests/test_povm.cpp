// Copyright 2026 The povmkit authors
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

#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace povmkit;
using namespace povmkit::testing;
using Catch::Approx;

namespace {

Povm noisy_binary() {  // (A/2 + 1/4, B/2 + 1/4) on the computational basis
  return Povm({0.5 * ket_projector(2, 0) + 0.25 * HermitianOperator::identity(2),
               0.5 * ket_projector(2, 1) + 0.25 * HermitianOperator::identity(2)});
}

}  // namespace

TEST_CASE("validate accepts projective pairs and reports violations", "[povm]") {
  CHECK(validate(Povm({ket_projector(2, 0), ket_projector(2, 1)})).empty());

  const auto sum_broken = validate(Povm({ket_projector(2, 0), ket_projector(2, 0)}));
  REQUIRE(sum_broken.size() == 1);
  CHECK(sum_broken[0].kind == ValidationIssue::Kind::completeness);
  CHECK(sum_broken[0].magnitude == Approx(1.0));

  // eigenvalues (1.5, -0.5) and its completion: two PSD violations
  ComplexMatrix first(2, 2);
  first << 1.5, 0, 0, -0.5;
  ComplexMatrix second(2, 2);
  second << -0.5, 0, 0, 1.5;
  const auto psd_broken = validate(Povm({HermitianOperator(first), HermitianOperator(second)}));
  REQUIRE(psd_broken.size() == 2);
  CHECK(psd_broken[0].kind == ValidationIssue::Kind::psd);
  CHECK(psd_broken[0].magnitude == Approx(-0.5));
  CHECK(psd_broken[0].element == 0);
}

TEST_CASE("measure produces the expected distributions", "[povm]") {
  const DensityMatrix ground(ket_projector(2, 0));

  // direct trace oracle: tr((A/2 + 1/4) |0><0|) = 3/4
  const auto d1 = measure(noisy_binary(), ground);
  CHECK(d1.probs[0] == Approx(0.75));
  CHECK(d1.probs[1] == Approx(0.25));
  CHECK(d1.volumes[0] == Approx(1.0));

  const auto d2 = measure(trivial_povm(3), random_density(3, StateEnsemble::hilbert_schmidt, 3));
  REQUIRE(d2.probs.size() == 1);
  CHECK(d2.probs[0] == Approx(1.0));
  CHECK(d2.volumes[0] == Approx(3.0));

  const Povm doubly_noisy({0.25 * ket_projector(2, 0) + 0.375 * HermitianOperator::identity(2),
                           0.25 * ket_projector(2, 1) + 0.375 * HermitianOperator::identity(2)});
  const auto d3 = measure(doubly_noisy, ground);
  CHECK(d3.probs[0] == Approx(5.0 / 8.0));
  CHECK(d3.probs[1] == Approx(3.0 / 8.0));

  CHECK_THROWS_AS(measure(noisy_binary(), random_density(3, StateEnsemble::pure, 1)),
                  std::invalid_argument);
}

TEST_CASE("measure sums to one over random POVM/state pairs", "[povm]") {
  for (std::uint64_t s = 0; s < 10000; ++s) {
    const int d = 2 + static_cast<int>(s % 3);
    const int k = 2 + static_cast<int>(s % 4);
    const auto m = random_povm(d, k, Rng::derive(500, s));
    const auto rho = random_density(
        d, s % 2 ? StateEnsemble::pure : StateEnsemble::hilbert_schmidt, Rng::derive(501, s));
    const auto dist = measure(m, rho);
    double sum = 0.0, vol = 0.0;
    for (double p : dist.probs) sum += p;
    for (double v : dist.volumes) vol += v;
    REQUIRE(sum == Approx(1.0).margin(1e-9));
    REQUIRE(vol == Approx(static_cast<double>(d)).margin(1e-9));
  }
}

TEST_CASE("trivial_povm is the identity measurement", "[povm]") {
  const auto t = trivial_povm(2);
  REQUIRE(t.size() == 1);
  CHECK((t.element(0).matrix() - ComplexMatrix::Identity(2, 2)).norm() == 0.0);
  CHECK_THROWS_AS(trivial_povm(0), std::invalid_argument);
}

TEST_CASE("disjoint_convex keeps blocks, tags labels and stays valid", "[povm]") {
  const Povm a({ket_projector(2, 0), ket_projector(2, 1)}, {"x", "y"});
  const Povm b({0.5 * HermitianOperator::identity(2), 0.5 * HermitianOperator::identity(2)});

  const auto degenerate = disjoint_convex(1.0, a, b);
  REQUIRE(degenerate.size() == 4);
  CHECK(degenerate.element(2).hs_norm() == 0.0);
  CHECK(degenerate.labels()[0] == "a:x");
  CHECK(degenerate.labels()[2] == "b:0");

  const Povm five = disjoint_convex(0.5, a, random_povm(2, 3, 9));
  REQUIRE(five.size() == 5);
  CHECK(validate(five).empty());

  const auto n_lambda = disjoint_convex(1.0 / 64, a, trivial_povm(2));
  CHECK(n_lambda.element(0).trace() == Approx(1.0 / 64));
  CHECK(n_lambda.element(2).trace() == Approx(63.0 / 32));
  CHECK(validate(n_lambda).empty());

  for (double lam : {0.0, 0.3, 1.0}) {
    CHECK(validate(disjoint_convex(lam, a, b)).empty());
  }
  CHECK_THROWS_AS(disjoint_convex(1.5, a, b), std::invalid_argument);
}

TEST_CASE("is_projective detects orthogonal projector families", "[povm]") {
  CHECK(is_projective(Povm({ket_projector(2, 0), ket_projector(2, 1)})));
  CHECK_FALSE(is_projective(noisy_binary()));
  CHECK(is_projective(trivial_povm(3)));
  for (std::uint64_t s = 0; s < 20; ++s) {
    CHECK(is_projective(random_projective(4, 2 + static_cast<int>(s % 3), Rng::derive(321, s))));
  }
}

TEST_CASE("is_linearly_independent matches rank intuition", "[povm]") {
  CHECK(is_linearly_independent(Povm({ket_projector(2, 0), ket_projector(2, 1)})));

  // the third element is twice the sum of the first two: rank deficient
  const Povm dependent({0.5 * ket_projector(2, 0), 0.5 * ket_projector(2, 1),
                        0.5 * HermitianOperator::identity(2)});
  CHECK_FALSE(is_linearly_independent(dependent));

  const Povm padded({ket_projector(2, 0), ket_projector(2, 1), HermitianOperator::zero(2)});
  CHECK_FALSE(is_linearly_independent(padded));
}

TEST_CASE("projective POVMs without zero elements are linearly independent", "[povm]") {
  for (std::uint64_t s = 0; s < 30; ++s) {
    const auto p = random_projective(4, 2 + static_cast<int>(s % 3), Rng::derive(654, s));
    CHECK(is_linearly_independent(p));
  }
}

TEST_CASE("canonical_form merges proportional elements and drops zeros", "[povm]") {
  const Povm split({0.5 * ket_projector(2, 0), 0.5 * ket_projector(2, 0), ket_projector(2, 1)});
  const auto cf = canonical_form(split);
  REQUIRE(cf.atoms.size() == 2);
  for (const auto& atom : cf.atoms) {
    CHECK(atom.volume == Approx(1.0));
    CHECK(atom.direction.trace() == Approx(1.0));
  }

  const auto cf_trivial = canonical_form(trivial_povm(2));
  REQUIRE(cf_trivial.atoms.size() == 1);
  CHECK(cf_trivial.atoms[0].volume == Approx(2.0));
  CHECK(cf_trivial.atoms[0].direction.matrix()(0, 0).real() == Approx(0.5));

  // proportionality oracle: the two noisy-binary effects are not scalar
  // multiples of each other, so two atoms survive
  const auto cf_noisy = canonical_form(noisy_binary());
  CHECK(proportionality_defect(noisy_binary().element(0), noisy_binary().element(1)) > 1e-3);
  CHECK(cf_noisy.atoms.size() == 2);
}

TEST_CASE("canonical_form is invariant under relabeling rewrites", "[povm]") {
  for (std::uint64_t s = 0; s < 40; ++s) {
    const int d = 2 + static_cast<int>(s % 2);
    const auto m = random_povm(d, 2 + static_cast<int>(s % 3), Rng::derive(777, s));
    const auto rewritten = equivalent_variant(m, Rng::derive(778, s));
    CHECK(canonical_equal(canonical_form(m), canonical_form(rewritten)));
    CHECK_FALSE(canonical_equal(canonical_form(m), canonical_form(trivial_povm(d))));
  }
}

TEST_CASE("canonical forms separate genuinely different POVMs", "[povm]") {
  CHECK(canonical_equal(canonical_form(trivial_povm(2)),
                        canonical_form(Povm({0.5 * HermitianOperator::identity(2),
                                             0.5 * HermitianOperator::identity(2)}))));
  CHECK_FALSE(canonical_equal(canonical_form(Povm({ket_projector(2, 0), ket_projector(2, 1)})),
                              canonical_form(noisy_binary())));
}
