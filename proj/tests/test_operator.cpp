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

TEST_CASE("hs_inner on identities, Paulis and orthogonal projectors", "[operator]") {
  CHECK(hs_inner(HermitianOperator::identity(2), HermitianOperator::identity(2)) == Approx(2.0));
  CHECK(hs_inner(pauli_z(), pauli_z()) == Approx(2.0));
  CHECK(hs_inner(ket_projector(2, 0), ket_projector(2, 1)) == Approx(0.0).margin(1e-15));
  CHECK_THROWS_AS(hs_inner(HermitianOperator::identity(2), HermitianOperator::identity(3)),
                  std::invalid_argument);
}

TEST_CASE("hs_inner is a symmetric bilinear form with nonnegative diagonal", "[operator]") {
  for (std::uint64_t s = 0; s < 50; ++s) {
    const auto a = random_traceless(3, Rng::derive(11, 3 * s)).op();
    const auto b = random_traceless(3, Rng::derive(11, 3 * s + 1)).op();
    const auto c = random_traceless(3, Rng::derive(11, 3 * s + 2)).op();
    CHECK(hs_inner(a, b) == Approx(hs_inner(b, a)).margin(1e-12));
    const auto combo = 2.5 * b + (-1.25) * c;
    CHECK(hs_inner(a, combo) ==
          Approx(2.5 * hs_inner(a, b) - 1.25 * hs_inner(a, c)).margin(1e-12));
    CHECK(hs_inner(a, a) >= 0.0);
  }
}

TEST_CASE("min_eigenvalue on diagonal and mixed operators", "[operator]") {
  CHECK(min_eigenvalue(HermitianOperator::identity(2)) == Approx(1.0));
  const auto noisy = 0.5 * ket_projector(2, 0) + 0.25 * HermitianOperator::identity(2);
  CHECK(min_eigenvalue(noisy) == Approx(0.25));
  ComplexMatrix d(2, 2);
  d << 3, 0, 0, -2;
  CHECK(min_eigenvalue(HermitianOperator(std::move(d))) == Approx(-2.0));
  ComplexMatrix bad(2, 2);
  bad << 0, 1, 0, 0;
  CHECK_THROWS_AS(HermitianOperator(std::move(bad)), std::invalid_argument);
}

TEST_CASE("orthonormalize drops dependent operators and keeps full bases", "[operator]") {
  const auto single = orthonormalize({HermitianOperator::identity(2)});
  REQUIRE(single.size() == 1);
  CHECK(single.ops[0].hs_norm() == Approx(1.0));
  CHECK(single.ops[0].matrix()(0, 0).real() == Approx(1.0 / std::sqrt(2.0)));

  const auto dependent =
      orthonormalize({ket_projector(2, 0), ket_projector(2, 1), HermitianOperator::identity(2)});
  CHECK(dependent.size() == 2);

  const auto pauli =
      orthonormalize({pauli_x(), pauli_y(), pauli_z(), HermitianOperator::identity(2)});
  CHECK(pauli.size() == 4);

  CHECK(orthonormalize({}).size() == 0);
  CHECK(orthonormalize({HermitianOperator::zero(2)}).size() == 0);
}

TEST_CASE("project_residual coefficients and residual norms", "[operator]") {
  const auto span_x = orthonormalize({pauli_x()});
  CHECK(project_residual(pauli_z(), span_x).residual_norm == Approx(std::sqrt(2.0)));

  const auto span_id = orthonormalize({HermitianOperator::identity(2)});
  const auto p = project_residual(HermitianOperator::identity(2), span_id);
  REQUIRE(p.coefficients.size() == 1);
  CHECK(p.coefficients[0] == Approx(std::sqrt(2.0)));
  CHECK(p.residual_norm == Approx(0.0).margin(1e-14));

  // Gram oracle: residual^2 = <a,a> - <a,b>^2 for the normalized identity b
  const auto a = ket_projector(2, 0);
  const double overlap = hs_inner(a, span_id.ops[0]);
  const double expected = std::sqrt(hs_inner(a, a) - overlap * overlap);
  CHECK(expected == Approx(std::sqrt(2.0) / 2.0));
  CHECK(project_residual(a, span_id).residual_norm == Approx(expected));
}

TEST_CASE("orthonormalize and project_residual reconstruct their inputs", "[operator]") {
  for (std::uint64_t s = 0; s < 25; ++s) {
    std::vector<HermitianOperator> ops;
    Rng rng(Rng::derive(77, s));
    const int d = 2 + static_cast<int>(s % 3);
    const int count = 1 + static_cast<int>(rng.next_u64() % 6);
    for (int i = 0; i < count; ++i) {
      ops.push_back(random_traceless(d, Rng::derive(78, 10 * s + static_cast<std::uint64_t>(i))).op());
    }
    ops.push_back(ops.front() + ops.back());  // force a dependency
    const auto basis = orthonormalize(ops);
    for (const auto& op : ops) {
      CHECK(project_residual(op, basis).residual_norm <= 1e-9 * std::max(1.0, op.hs_norm()));
    }
  }
}

TEST_CASE("random_density satisfies the state invariants across ensembles", "[operator]") {
  const auto scalar = random_density(1, StateEnsemble::pure, 5);
  CHECK(scalar.matrix()(0, 0).real() == Approx(1.0));

  const auto pure = random_density(2, StateEnsemble::pure, 7);
  CHECK((pure.matrix() * pure.matrix() - pure.matrix()).norm() == Approx(0.0).margin(1e-12));

  const auto mixed = random_density(3, StateEnsemble::hilbert_schmidt, 7);
  CHECK(min_eigenvalue(mixed.op()) >= -1e-12);
  CHECK(mixed.op().trace() == Approx(1.0));

  CHECK_THROWS_AS(random_density(0, StateEnsemble::pure, 1), std::invalid_argument);

  // bulk invariant sweep; DensityMatrix construction enforces PSD and trace
  for (int d : {2, 3, 4}) {
    for (std::uint64_t s = 0; s < 10000; ++s) {
      const auto ensemble = (s % 2 == 0) ? StateEnsemble::pure : StateEnsemble::hilbert_schmidt;
      const auto rho =
          random_density(d, ensemble, Rng::derive(1234, 100000ull * static_cast<std::uint64_t>(d) + s));
      if (s % 500 == 0) {
        CHECK(rho.op().trace() == Approx(1.0));
        CHECK(min_eigenvalue(rho.op()) >= -1e-9);
      }
    }
  }
}

TEST_CASE("random_traceless is traceless, deterministic and seed-sensitive", "[operator]") {
  const auto x = random_traceless(3, 42);
  CHECK(std::abs(x.op().trace()) <= 1e-12);
  const auto y = random_traceless(3, 42);
  CHECK((x.matrix() - y.matrix()).norm() == 0.0);
  const auto z = random_traceless(3, 43);
  CHECK((x.matrix() - z.matrix()).norm() > 1e-6);
  CHECK_THROWS_AS(random_traceless(1, 1), std::invalid_argument);
}

TEST_CASE("prob_trace_distance values and triangle inequality", "[operator]") {
  CHECK(prob_trace_distance({1, 0}, {0, 1}) == Approx(1.0));
  CHECK(prob_trace_distance({0.5, 0.5}, {0.5, 0.5}) == Approx(0.0));
  CHECK(prob_trace_distance({5.0 / 8, 3.0 / 8}, {3.0 / 8, 5.0 / 8}) == Approx(0.25));
  CHECK_THROWS_AS(prob_trace_distance({1, 0}, {1}), std::invalid_argument);

  for (std::uint64_t s = 0; s < 200; ++s) {
    Rng rng(Rng::derive(99, s));
    const auto draw = [&] {
      std::vector<double> v(4);
      double sum = 0;
      for (auto& e : v) {
        e = -std::log(1.0 - rng.uniform());
        sum += e;
      }
      for (auto& e : v) e /= sum;
      return v;
    };
    const auto p = draw(), q = draw(), r = draw();
    CHECK(prob_trace_distance(p, r) <=
          prob_trace_distance(p, q) + prob_trace_distance(q, r) + 1e-12);
  }
}

TEST_CASE("hermitian coordinates are an orthonormal chart", "[operator]") {
  for (int d : {2, 3, 4}) {
    const auto basis = hermitian_basis(d);
    REQUIRE(basis.size() == static_cast<std::size_t>(d) * d);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      for (std::size_t j = i; j < basis.size(); ++j) {
        const double expected = i == j ? 1.0 : 0.0;
        CHECK(hs_inner(basis[i], basis[j]) == Approx(expected).margin(1e-12));
      }
    }
    const auto x = random_traceless(d, 7 + static_cast<std::uint64_t>(d)).op();
    const auto coords = hs_coordinates(x);
    const auto back = from_hs_coordinates(d, coords);
    CHECK((back.matrix() - x.matrix()).norm() == Approx(0.0).margin(1e-12));
    CHECK(coords.norm() == Approx(x.hs_norm()).margin(1e-12));
  }
}
