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

#include "povmkit/construct.hpp"

#include <cmath>
#include <stdexcept>

namespace povmkit {

Povm postprocess(const Povm& m, const StochasticMap& lam, const Tolerances& tol) {
  ensure_stochastic_shape(lam, m.size(), tol);
  const int rows = static_cast<int>(lam.lambda.rows());
  std::vector<HermitianOperator> elements;
  elements.reserve(static_cast<std::size_t>(rows));
  for (int j = 0; j < rows; ++j) {
    ComplexMatrix acc = ComplexMatrix::Zero(m.dim(), m.dim());
    for (std::size_t i = 0; i < m.size(); ++i) {
      acc += lam.lambda(j, static_cast<Eigen::Index>(i)) * m.element(i).matrix();
    }
    elements.emplace_back(std::move(acc));
  }
  return Povm(std::move(elements));
}

ConstructedPair invertible_stochastic_pair(const Povm& n, const StochasticMap& lam,
                                           const Tolerances& tol) {
  if (lam.lambda.rows() != lam.lambda.cols() ||
      static_cast<std::size_t>(lam.lambda.cols()) != n.size()) {
    throw std::invalid_argument("invertible_stochastic_pair: map must be square over n's outcomes");
  }
  if (!is_linearly_independent(n, tol)) {
    throw std::invalid_argument("invertible_stochastic_pair: n must be linearly independent");
  }
  Eigen::PartialPivLU<RealMatrix> lu(lam.lambda);
  if (std::abs(lu.determinant()) <= 1e-12) {
    throw std::invalid_argument("invertible_stochastic_pair: stochastic map is singular");
  }
  ConstructedPair pair{n, postprocess(n, lam, tol), lam, LinearRelation{}, false};
  RealMatrix inverse = lu.solve(RealMatrix::Identity(lam.lambda.rows(), lam.lambda.cols()));
  pair.alpha.alpha = inverse;
  pair.alpha.entry_l1_norm = entry_l1_norm(inverse);
  double worst = 0.0;
  for (std::size_t j = 0; j < n.size(); ++j) {
    ComplexMatrix acc = ComplexMatrix::Zero(n.dim(), n.dim());
    for (std::size_t i = 0; i < pair.m.size(); ++i) {
      acc += inverse(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) *
             pair.m.element(i).matrix();
    }
    worst = std::max(worst, (acc - n.element(j).matrix()).norm());
  }
  pair.alpha.max_residual = worst;
  pair.alpha_is_stochastic = is_column_stochastic(inverse, tol.stoch);
  return pair;
}

ConstructedPair binary_epsilon_mix(const HermitianOperator& a, const HermitianOperator& b,
                                   double eps, const Tolerances& tol) {
  if (!(eps > 0.0 && eps < 0.5)) {
    throw std::invalid_argument("binary_epsilon_mix: eps must lie strictly inside (0, 1/2)");
  }
  Povm n({a, b});
  ensure_valid(n, tol);
  if (!is_linearly_independent(n, tol)) {
    throw std::invalid_argument("binary_epsilon_mix: (a, b) must be linearly independent");
  }
  RealMatrix lam(2, 2);
  lam << 1.0 - eps, eps, eps, 1.0 - eps;
  return invertible_stochastic_pair(n, StochasticMap{std::move(lam)}, tol);
}

SeparationParameters separation_parameters(const Povm& n, const Povm& m, const Tolerances& tol) {
  if (!is_linearly_independent(m, tol)) {
    throw std::invalid_argument("separation_parameters: m must be linearly independent");
  }
  const auto rel = decide_linear(n, m, tol);
  if (!rel) {
    throw std::invalid_argument("separation_parameters: no linear relation from m to n");
  }
  SeparationParameters sep;
  sep.alpha_norm = rel->entry_l1_norm;
  double beta = std::numeric_limits<double>::infinity();
  double vol = std::numeric_limits<double>::infinity();
  for (const auto& e : n.elements()) {
    beta = std::min(beta, min_eigenvalue(e));
    vol = std::min(vol, e.trace());
  }
  if (beta < -tol.psd) {
    throw std::invalid_argument("separation_parameters: n is not positive semidefinite");
  }
  sep.beta = std::max(beta, 0.0);
  sep.vol_min = std::max(vol, 0.0);
  const double denom = 2.0 * sep.alpha_norm * sep.alpha_norm;
  sep.lambda_prime = sep.beta / denom;
  sep.lambda_double_prime = (sep.vol_min / n.dim()) / denom;
  return sep;
}

Povm build_n_lambda(const Povm& n, double lambda) {
  return disjoint_convex(lambda, n, trivial_povm(n.dim()));
}

namespace {

HermitianOperator basis_projector(int d, int k) {
  ComplexMatrix m = ComplexMatrix::Zero(d, d);
  m(k, k) = 1.0;
  return HermitianOperator(std::move(m));
}

const double kLog2_3 = std::log2(3.0);

ExampleFixture make_ex3() {
  const auto pair = binary_epsilon_mix(basis_projector(2, 0), basis_projector(2, 1), 0.25);
  const double lambda = 1.0 / 64.0;
  return ExampleFixture{
      "ex3",
      pair.n,
      pair.m,
      build_n_lambda(pair.n, lambda),
      lambda,
      DensityMatrix(basis_projector(2, 0)),
      DensityMatrix(basis_projector(2, 1)),
      {
          {"S_n(rho)", 0.0, false, "0"},
          {"S_m(rho)", 2.0 - 0.75 * kLog2_3, false, "2 - (3/4) log2 3"},
          {"S_n_lambda(rho)", 63.0 / 64.0, false, "63/64"},
          {"D_m(rho||sigma)", 0.5 * kLog2_3, false, "(1/2) log2 3"},
          {"D_n(rho||sigma)", 0.0, true, "inf"},
          {"D_n_lambda(rho||sigma)", 0.0, true, "inf"},
      }};
}

ExampleFixture make_ex4() {
  const auto first = binary_epsilon_mix(basis_projector(2, 0), basis_projector(2, 1), 0.25);
  const auto second = binary_epsilon_mix(first.m.element(0), first.m.element(1), 0.25);
  const double lambda = 1.0 / 128.0;
  return ExampleFixture{
      "ex4",
      second.n,
      second.m,
      build_n_lambda(second.n, lambda),
      lambda,
      DensityMatrix(basis_projector(2, 0)),
      DensityMatrix(basis_projector(2, 1)),
      {
          {"D_n(rho||sigma)", 0.5 * kLog2_3, false, "(1/2) log2 3"},
          {"D_m(rho||sigma)", 0.25 * std::log2(5.0 / 3.0), false, "(1/4) log2 (5/3)"},
          {"D_n_lambda(rho||sigma)", kLog2_3 / 256.0, false, "(1/256) log2 3"},
      }};
}

ExampleFixture make_prop1_counter() {
  return ExampleFixture{
      "prop1_counter",
      Povm({basis_projector(2, 0), basis_projector(2, 1)}),
      Povm({0.5 * basis_projector(2, 0), 0.5 * basis_projector(2, 1),
            0.5 * HermitianOperator::identity(2)}),
      std::nullopt,
      0.0,
      DensityMatrix(basis_projector(2, 0)),
      DensityMatrix(basis_projector(2, 1)),
      {
          {"S_n(rho)", 0.0, false, "0"},
          {"S_m(rho)", 0.5, false, "1/2"},
      }};
}

}  // namespace

ExampleFixture example_fixture(const std::string& name) {
  if (name == "ex3") return make_ex3();
  if (name == "ex4") return make_ex4();
  if (name == "prop1_counter") return make_prop1_counter();
  throw std::invalid_argument("example_fixture: unknown name '" + name +
                              "' (expected ex3, ex4 or prop1_counter)");
}

}  // namespace povmkit
