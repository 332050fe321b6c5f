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

#pragma once

#include <map>
#include <string>

#include "povmkit/orders.hpp"

namespace povmkit {

/// Classical post-processing: N_j = sum_i lambda(j|i) M_i. The result is a
/// valid POVM and stochastically coarser than `m` by construction.
Povm postprocess(const Povm& m, const StochasticMap& lam, const Tolerances& tol = {});

/// A coarser/finer pair produced by an invertible stochastic map, together
/// with the exact linear relation in the reverse direction.
struct ConstructedPair {
  Povm n;                    // the finer, linearly independent side
  Povm m;                    // n pushed through the stochastic map
  StochasticMap lambda_map;  // M_i = sum_j lambda(i|j) N_j
  LinearRelation alpha;      // N_j = sum_i alpha(j,i) M_i (the matrix inverse)
  bool alpha_is_stochastic = false;
};

/// Requires `n` linearly independent and `lam` square invertible; the
/// reverse relation is the matrix inverse, and the pair is post-processing
/// equivalent iff that inverse is again stochastic.
ConstructedPair invertible_stochastic_pair(const Povm& n, const StochasticMap& lam,
                                           const Tolerances& tol = {});

/// The binary-mixing family: from a linearly independent binary POVM (a, b),
/// M = ((1-2*eps)*a + eps*1, (1-2*eps)*b + eps*1) — mixing with 2*eps of
/// pure noise. Requires eps in (0, 1/2).
ConstructedPair binary_epsilon_mix(const HermitianOperator& a, const HermitianOperator& b,
                                   double eps, const Tolerances& tol = {});

/// Quantities controlling the noise-mixing certificates for a linearly
/// related pair: the relation norm, the outcome floors of n, and the two
/// admissible mixing weights.
struct SeparationParameters {
  double alpha_norm = 0.0;          // entrywise l1 norm of the unique relation
  double beta = 0.0;                // min_j (smallest eigenvalue of N_j)
  double vol_min = 0.0;             // min_j tr(N_j)
  double lambda_prime = 0.0;        // beta / (2 alpha_norm^2)
  double lambda_double_prime = 0.0; // (vol_min/d) / (2 alpha_norm^2)
};

/// Requires decide_linear(n, m) present and `m` linearly independent (so the
/// relation norm is unambiguous).
SeparationParameters separation_parameters(const Povm& n, const Povm& m,
                                           const Tolerances& tol = {});

/// lambda * n (+) (1 - lambda) * identity, identity element last.
Povm build_n_lambda(const Povm& n, double lambda);

/// A registered worked example: the POVM pair, its noise-mixed variant, the
/// probe states, and the expected values (closed forms, in bits; infinite
/// entries flagged).
struct ExpectedValue {
  std::string key;
  double bits = 0.0;
  bool infinite = false;
  std::string closed_form;  // provenance of the expected number
};

struct ExampleFixture {
  std::string name;
  Povm n;
  Povm m;
  std::optional<Povm> n_lambda;
  double lambda = 0.0;
  DensityMatrix rho;
  DensityMatrix sigma;
  std::vector<ExpectedValue> expected;
};

/// Bundled fixtures: "ex3" (binary mix of the computational qubit basis at
/// eps = 1/4 with its lambda = 1/64 noise-mixed variant), "ex4" (the same
/// construction iterated once more, lambda = 1/128), and "prop1_counter"
/// (the projective pair linearly but not stochastically related).
ExampleFixture example_fixture(const std::string& name);

}  // namespace povmkit
