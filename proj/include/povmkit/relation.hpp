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

#include "povmkit/povm.hpp"

namespace povmkit {

/// Real coefficient matrix relating two POVMs element-wise:
/// N_j = sum_i alpha(j, i) M_i. Rows index the coarser POVM's outcomes.
struct LinearRelation {
  RealMatrix alpha;
  double entry_l1_norm = 0.0;  // sum of |alpha(j,i)|
  double max_residual = 0.0;   // worst HS reconstruction residual
};

/// Column-stochastic matrix: lambda(j, i) >= 0 is the probability of
/// relabeling outcome i as j; each column sums to one.
struct StochasticMap {
  RealMatrix lambda;
};

/// Entry and column-sum check at the given tolerance.
bool is_column_stochastic(const RealMatrix& m, double tol = Tolerances{}.stoch);

/// Throws std::invalid_argument when `map` is not column-stochastic or its
/// column count differs from `m`'s outcome count.
void ensure_stochastic_shape(const StochasticMap& map, std::size_t input_outcomes,
                             const Tolerances& tol = {});

double entry_l1_norm(const RealMatrix& m);

}  // namespace povmkit
