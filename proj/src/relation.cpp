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

#include "povmkit/relation.hpp"

#include <stdexcept>

namespace povmkit {

bool is_column_stochastic(const RealMatrix& m, double tol) {
  if (m.rows() == 0 || m.cols() == 0) return false;
  if (m.minCoeff() < -tol) return false;
  for (Eigen::Index i = 0; i < m.cols(); ++i) {
    if (std::abs(m.col(i).sum() - 1.0) > tol) return false;
  }
  return true;
}

void ensure_stochastic_shape(const StochasticMap& map, std::size_t input_outcomes,
                             const Tolerances& tol) {
  if (static_cast<std::size_t>(map.lambda.cols()) != input_outcomes) {
    throw std::invalid_argument("stochastic map has " + std::to_string(map.lambda.cols()) +
                                " columns, expected " + std::to_string(input_outcomes));
  }
  if (!is_column_stochastic(map.lambda, tol.stoch)) {
    throw std::invalid_argument("matrix is not column-stochastic at tolerance");
  }
}

double entry_l1_norm(const RealMatrix& m) { return m.cwiseAbs().sum(); }

}  // namespace povmkit
