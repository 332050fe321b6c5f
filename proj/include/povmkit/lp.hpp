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

#include <Eigen/Dense>

namespace povmkit::lp {

enum class Status { optimal, infeasible, unbounded };

struct Result {
  Status status = Status::infeasible;
  Eigen::VectorXd x;        // primal solution (original variables only)
  double objective = 0.0;
};

/// Minimizes c.x subject to A x = b, x >= 0, by a dense two-phase simplex
/// with Bland's anti-cycling rule. Sized for small dense programs (a few
/// hundred rows); throws std::runtime_error if the iteration cap is hit.
Result solve(const Eigen::MatrixXd& A, const Eigen::VectorXd& b, const Eigen::VectorXd& c,
             int max_iterations = 50000);

}  // namespace povmkit::lp
