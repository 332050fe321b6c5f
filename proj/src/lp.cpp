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

#include "povmkit/lp.hpp"

#include <stdexcept>
#include <vector>

namespace povmkit::lp {

namespace {

constexpr double kPivotTol = 1e-11;
constexpr double kReducedCostTol = 1e-10;
constexpr double kPhase1Tol = 1e-9;

struct Tableau {
  Eigen::MatrixXd t;       // rows x (cols + 1); last column holds b
  std::vector<int> basis;  // basic variable per row

  int rows() const { return static_cast<int>(t.rows()); }
  int cols() const { return static_cast<int>(t.cols()) - 1; }
  double rhs(int r) const { return t(r, t.cols() - 1); }

  void pivot(int r, int e) {
    t.row(r) /= t(r, e);
    for (int i = 0; i < rows(); ++i) {
      if (i == r) continue;
      const double f = t(i, e);
      if (f != 0.0) t.row(i) -= f * t.row(r);
    }
    basis[r] = e;
  }
};

// Bland's rule: entering = smallest eligible column with negative reduced
// cost, leaving = smallest basic index among the minimum-ratio rows.
bool simplex_iterate(Tableau& tab, const Eigen::VectorXd& cost, int active_cols,
                     int& iterations_left) {
  const int m = tab.rows();
  while (true) {
    if (--iterations_left < 0) {
      throw std::runtime_error("lp::solve: simplex iteration cap exceeded");
    }
    Eigen::VectorXd dual = Eigen::VectorXd::Zero(m);
    for (int i = 0; i < m; ++i) dual(i) = cost(tab.basis[i]);
    int entering = -1;
    for (int j = 0; j < active_cols; ++j) {
      const double reduced = cost(j) - dual.dot(tab.t.col(j));
      if (reduced < -kReducedCostTol) {
        entering = j;
        break;
      }
    }
    if (entering < 0) return true;  // optimal
    int leave_row = -1;
    double best_ratio = 0.0;
    for (int i = 0; i < m; ++i) {
      const double a = tab.t(i, entering);
      if (a > kPivotTol) {
        const double ratio = tab.rhs(i) / a;
        if (leave_row < 0 || ratio < best_ratio - 1e-12 ||
            (ratio < best_ratio + 1e-12 && tab.basis[i] < tab.basis[leave_row])) {
          leave_row = i;
          best_ratio = ratio;
        }
      }
    }
    if (leave_row < 0) return false;  // unbounded
    tab.pivot(leave_row, entering);
  }
}

}  // namespace

Result solve(const Eigen::MatrixXd& A, const Eigen::VectorXd& b, const Eigen::VectorXd& c,
             int max_iterations) {
  const int m = static_cast<int>(A.rows());
  const int n = static_cast<int>(A.cols());
  if (b.size() != m || c.size() != n) {
    throw std::invalid_argument("lp::solve: inconsistent problem sizes");
  }

  Tableau tab;
  tab.t.resize(m, n + m + 1);
  tab.basis.resize(m);
  for (int i = 0; i < m; ++i) {
    const double sign = b(i) < 0.0 ? -1.0 : 1.0;
    tab.t.block(i, 0, 1, n) = sign * A.row(i);
    tab.t.block(i, n, 1, m).setZero();
    tab.t(i, n + i) = 1.0;
    tab.t(i, n + m) = sign * b(i);
    tab.basis[i] = n + i;
  }

  int iterations_left = max_iterations;

  // Phase 1: minimize the sum of artificials.
  Eigen::VectorXd phase1 = Eigen::VectorXd::Zero(n + m);
  phase1.tail(m).setOnes();
  if (!simplex_iterate(tab, phase1, n + m, iterations_left)) {
    throw std::runtime_error("lp::solve: phase-1 problem unbounded");
  }
  double artificial_sum = 0.0;
  for (int i = 0; i < m; ++i) {
    if (tab.basis[i] >= n) artificial_sum += tab.rhs(i);
  }
  if (artificial_sum > kPhase1Tol) {
    return {Status::infeasible, Eigen::VectorXd::Zero(n), artificial_sum};
  }

  // Drive remaining artificials out of the basis; redundant rows are dropped.
  for (int i = tab.rows() - 1; i >= 0; --i) {
    if (tab.basis[i] < n) continue;
    int pivot_col = -1;
    for (int j = 0; j < n; ++j) {
      if (std::abs(tab.t(i, j)) > 1e-9) {
        pivot_col = j;
        break;
      }
    }
    if (pivot_col >= 0) {
      tab.pivot(i, pivot_col);
    } else {
      const int last = tab.rows() - 1;
      if (i != last) {
        tab.t.row(i) = tab.t.row(last);
        tab.basis[i] = tab.basis[last];
      }
      tab.t.conservativeResize(last, Eigen::NoChange);
      tab.basis.pop_back();
    }
  }

  // Phase 2 over the original columns only.
  Eigen::VectorXd phase2 = Eigen::VectorXd::Zero(n + m);
  phase2.head(n) = c;
  if (!simplex_iterate(tab, phase2, n, iterations_left)) {
    return {Status::unbounded, Eigen::VectorXd::Zero(n), 0.0};
  }

  Result res;
  res.status = Status::optimal;
  res.x = Eigen::VectorXd::Zero(n);
  for (int i = 0; i < tab.rows(); ++i) {
    if (tab.basis[i] < n) res.x(tab.basis[i]) = tab.rhs(i);
  }
  res.objective = c.dot(res.x);
  return res;
}

}  // namespace povmkit::lp
