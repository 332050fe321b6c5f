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

#include "povmkit/operator.hpp"

#include <cmath>
#include <stdexcept>

#include "povmkit/random.hpp"

namespace povmkit {

namespace {

void require_same_dim(int a, int b, const char* what) {
  if (a != b) {
    throw std::invalid_argument(std::string(what) + ": dimension mismatch (" +
                                std::to_string(a) + " vs " + std::to_string(b) + ")");
  }
}

}  // namespace

HermitianOperator::HermitianOperator(ComplexMatrix entries, const Tolerances& tol) {
  if (entries.rows() == 0 || entries.rows() != entries.cols()) {
    throw std::invalid_argument("HermitianOperator: matrix must be square and non-empty");
  }
  const double scale = std::max(1.0, entries.norm());
  const double asym = (entries - entries.adjoint()).norm();
  if (asym > tol.herm * scale) {
    throw std::invalid_argument("HermitianOperator: input is not Hermitian (residual " +
                                std::to_string(asym) + ")");
  }
  mat_ = 0.5 * (entries + entries.adjoint().eval());
}

HermitianOperator HermitianOperator::identity(int d) {
  if (d < 1) throw std::invalid_argument("identity: dimension must be positive");
  return HermitianOperator(ComplexMatrix::Identity(d, d));
}

HermitianOperator HermitianOperator::zero(int d) {
  if (d < 1) throw std::invalid_argument("zero: dimension must be positive");
  return HermitianOperator(ComplexMatrix::Zero(d, d));
}

HermitianOperator operator+(const HermitianOperator& a, const HermitianOperator& b) {
  require_same_dim(a.dim(), b.dim(), "operator+");
  return HermitianOperator(a.matrix() + b.matrix());
}

HermitianOperator operator-(const HermitianOperator& a, const HermitianOperator& b) {
  require_same_dim(a.dim(), b.dim(), "operator-");
  return HermitianOperator(a.matrix() - b.matrix());
}

HermitianOperator operator*(double s, const HermitianOperator& a) {
  return HermitianOperator(s * a.matrix());
}

double hs_inner(const HermitianOperator& a, const HermitianOperator& b) {
  require_same_dim(a.dim(), b.dim(), "hs_inner");
  return (a.matrix().adjoint() * b.matrix()).trace().real();
}

double min_eigenvalue(const HermitianOperator& a) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(a.matrix(), Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("min_eigenvalue: eigensolver failed");
  }
  return solver.eigenvalues().minCoeff();
}

RealVector eigenvalues(const HermitianOperator& a) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(a.matrix(), Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("eigenvalues: eigensolver failed");
  }
  return solver.eigenvalues();
}

DensityMatrix::DensityMatrix(HermitianOperator op, const Tolerances& tol) : op_(std::move(op)) {
  const double lo = min_eigenvalue(op_);
  if (lo < -tol.psd) {
    throw std::invalid_argument("DensityMatrix: not positive semidefinite (min eigenvalue " +
                                std::to_string(lo) + ")");
  }
  const double tr = op_.trace();
  if (std::abs(tr - 1.0) > tol.trace) {
    throw std::invalid_argument("DensityMatrix: trace is " + std::to_string(tr) + ", expected 1");
  }
}

DensityMatrix DensityMatrix::maximally_mixed(int d) {
  if (d < 1) throw std::invalid_argument("maximally_mixed: dimension must be positive");
  return DensityMatrix(HermitianOperator(ComplexMatrix::Identity(d, d) / static_cast<double>(d)));
}

DensityMatrix DensityMatrix::pure(const ComplexVector& ket) {
  const double norm = ket.norm();
  if (norm <= 0.0) throw std::invalid_argument("pure: zero ket");
  const ComplexVector v = ket / norm;
  return DensityMatrix(HermitianOperator(v * v.adjoint()));
}

TracelessHermitian::TracelessHermitian(HermitianOperator op, const Tolerances& tol)
    : op_(std::move(op)) {
  if (std::abs(op_.trace()) > tol.trace * std::max(1.0, op_.hs_norm())) {
    throw std::invalid_argument("TracelessHermitian: trace is " + std::to_string(op_.trace()));
  }
}

OperatorSpanBasis orthonormalize(const std::vector<HermitianOperator>& ops, double tol) {
  OperatorSpanBasis out;
  if (ops.empty()) return out;
  out.dim = ops.front().dim();
  for (const auto& op : ops) {
    require_same_dim(op.dim(), out.dim, "orthonormalize");
    const double input_norm = op.hs_norm();
    ComplexMatrix v = op.matrix();
    // two passes of projection removal keep orthogonality near machine level
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& b : out.ops) {
        const double c = (b.matrix().adjoint() * v).trace().real();
        v -= c * b.matrix();
      }
    }
    const double r = v.norm();
    if (r > tol * input_norm && r > 0.0) {
      out.ops.emplace_back(ComplexMatrix(v / r));
    }
  }
  return out;
}

Projection project_residual(const HermitianOperator& a, const OperatorSpanBasis& basis) {
  if (!basis.ops.empty()) require_same_dim(a.dim(), basis.dim, "project_residual");
  Projection p;
  ComplexMatrix v = a.matrix();
  p.coefficients.reserve(basis.ops.size());
  for (const auto& b : basis.ops) {
    const double c = (b.matrix().adjoint() * a.matrix()).trace().real();
    p.coefficients.push_back(c);
    v -= c * b.matrix();
  }
  p.residual_norm = v.norm();
  return p;
}

HermitianOperator residual_operator(const HermitianOperator& a, const OperatorSpanBasis& basis) {
  if (!basis.ops.empty()) require_same_dim(a.dim(), basis.dim, "residual_operator");
  ComplexMatrix v = a.matrix();
  for (const auto& b : basis.ops) {
    const double c = (b.matrix().adjoint() * a.matrix()).trace().real();
    v -= c * b.matrix();
  }
  return HermitianOperator(0.5 * (v + v.adjoint().eval()));
}

DensityMatrix random_density(int d, StateEnsemble ensemble, std::uint64_t seed) {
  if (d < 1) throw std::invalid_argument("random_density: dimension must be positive");
  Rng rng(seed);
  if (ensemble == StateEnsemble::pure) {
    ComplexVector ket(d);
    for (int i = 0; i < d; ++i) ket(i) = rng.complex_gaussian();
    if (ket.norm() == 0.0) ket(0) = 1.0;  // measure-zero guard
    return DensityMatrix::pure(ket);
  }
  ComplexMatrix g(d, d);
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c) g(r, c) = rng.complex_gaussian();
  ComplexMatrix w = g * g.adjoint();
  const double tr = w.trace().real();
  if (tr <= 0.0) return DensityMatrix::maximally_mixed(d);
  return DensityMatrix(HermitianOperator(w / tr));
}

TracelessHermitian random_traceless(int d, std::uint64_t seed) {
  if (d < 2) throw std::invalid_argument("random_traceless: dimension must be >= 2");
  Rng rng(seed);
  ComplexMatrix g(d, d);
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c) g(r, c) = rng.complex_gaussian();
  ComplexMatrix h = 0.5 * (g + g.adjoint().eval());
  h -= (h.trace() / static_cast<double>(d)) * ComplexMatrix::Identity(d, d);
  return TracelessHermitian(HermitianOperator(h));
}

double prob_trace_distance(const std::vector<double>& p, const std::vector<double>& q) {
  if (p.size() != q.size()) {
    throw std::invalid_argument("prob_trace_distance: length mismatch");
  }
  double sum = 0.0;
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (p[k] < -1e-12 || q[k] < -1e-12) {
      throw std::invalid_argument("prob_trace_distance: negative entry");
    }
    sum += std::abs(p[k] - q[k]);
  }
  return 0.5 * sum;
}

std::vector<HermitianOperator> hermitian_basis(int d) {
  if (d < 1) throw std::invalid_argument("hermitian_basis: dimension must be positive");
  std::vector<HermitianOperator> basis;
  basis.reserve(static_cast<std::size_t>(d) * d);
  const double inv_sqrt_d = 1.0 / std::sqrt(static_cast<double>(d));
  basis.push_back(HermitianOperator(ComplexMatrix::Identity(d, d) * inv_sqrt_d));
  const double inv_sqrt2 = 0.7071067811865475244;
  for (int j = 0; j < d; ++j) {
    for (int k = j + 1; k < d; ++k) {
      ComplexMatrix sym = ComplexMatrix::Zero(d, d);
      sym(j, k) = inv_sqrt2;
      sym(k, j) = inv_sqrt2;
      basis.push_back(HermitianOperator(std::move(sym)));
      ComplexMatrix anti = ComplexMatrix::Zero(d, d);
      anti(j, k) = std::complex<double>(0.0, inv_sqrt2);
      anti(k, j) = std::complex<double>(0.0, -inv_sqrt2);
      basis.push_back(HermitianOperator(std::move(anti)));
    }
  }
  for (int l = 1; l < d; ++l) {
    ComplexMatrix diag = ComplexMatrix::Zero(d, d);
    const double s = 1.0 / std::sqrt(static_cast<double>(l) * (l + 1));
    for (int m = 0; m < l; ++m) diag(m, m) = s;
    diag(l, l) = -static_cast<double>(l) * s;
    basis.push_back(HermitianOperator(std::move(diag)));
  }
  return basis;
}

RealVector hs_coordinates(const HermitianOperator& a) {
  const int d = a.dim();
  const ComplexMatrix& h = a.matrix();
  RealVector c(static_cast<Eigen::Index>(d) * d);
  Eigen::Index idx = 0;
  c(idx++) = h.trace().real() / std::sqrt(static_cast<double>(d));
  const double sqrt2 = 1.4142135623730950488;
  for (int j = 0; j < d; ++j) {
    for (int k = j + 1; k < d; ++k) {
      c(idx++) = sqrt2 * h(j, k).real();
      c(idx++) = sqrt2 * h(j, k).imag();
    }
  }
  for (int l = 1; l < d; ++l) {
    const double s = 1.0 / std::sqrt(static_cast<double>(l) * (l + 1));
    double acc = 0.0;
    for (int m = 0; m < l; ++m) acc += h(m, m).real();
    c(idx++) = s * (acc - static_cast<double>(l) * h(l, l).real());
  }
  return c;
}

HermitianOperator from_hs_coordinates(int d, const RealVector& coords) {
  if (coords.size() != static_cast<Eigen::Index>(d) * d) {
    throw std::invalid_argument("from_hs_coordinates: expected d^2 coordinates");
  }
  const auto basis = hermitian_basis(d);
  ComplexMatrix h = ComplexMatrix::Zero(d, d);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    h += coords(static_cast<Eigen::Index>(i)) * basis[i].matrix();
  }
  return HermitianOperator(std::move(h));
}

}  // namespace povmkit
