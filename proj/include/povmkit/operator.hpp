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
#include <cstdint>
#include <vector>

#include "povmkit/config.hpp"

namespace povmkit {

using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

/// Dense complex Hermitian operator. The constructor rejects matrices whose
/// anti-Hermitian part exceeds the tolerance and stores the symmetrized
/// (A + A^dag)/2 so downstream spectral queries see an exactly Hermitian
/// matrix.
class HermitianOperator {
 public:
  explicit HermitianOperator(ComplexMatrix entries, const Tolerances& tol = {});

  int dim() const { return static_cast<int>(mat_.rows()); }
  const ComplexMatrix& matrix() const { return mat_; }

  double trace() const { return mat_.trace().real(); }
  double hs_norm() const { return mat_.norm(); }

  static HermitianOperator identity(int d);
  static HermitianOperator zero(int d);

 private:
  ComplexMatrix mat_;
};

HermitianOperator operator+(const HermitianOperator& a, const HermitianOperator& b);
HermitianOperator operator-(const HermitianOperator& a, const HermitianOperator& b);
HermitianOperator operator*(double s, const HermitianOperator& a);

/// Hilbert-Schmidt inner product tr(a^dag b); real for Hermitian inputs.
double hs_inner(const HermitianOperator& a, const HermitianOperator& b);

/// Smallest eigenvalue (symmetric solver on the stored Hermitian matrix).
double min_eigenvalue(const HermitianOperator& a);

/// All eigenvalues, ascending.
RealVector eigenvalues(const HermitianOperator& a);

/// Density matrix: PSD within tol.psd, unit trace within tol.trace.
class DensityMatrix {
 public:
  explicit DensityMatrix(HermitianOperator op, const Tolerances& tol = {});

  int dim() const { return op_.dim(); }
  const HermitianOperator& op() const { return op_; }
  const ComplexMatrix& matrix() const { return op_.matrix(); }

  static DensityMatrix maximally_mixed(int d);
  /// Rank-1 projector onto the (normalized) ket.
  static DensityMatrix pure(const ComplexVector& ket);

 private:
  HermitianOperator op_;
};

/// Hermitian operator with |trace| <= tol.trace.
class TracelessHermitian {
 public:
  explicit TracelessHermitian(HermitianOperator op, const Tolerances& tol = {});

  int dim() const { return op_.dim(); }
  const HermitianOperator& op() const { return op_; }
  const ComplexMatrix& matrix() const { return op_.matrix(); }

 private:
  HermitianOperator op_;
};

/// Pairwise HS-orthonormal list spanning some operator subspace.
struct OperatorSpanBasis {
  int dim = 0;
  std::vector<HermitianOperator> ops;

  std::size_t size() const { return ops.size(); }
};

/// Modified Gram-Schmidt with reorthogonalization. Inputs whose residual
/// after projection is <= tol * (input HS norm) are dropped, so the result
/// has full numerical rank.
OperatorSpanBasis orthonormalize(const std::vector<HermitianOperator>& ops,
                                 double tol = Tolerances{}.span);

struct Projection {
  std::vector<double> coefficients;  // one per basis element
  double residual_norm = 0.0;        // HS norm of a minus its projection
};

/// Orthogonal projection of `a` onto span(basis).
Projection project_residual(const HermitianOperator& a, const OperatorSpanBasis& basis);

/// The part of `a` orthogonal to span(basis).
HermitianOperator residual_operator(const HermitianOperator& a, const OperatorSpanBasis& basis);

enum class StateEnsemble { pure, hilbert_schmidt };

/// Seeded random state: a Haar-random rank-1 projector, or G G^dag
/// normalized to unit trace for a square complex Gaussian G.
DensityMatrix random_density(int d, StateEnsemble ensemble, std::uint64_t seed);

/// Seeded Gaussian Hermitian matrix with the trace projected out. Requires
/// d >= 2 (the only traceless Hermitian at d = 1 is zero).
TracelessHermitian random_traceless(int d, std::uint64_t seed);

/// Half the l1 distance between two probability vectors of equal length.
double prob_trace_distance(const std::vector<double>& p, const std::vector<double>& q);

/// Orthonormal Hermitian coordinate basis in fixed order: identity/sqrt(d)
/// first, then for each pair j < k (row-major) the symmetric and
/// antisymmetric off-diagonal generators, then the d-1 diagonal generators.
std::vector<HermitianOperator> hermitian_basis(int d);

/// Coordinates of `a` in hermitian_basis(dim); length d^2, all real.
/// Computed in closed form, no inner products taken.
RealVector hs_coordinates(const HermitianOperator& a);

/// Inverse of hs_coordinates.
HermitianOperator from_hs_coordinates(int d, const RealVector& coords);

}  // namespace povmkit
