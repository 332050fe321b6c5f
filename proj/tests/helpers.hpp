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

#include <cstdint>
#include <vector>

#include "povmkit/construct.hpp"
#include "povmkit/random.hpp"

namespace povmkit::testing {

inline HermitianOperator ket_projector(int d, int k) {
  ComplexMatrix m = ComplexMatrix::Zero(d, d);
  m(k, k) = 1.0;
  return HermitianOperator(std::move(m));
}

inline HermitianOperator pauli_x() {
  ComplexMatrix m(2, 2);
  m << 0, 1, 1, 0;
  return HermitianOperator(std::move(m));
}

inline HermitianOperator pauli_y() {
  ComplexMatrix m(2, 2);
  m << std::complex<double>(0, 0), std::complex<double>(0, -1), std::complex<double>(0, 1),
      std::complex<double>(0, 0);
  return HermitianOperator(std::move(m));
}

inline HermitianOperator pauli_z() {
  ComplexMatrix m(2, 2);
  m << 1, 0, 0, -1;
  return HermitianOperator(std::move(m));
}

inline DensityMatrix plus_state() {
  ComplexVector ket(2);
  ket << 1, 1;
  return DensityMatrix::pure(ket);
}

// Random valid POVM with k outcomes: S^(-1/2)-conjugated Gaussian PSD parts.
inline Povm random_povm(int d, int k, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<ComplexMatrix> parts;
  ComplexMatrix total = ComplexMatrix::Zero(d, d);
  for (int e = 0; e < k; ++e) {
    ComplexMatrix g(d, d);
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < d; ++c) g(r, c) = rng.complex_gaussian();
    ComplexMatrix part = g * g.adjoint();
    parts.push_back(part);
    total += part;
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(total);
  const ComplexMatrix inv_sqrt =
      solver.eigenvectors() *
      solver.eigenvalues().cwiseInverse().cwiseSqrt().asDiagonal().toDenseMatrix() *
      solver.eigenvectors().adjoint();
  std::vector<HermitianOperator> elements;
  for (const auto& part : parts) {
    ComplexMatrix e = inv_sqrt * part * inv_sqrt;
    elements.emplace_back(0.5 * (e + e.adjoint().eval()));
  }
  return Povm(std::move(elements));
}

// Random column-stochastic matrix (normalized exponentials per column).
inline StochasticMap random_stochastic(int rows, int cols, std::uint64_t seed) {
  Rng rng(seed);
  RealMatrix m(rows, cols);
  for (int c = 0; c < cols; ++c) {
    double sum = 0.0;
    for (int r = 0; r < rows; ++r) {
      const double v = -std::log(1.0 - rng.uniform());
      m(r, c) = v;
      sum += v;
    }
    m.col(c) /= sum;
  }
  return StochasticMap{std::move(m)};
}

// Random rank-partitioned projective POVM from a Haar-ish unitary.
inline Povm random_projective(int d, int blocks, std::uint64_t seed) {
  Rng rng(seed);
  ComplexMatrix g(d, d);
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c) g(r, c) = rng.complex_gaussian();
  const Eigen::HouseholderQR<ComplexMatrix> qr(g);
  const ComplexMatrix q = qr.householderQ();
  std::vector<int> sizes(static_cast<std::size_t>(blocks), 1);
  int extra = d - blocks;
  for (int i = 0; extra > 0; i = (i + 1) % blocks) {
    const int take = 1 + static_cast<int>(rng.next_u64() % static_cast<std::uint64_t>(extra));
    sizes[static_cast<std::size_t>(i)] += take;
    extra -= take;
  }
  std::vector<HermitianOperator> elements;
  int col = 0;
  for (int b = 0; b < blocks; ++b) {
    ComplexMatrix p = ComplexMatrix::Zero(d, d);
    for (int s = 0; s < sizes[static_cast<std::size_t>(b)]; ++s, ++col) {
      p += q.col(col) * q.col(col).adjoint();
    }
    elements.emplace_back(0.5 * (p + p.adjoint().eval()));
  }
  return Povm(std::move(elements));
}

// Equivalence-preserving rewrite: split an element into two proportional
// pieces, permute cyclically, and append a zero element.
inline Povm equivalent_variant(const Povm& m, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<HermitianOperator> elements;
  const std::size_t split_index = rng.next_u64() % m.size();
  const double w = 0.2 + 0.6 * rng.uniform();
  for (std::size_t k = 0; k < m.size(); ++k) {
    if (k == split_index) {
      elements.push_back(w * m.element(k));
      elements.push_back((1.0 - w) * m.element(k));
    } else {
      elements.push_back(m.element(k));
    }
  }
  std::rotate(elements.begin(), elements.begin() + 1, elements.end());
  elements.push_back(HermitianOperator::zero(m.dim()));
  return Povm(std::move(elements));
}

}  // namespace povmkit::testing
