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

#include "povmkit/povm.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace povmkit {

Povm::Povm(std::vector<HermitianOperator> elements, std::vector<std::string> labels)
    : elements_(std::move(elements)), labels_(std::move(labels)) {
  if (elements_.empty()) {
    throw std::invalid_argument("Povm: needs at least one element");
  }
  dim_ = elements_.front().dim();
  for (const auto& e : elements_) {
    if (e.dim() != dim_) {
      throw std::invalid_argument("Povm: elements have mixed dimensions");
    }
  }
  if (!labels_.empty() && labels_.size() != elements_.size()) {
    throw std::invalid_argument("Povm: label count does not match element count");
  }
}

std::string Povm::label_or_index(std::size_t k) const {
  if (k >= elements_.size()) throw std::out_of_range("Povm::label_or_index");
  return labels_.empty() ? std::to_string(k) : labels_[k];
}

std::vector<ValidationIssue> validate(const Povm& m, const Tolerances& tol) {
  std::vector<ValidationIssue> issues;
  const int d = m.dim();
  ComplexMatrix sum = ComplexMatrix::Zero(d, d);
  for (std::size_t k = 0; k < m.size(); ++k) {
    const double lo = min_eigenvalue(m.element(k));
    if (lo < -tol.psd) {
      issues.push_back({ValidationIssue::Kind::psd, static_cast<int>(k), lo,
                        "element " + m.label_or_index(k) + " has min eigenvalue " +
                            std::to_string(lo)});
    }
    sum += m.element(k).matrix();
  }
  const double gap = (sum - ComplexMatrix::Identity(d, d)).cwiseAbs().maxCoeff();
  if (gap > tol.trace) {
    issues.push_back({ValidationIssue::Kind::completeness, -1, gap,
                      "elements sum to identity with entrywise gap " + std::to_string(gap)});
  }
  return issues;
}

void ensure_valid(const Povm& m, const Tolerances& tol) {
  const auto issues = validate(m, tol);
  if (issues.empty()) return;
  std::string msg = "invalid POVM:";
  for (const auto& issue : issues) {
    msg += " [" + issue.message + "]";
  }
  throw std::invalid_argument(msg);
}

OutcomeDistribution measure(const Povm& m, const DensityMatrix& rho, const Tolerances& tol) {
  if (m.dim() != rho.dim()) {
    throw std::invalid_argument("measure: dimension mismatch");
  }
  OutcomeDistribution out;
  out.probs.reserve(m.size());
  out.volumes.reserve(m.size());
  for (const auto& e : m.elements()) {
    double p = (e.matrix() * rho.matrix()).trace().real();
    if (p < -tol.psd || p > 1.0 + tol.psd) {
      throw std::invalid_argument("measure: outcome probability " + std::to_string(p) +
                                  " outside [0,1] beyond tolerance");
    }
    p = std::clamp(p, 0.0, 1.0);
    out.probs.push_back(p);
    out.volumes.push_back(e.trace());
  }
  return out;
}

Povm trivial_povm(int d) {
  if (d < 1) throw std::invalid_argument("trivial_povm: dimension must be positive");
  return Povm({HermitianOperator::identity(d)});
}

Povm disjoint_convex(double lambda, const Povm& m, const Povm& n) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw std::invalid_argument("disjoint_convex: lambda must lie in [0,1]");
  }
  if (m.dim() != n.dim()) {
    throw std::invalid_argument("disjoint_convex: dimension mismatch");
  }
  std::vector<HermitianOperator> elements;
  std::vector<std::string> labels;
  elements.reserve(m.size() + n.size());
  labels.reserve(m.size() + n.size());
  for (std::size_t k = 0; k < m.size(); ++k) {
    elements.push_back(lambda * m.element(k));
    labels.push_back("a:" + m.label_or_index(k));
  }
  for (std::size_t k = 0; k < n.size(); ++k) {
    elements.push_back((1.0 - lambda) * n.element(k));
    labels.push_back("b:" + n.label_or_index(k));
  }
  return Povm(std::move(elements), std::move(labels));
}

bool is_projective(const Povm& m, const Tolerances& tol) {
  for (std::size_t x = 0; x < m.size(); ++x) {
    for (std::size_t y = x; y < m.size(); ++y) {
      ComplexMatrix prod = m.element(x).matrix() * m.element(y).matrix();
      if (x == y) prod -= m.element(x).matrix();
      if (prod.cwiseAbs().maxCoeff() > tol.psd) return false;
    }
  }
  return true;
}

bool is_linearly_independent(const Povm& m, const Tolerances& tol) {
  const Eigen::Index k = static_cast<Eigen::Index>(m.size());
  const Eigen::Index d2 = static_cast<Eigen::Index>(m.dim()) * m.dim();
  if (k > d2) return false;
  RealMatrix coords(d2, k);
  for (Eigen::Index i = 0; i < k; ++i) {
    coords.col(i) = hs_coordinates(m.element(static_cast<std::size_t>(i)));
  }
  Eigen::JacobiSVD<RealMatrix> svd(coords);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) <= 0.0) return false;
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > tol.span * sv(0)) ++rank;
  }
  return rank == k;
}

double proportionality_defect(const HermitianOperator& a, const HermitianOperator& b) {
  const double na = a.hs_norm();
  const double nb = b.hs_norm();
  if (na <= 0.0 || nb <= 0.0) {
    throw std::invalid_argument("proportionality_defect: zero operator");
  }
  return 1.0 - hs_inner(a, b) / (na * nb);
}

namespace {

// Strict lexicographic order over matrix entries (row-major, real then
// imaginary part) so atom lists have a stable, comparison-friendly order.
bool atom_less(const CanonicalAtom& lhs, const CanonicalAtom& rhs) {
  const ComplexMatrix& a = lhs.direction.matrix();
  const ComplexMatrix& b = rhs.direction.matrix();
  for (Eigen::Index r = 0; r < a.rows(); ++r) {
    for (Eigen::Index c = 0; c < a.cols(); ++c) {
      if (a(r, c).real() != b(r, c).real()) return a(r, c).real() < b(r, c).real();
      if (a(r, c).imag() != b(r, c).imag()) return a(r, c).imag() < b(r, c).imag();
    }
  }
  return lhs.volume < rhs.volume;
}

}  // namespace

CanonicalForm canonical_form(const Povm& m, const Tolerances& tol) {
  CanonicalForm cf;
  cf.dim = m.dim();
  for (const auto& e : m.elements()) {
    const double v = e.trace();
    if (v <= tol.trace) continue;  // zero elements carry no statistics
    HermitianOperator mu = (1.0 / v) * e;
    bool merged = false;
    for (auto& atom : cf.atoms) {
      if (proportionality_defect(atom.direction, mu) <= tol.prop) {
        atom.volume += v;
        merged = true;
        break;
      }
    }
    if (!merged) cf.atoms.push_back({std::move(mu), v});
  }
  std::sort(cf.atoms.begin(), cf.atoms.end(), atom_less);
  return cf;
}

bool canonical_equal(const CanonicalForm& a, const CanonicalForm& b, const Tolerances& tol) {
  if (a.dim != b.dim || a.atoms.size() != b.atoms.size()) return false;
  std::vector<bool> used(b.atoms.size(), false);
  for (const auto& atom : a.atoms) {
    bool found = false;
    for (std::size_t j = 0; j < b.atoms.size(); ++j) {
      if (used[j]) continue;
      if (proportionality_defect(atom.direction, b.atoms[j].direction) <= tol.prop &&
          std::abs(atom.volume - b.atoms[j].volume) <= tol.vol) {
        used[j] = true;
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace povmkit
