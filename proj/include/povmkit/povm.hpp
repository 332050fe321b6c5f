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

#include <optional>
#include <string>
#include <vector>

#include "povmkit/operator.hpp"

namespace povmkit {

/// Finite ordered list of Hermitian effects on a d-dimensional space.
/// Construction only enforces structural consistency (equal dimensions,
/// label arity); the measurement axioms are checked by validate().
class Povm {
 public:
  explicit Povm(std::vector<HermitianOperator> elements, std::vector<std::string> labels = {});

  int dim() const { return dim_; }
  std::size_t size() const { return elements_.size(); }
  const std::vector<HermitianOperator>& elements() const { return elements_; }
  const HermitianOperator& element(std::size_t k) const { return elements_.at(k); }
  /// Outcome labels; empty when none were supplied. Ignored by every
  /// mathematical predicate.
  const std::vector<std::string>& labels() const { return labels_; }
  std::string label_or_index(std::size_t k) const;

 private:
  int dim_;
  std::vector<HermitianOperator> elements_;
  std::vector<std::string> labels_;
};

struct ValidationIssue {
  enum class Kind { psd, completeness };
  Kind kind;
  int element = -1;   // -1 for the completeness constraint
  double magnitude = 0.0;
  std::string message;
};

/// Empty report iff every element is PSD within tol.psd and the elements sum
/// to the identity within tol.trace (largest-entry norm).
std::vector<ValidationIssue> validate(const Povm& m, const Tolerances& tol = {});

/// Throws std::invalid_argument describing the first few violations.
void ensure_valid(const Povm& m, const Tolerances& tol = {});

struct OutcomeDistribution {
  std::vector<double> probs;    // p_k = tr(M_k rho)
  std::vector<double> volumes;  // V_k = tr(M_k)
};

/// Outcome statistics of measuring `m` on `rho`. Probabilities within
/// tol.psd of [0, 1] are clamped; worse violations throw.
OutcomeDistribution measure(const Povm& m, const DensityMatrix& rho, const Tolerances& tol = {});

/// The single-element POVM whose only effect is the identity.
Povm trivial_povm(int d);

/// Convex combination on the disjoint union of outcome sets:
/// (lambda*M_1, ..., lambda*M_m, (1-lambda)*N_1, ..., (1-lambda)*N_n).
/// Zero blocks at lambda in {0, 1} are kept so arities are preserved.
Povm disjoint_convex(double lambda, const Povm& m, const Povm& n);

/// True iff all pairwise products satisfy P_x P_y = delta_xy P_x within
/// tol.psd (largest-entry norm).
bool is_projective(const Povm& m, const Tolerances& tol = {});

/// True iff the elements are linearly independent in Hilbert-Schmidt space
/// (numerical rank of the coordinate matrix equals the element count).
bool is_linearly_independent(const Povm& m, const Tolerances& tol = {});

struct CanonicalAtom {
  HermitianOperator direction;  // unit-trace PSD representative
  double volume = 0.0;          // total trace collected by the group
};

/// Merged, normalized-element form: zero elements dropped, proportional
/// elements grouped, atoms sorted lexicographically by matrix entries.
/// Equal canonical forms characterize post-processing equivalence.
struct CanonicalForm {
  int dim = 0;
  std::vector<CanonicalAtom> atoms;
};

CanonicalForm canonical_form(const Povm& m, const Tolerances& tol = {});

/// True iff the atom sets match under a bijection with directions within
/// tol.prop angle and volumes within tol.vol.
bool canonical_equal(const CanonicalForm& a, const CanonicalForm& b, const Tolerances& tol = {});

/// 1 - cos(HS angle) between two nonzero operators; 0 means proportional.
double proportionality_defect(const HermitianOperator& a, const HermitianOperator& b);

}  // namespace povmkit
