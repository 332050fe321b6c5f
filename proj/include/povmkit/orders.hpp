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
#include <optional>

#include "povmkit/entropy.hpp"
#include "povmkit/relation.hpp"

namespace povmkit {

/// Sampling effort for the falsification searches. Per-sample seeds derive
/// from (seed, sample index), so verdicts and chosen witnesses do not depend
/// on evaluation order; ties go to the smallest sample index.
struct SearchBudget {
  long samples = 20000;
  int refine_steps = 200;  // random-direction hill climbing around the best sample
  std::uint64_t seed = 0;
};

/// Minimum-norm least-squares fit of n's elements against m's; present iff
/// every element of n lies in span(m) within tol.span (relative).
std::optional<LinearRelation> decide_linear(const Povm& n, const Povm& m,
                                            const Tolerances& tol = {});

/// The fit itself, without the span-membership gate (diagnostics, tests).
LinearRelation linear_fit(const Povm& n, const Povm& m, const Tolerances& tol = {});

struct StochasticDecision {
  std::optional<StochasticMap> map;  // present iff feasible at tol.stoch
  double margin = 0.0;               // minimized max constraint violation
};

/// Feasibility of N_j = sum_i Lambda(j|i) M_i with Lambda column-stochastic,
/// each operator equality expanded to d^2 real equations in the fixed
/// Hermitian coordinate basis. The margin is the LP-minimized largest
/// violation, so it is meaningful on infeasible instances too.
StochasticDecision decide_stochastic(const Povm& n, const Povm& m, const Tolerances& tol = {});

/// Post-processing equivalence via canonical forms (equal atom sets).
bool decide_equivalence(const Povm& n, const Povm& m, const Tolerances& tol = {});

/// Explicit stochastic maps in both directions, composed through the merged
/// canonical intermediary. Present iff the POVMs are equivalent; both maps
/// are verified against the defining operator equalities before returning.
struct EquivalenceMaps {
  StochasticMap m_to_n;  // N_j = sum_i lambda(j|i) M_i
  StochasticMap n_to_m;  // M_i = sum_j lambda(i|j) N_j
};
std::optional<EquivalenceMaps> equivalence_witness_maps(const Povm& n, const Povm& m,
                                                        const Tolerances& tol = {});

/// A state sigma = (1 + eps*x)/d with x orthogonal to span(m) but not to
/// span(n): m cannot distinguish sigma from the maximally mixed state while
/// n can. Present iff span(n) is not contained in span(m).
std::optional<DensityMatrix> span_witness(const Povm& n, const Povm& m,
                                          const Tolerances& tol = {});

/// Certificate that a noise-dominated POVM n = lambda*N' (+) (1-lambda)*1
/// is entropically coarser than m, via the two-sided Pinsker bound chain:
/// lambda <= gamma / (2 ||alpha||^2) with gamma the outcome floor of N'
/// (smallest eigenvalue for the relative-entropy target, smallest volume
/// over d for the entropy target).
struct PinskerCertificate {
  double lambda = 0.0;
  double gamma = 0.0;
  double alpha_norm = 0.0;
};

enum class OrderTarget { entropy, relent };

std::optional<PinskerCertificate> pinsker_certificate(const Povm& n, const Povm& m,
                                                      OrderTarget target,
                                                      const Tolerances& tol = {});

enum class VerdictStatus { holds, refuted, unknown };
enum class CertificateKind { stochastic_map, pinsker_bound, projective_shortcut, order_chain };

/// A state (or pair) at which the claimed universal inequality fails;
/// margin is the positive amount by which it fails, in the configured
/// entropy units (+inf for diverging relative entropies).
struct OrderWitness {
  DensityMatrix rho;
  std::optional<DensityMatrix> sigma;
  double margin = 0.0;
};

struct OrderVerdict {
  VerdictStatus status = VerdictStatus::unknown;
  std::optional<CertificateKind> certificate;    // set when status == holds,
                                                 // or names the refutation shortcut
  std::optional<StochasticMap> map;              // stochastic_map certificates
  std::optional<PinskerCertificate> pinsker;     // pinsker_bound certificates
  std::optional<OrderWitness> witness;           // refutations
  long samples_used = 0;
};

/// Decides S_n(rho) >= S_m(rho) for all states. Pipeline, first hit wins:
/// stochastic feasibility; span obstruction (witness state); Pinsker
/// certificate; projective shortcut; seeded falsification search; unknown.
OrderVerdict decide_entropy_order(const Povm& n, const Povm& m, const SearchBudget& budget = {},
                                  const EntropyConfig& cfg = {}, const Tolerances& tol = {});

/// Decides D_n(rho||sigma) <= D_m(rho||sigma) for all state pairs.
OrderVerdict decide_relent_order(const Povm& n, const Povm& m, const SearchBudget& budget = {},
                                 const EntropyConfig& cfg = {}, const Tolerances& tol = {});

/// Random-direction moment test for equivalence: over the merged canonical
/// atoms (the maximally mixed direction excluded), checks
/// sum_k [V_n(mu_k) - V_m(mu_k)] r_k^n = 0 for n = 2 .. K+1+max_order_slack,
/// where r_k are the atom overlaps with a random traceless direction,
/// resampled until they are distinct and nonzero. Agrees with
/// decide_equivalence; throws if resampling is exhausted.
bool moment_equality_test(const Povm& n, const Povm& m, int trials, int max_order_slack,
                          std::uint64_t seed = 0, const Tolerances& tol = {});

/// One direction of the full classification: is `n` coarser than `m`?
struct DirectionClassification {
  std::optional<LinearRelation> linear;
  std::optional<StochasticMap> stochastic;
  double stochastic_margin = 0.0;
  OrderVerdict relent;
  OrderVerdict entropy;
};

struct PairClassification {
  DirectionClassification n_vs_m;  // n coarser than m
  DirectionClassification m_vs_n;
  bool equivalent = false;
  bool n_projective = false;
  bool m_projective = false;
};

/// Fills every relation in both directions, applying the projective
/// shortcuts (between projective POVMs all four orderings coincide with
/// stochastic feasibility; a projective coarser side ties the entropy order
/// to stochastic feasibility, a projective finer side ties the linear
/// relation to it) and enforcing consistency with the implication chain
/// stochastic -> relative entropy -> entropy -> linear.
PairClassification classify_pair(const Povm& n, const Povm& m, const SearchBudget& budget = {},
                                 const EntropyConfig& cfg = {}, const Tolerances& tol = {});

}  // namespace povmkit
