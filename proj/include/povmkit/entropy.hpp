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

#include <limits>

#include "povmkit/povm.hpp"

namespace povmkit {

enum class LogBase { two, e };

/// Information units for all entropy quantities: bits (base 2, the default)
/// or nats (base e).
struct EntropyConfig {
  LogBase base = LogBase::two;

  double log_of(double x) const;
  /// log_base(e): the constant converting nats into the configured unit.
  double unit_constant() const;
  const char* unit_name() const { return base == LogBase::two ? "bits" : "nats"; }
};

/// Nonnegative extended value; +infinity arises only from the p > 0, q = 0
/// convention in relative entropies.
class ExtendedReal {
 public:
  ExtendedReal() = default;
  /*implicit*/ ExtendedReal(double v) : value_(v) {}

  static ExtendedReal infinity() { return ExtendedReal(std::numeric_limits<double>::infinity()); }

  bool is_finite() const { return std::isfinite(value_); }
  double value() const { return value_; }

  friend bool operator<(const ExtendedReal& a, const ExtendedReal& b) {
    return a.value_ < b.value_;
  }
  friend bool operator>(const ExtendedReal& a, const ExtendedReal& b) { return b < a; }

 private:
  double value_ = 0.0;
};

/// Classical relative entropy sum_k p_k log(p_k/q_k) with the conventions:
/// p_k = 0 contributes nothing regardless of q_k; p_k > 0 with q_k = 0
/// yields +infinity.
ExtendedReal kl_divergence(const std::vector<double>& p, const std::vector<double>& q,
                           const EntropyConfig& cfg = {});

/// Relative entropy between the outcome distributions of `m` on rho and
/// sigma.
ExtendedReal relative_entropy(const Povm& m, const DensityMatrix& rho, const DensityMatrix& sigma,
                              const EntropyConfig& cfg = {});

/// -sum_k p_k log(p_k / V_k) over outcomes with nonzero probability.
/// Outcomes of zero volume must carry (numerically) zero probability;
/// anything else signals broken POVM numerics and throws.
double observational_entropy(const Povm& m, const DensityMatrix& rho,
                             const EntropyConfig& cfg = {}, const Tolerances& tol = {});

struct IdentityCheck {
  double lhs = 0.0;  // observational entropy
  double rhs = 0.0;  // log d minus relative entropy against the mixed state
};

/// Both sides of the identity S_M(rho) = log d - D_M(rho || 1/d), for
/// assertion in tests and diagnostics.
IdentityCheck observational_entropy_identity(const Povm& m, const DensityMatrix& rho,
                                             const EntropyConfig& cfg = {});

struct PinskerBounds {
  double lower = 0.0;    // 2 * eps * t^2
  ExtendedReal upper;    // 4 * eps * t^2 / min_k q_k, +inf when q hits zero
};

/// Two-sided bounds sandwiching kl_divergence(p, q) in terms of the trace
/// distance t between the distributions; eps = log e in the configured base.
PinskerBounds pinsker_bounds(const std::vector<double>& p, const std::vector<double>& q,
                             const EntropyConfig& cfg = {});

/// n-th derivative (n >= 2), in nats, of D_m(rho_t || 1/d) at t = 0 along
/// the line rho_t = 1/d + t*x, by the closed-form moment expression
/// (-1)^n (n-2)! d^(n-1) sum_i tr(M_i) m_i^n with m_i = tr(M_i x)/tr(M_i).
/// Zero-trace elements are skipped, consistent with zero-probability
/// outcomes.
double curve_derivative_closed(const Povm& m, const TracelessHermitian& x, int n,
                               const Tolerances& tol = {});

/// Central finite-difference estimate of the same derivative, in nats,
/// differentiating the actual relative-entropy evaluation. Supports
/// n in {2, 3, 4}; h <= 0 selects the default step 1e-3 / ||x||_op.
/// Richardson extrapolation is applied to the order-2 stencils. Throws if
/// rho_t leaves the PSD cone at a required stencil point.
double curve_derivative_numeric(const Povm& m, const TracelessHermitian& x, int n,
                                double h = 0.0);

}  // namespace povmkit
