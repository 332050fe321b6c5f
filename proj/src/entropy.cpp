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

#include "povmkit/entropy.hpp"

#include <cmath>
#include <stdexcept>

namespace povmkit {

namespace {
constexpr double kLog2e = 1.4426950408889634074;  // log2(e)
}

double EntropyConfig::log_of(double x) const {
  return base == LogBase::two ? std::log2(x) : std::log(x);
}

double EntropyConfig::unit_constant() const { return base == LogBase::two ? kLog2e : 1.0; }

ExtendedReal kl_divergence(const std::vector<double>& p, const std::vector<double>& q,
                           const EntropyConfig& cfg) {
  if (p.size() != q.size()) {
    throw std::invalid_argument("kl_divergence: length mismatch");
  }
  double sum = 0.0;
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (p[k] <= 0.0) continue;
    if (q[k] <= 0.0) return ExtendedReal::infinity();
    sum += p[k] * cfg.log_of(p[k] / q[k]);
  }
  return sum;
}

ExtendedReal relative_entropy(const Povm& m, const DensityMatrix& rho, const DensityMatrix& sigma,
                              const EntropyConfig& cfg) {
  if (m.dim() != rho.dim() || m.dim() != sigma.dim()) {
    throw std::invalid_argument("relative_entropy: dimension mismatch");
  }
  return kl_divergence(measure(m, rho).probs, measure(m, sigma).probs, cfg);
}

double observational_entropy(const Povm& m, const DensityMatrix& rho, const EntropyConfig& cfg,
                             const Tolerances& tol) {
  if (m.dim() != rho.dim()) {
    throw std::invalid_argument("observational_entropy: dimension mismatch");
  }
  const OutcomeDistribution dist = measure(m, rho, tol);
  double sum = 0.0;
  for (std::size_t k = 0; k < dist.probs.size(); ++k) {
    const double p = dist.probs[k];
    const double v = dist.volumes[k];
    if (v <= tol.trace) {
      if (p > tol.psd) {
        throw std::invalid_argument(
            "observational_entropy: outcome " + std::to_string(k) +
            " has zero volume but probability " + std::to_string(p));
      }
      continue;
    }
    if (p <= 0.0) continue;
    sum -= p * cfg.log_of(p / v);
  }
  return sum;
}

IdentityCheck observational_entropy_identity(const Povm& m, const DensityMatrix& rho,
                                             const EntropyConfig& cfg) {
  IdentityCheck chk;
  chk.lhs = observational_entropy(m, rho, cfg);
  const ExtendedReal d_mixed =
      relative_entropy(m, rho, DensityMatrix::maximally_mixed(m.dim()), cfg);
  chk.rhs = cfg.log_of(static_cast<double>(m.dim())) - d_mixed.value();
  return chk;
}

PinskerBounds pinsker_bounds(const std::vector<double>& p, const std::vector<double>& q,
                             const EntropyConfig& cfg) {
  const double t = prob_trace_distance(p, q);
  double q_min = 1.0;
  for (double v : q) q_min = std::min(q_min, v);
  const double eps = cfg.unit_constant();
  PinskerBounds b;
  b.lower = 2.0 * eps * t * t;
  b.upper = q_min > 0.0 ? ExtendedReal(4.0 * eps * t * t / q_min) : ExtendedReal::infinity();
  return b;
}

double curve_derivative_closed(const Povm& m, const TracelessHermitian& x, int n,
                               const Tolerances& tol) {
  if (n < 2) throw std::invalid_argument("curve_derivative_closed: order must be >= 2");
  if (m.dim() != x.dim()) {
    throw std::invalid_argument("curve_derivative_closed: dimension mismatch");
  }
  const double d = static_cast<double>(m.dim());
  double sum = 0.0;
  for (const auto& e : m.elements()) {
    const double v = e.trace();
    if (v <= tol.trace) continue;
    const double mi = (e.matrix() * x.matrix()).trace().real() / v;
    sum += v * std::pow(mi, n);
  }
  double factorial = 1.0;
  for (int k = 2; k <= n - 2; ++k) factorial *= k;
  const double sign = (n % 2 == 0) ? 1.0 : -1.0;
  return sign * factorial * std::pow(d, n - 1) * sum;
}

namespace {

// D_m(1/d + t*x || 1/d) in nats. Throws if the curve point is not a state.
double relent_along_curve(const Povm& m, const TracelessHermitian& x, double t) {
  const int d = m.dim();
  const ComplexMatrix rho_t =
      ComplexMatrix::Identity(d, d) / static_cast<double>(d) + t * x.matrix();
  DensityMatrix rho{HermitianOperator(rho_t)};
  const ExtendedReal val =
      relative_entropy(m, rho, DensityMatrix::maximally_mixed(d), EntropyConfig{LogBase::e});
  if (!val.is_finite()) {
    throw std::runtime_error("curve_derivative_numeric: relative entropy diverged on the curve");
  }
  return val.value();
}

double stencil_estimate(const Povm& m, const TracelessHermitian& x, int n, double h) {
  const auto f = [&](double t) { return relent_along_curve(m, x, t); };
  switch (n) {
    case 2:
      return (f(h) - 2.0 * f(0.0) + f(-h)) / (h * h);
    case 3:
      return (f(2.0 * h) - 2.0 * f(h) + 2.0 * f(-h) - f(-2.0 * h)) / (2.0 * h * h * h);
    case 4:
      return (f(2.0 * h) - 4.0 * f(h) + 6.0 * f(0.0) - 4.0 * f(-h) + f(-2.0 * h)) /
             (h * h * h * h);
    default:
      throw std::invalid_argument("curve_derivative_numeric: order must be 2, 3 or 4");
  }
}

}  // namespace

double curve_derivative_numeric(const Povm& m, const TracelessHermitian& x, int n, double h) {
  if (n < 2 || n > 4) {
    throw std::invalid_argument("curve_derivative_numeric: order must be 2, 3 or 4");
  }
  if (m.dim() != x.dim()) {
    throw std::invalid_argument("curve_derivative_numeric: dimension mismatch");
  }
  const int d = m.dim();
  const RealVector eigs = eigenvalues(x.op());
  const double op_norm = std::max(std::abs(eigs(0)), std::abs(eigs(eigs.size() - 1)));
  if (op_norm == 0.0) return 0.0;
  if (h <= 0.0) h = 1e-3 / op_norm;
  // widest stencil point is 2h; the curve must stay strictly inside the cone
  const double reach = 2.0 * h * op_norm;
  if (reach >= 1.0 / static_cast<double>(d)) {
    throw std::invalid_argument(
        "curve_derivative_numeric: step too large, curve leaves the PSD cone");
  }
  const double coarse = stencil_estimate(m, x, n, h);
  const double fine = stencil_estimate(m, x, n, 0.5 * h);
  return (4.0 * fine - coarse) / 3.0;  // Richardson, order-2 stencils
}

}  // namespace povmkit
