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

namespace povmkit {

/// Numerical tolerances used throughout the library. Defaults target double
/// precision at dimensions up to ~16 with at most a few dozen outcomes; all
/// of them can be overridden per call.
struct Tolerances {
  double herm = 1e-10;   ///< Hermiticity residual, relative to the HS norm
  double trace = 1e-10;  ///< trace-one and sum-to-identity residuals
  double psd = 1e-9;     ///< eigenvalue floor for positive-semidefiniteness
  double span = 1e-9;    ///< relative rank / span-membership threshold
  double prop = 1e-8;    ///< proportionality grouping: 1 - cos(HS angle)
  double stoch = 1e-8;   ///< stochastic-map entries and LP feasibility
  double vol = 1e-8;     ///< canonical-atom volume matching
  double margin = 1e-7;  ///< minimum violation for accepting a witness
};

}  // namespace povmkit
