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

#include <json.hpp>
#include <string>

#include "povmkit/orders.hpp"

namespace povmkit {

using Json = nlohmann::ordered_json;

// POVM files: {"dim": d, "elements": [matrix, ...], "labels": [...]} with
// each matrix a row-major d x d array whose entries are [re, im] pairs.
// State files mirror a single element: {"dim": d, "matrix": matrix}.
// Stochastic-map files: {"rows": r, "cols": c, "matrix": [[...], ...]}.

Json povm_to_json(const Povm& m);
Povm povm_from_json(const Json& j);

Json state_to_json(const DensityMatrix& rho);
DensityMatrix state_from_json(const Json& j);

Json stochastic_map_to_json(const StochasticMap& map);
StochasticMap stochastic_map_from_json(const Json& j);

Json verdict_to_json(const OrderVerdict& v, const EntropyConfig& cfg);
Json classification_to_json(const PairClassification& pc, const EntropyConfig& cfg);

/// Throws std::runtime_error with a parse/shape message on any failure.
Json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const Json& j);

}  // namespace povmkit
