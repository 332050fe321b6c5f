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

#include "povmkit/json_io.hpp"

#include <fstream>

namespace povmkit {

namespace {

Json matrix_to_json(const ComplexMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      row.push_back(Json::array({m(r, c).real(), m(r, c).imag()}));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

ComplexMatrix matrix_from_json(const Json& j, int dim, const char* what) {
  if (!j.is_array() || static_cast<int>(j.size()) != dim) {
    throw std::runtime_error(std::string(what) + ": expected " + std::to_string(dim) + " rows");
  }
  ComplexMatrix m(dim, dim);
  for (int r = 0; r < dim; ++r) {
    const Json& row = j.at(static_cast<std::size_t>(r));
    if (!row.is_array() || static_cast<int>(row.size()) != dim) {
      throw std::runtime_error(std::string(what) + ": row " + std::to_string(r) +
                               " must have " + std::to_string(dim) + " entries");
    }
    for (int c = 0; c < dim; ++c) {
      const Json& entry = row.at(static_cast<std::size_t>(c));
      if (!entry.is_array() || entry.size() != 2 || !entry.at(0).is_number() ||
          !entry.at(1).is_number()) {
        throw std::runtime_error(std::string(what) + ": entries must be [re, im] pairs");
      }
      m(r, c) = std::complex<double>(entry.at(0).get<double>(), entry.at(1).get<double>());
    }
  }
  return m;
}

int dim_from_json(const Json& j, const char* what) {
  if (!j.contains("dim") || !j.at("dim").is_number_integer()) {
    throw std::runtime_error(std::string(what) + ": missing integer field 'dim'");
  }
  const int d = j.at("dim").get<int>();
  if (d < 1 || d > 64) {
    throw std::runtime_error(std::string(what) + ": dimension " + std::to_string(d) +
                             " out of supported range");
  }
  return d;
}

Json number_or_inf(double v) {
  if (std::isinf(v)) return Json("inf");
  return Json(v);
}

}  // namespace

Json povm_to_json(const Povm& m) {
  Json j;
  j["dim"] = m.dim();
  Json elements = Json::array();
  for (const auto& e : m.elements()) elements.push_back(matrix_to_json(e.matrix()));
  j["elements"] = std::move(elements);
  if (!m.labels().empty()) j["labels"] = m.labels();
  return j;
}

Povm povm_from_json(const Json& j) {
  const int d = dim_from_json(j, "povm");
  if (!j.contains("elements") || !j.at("elements").is_array() || j.at("elements").empty()) {
    throw std::runtime_error("povm: missing non-empty array field 'elements'");
  }
  std::vector<HermitianOperator> elements;
  elements.reserve(j.at("elements").size());
  for (const auto& e : j.at("elements")) {
    try {
      elements.emplace_back(matrix_from_json(e, d, "povm element"));
    } catch (const std::invalid_argument& err) {
      throw std::runtime_error(std::string("povm element: ") + err.what());
    }
  }
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    if (!j.at("labels").is_array()) throw std::runtime_error("povm: 'labels' must be an array");
    for (const auto& l : j.at("labels")) labels.push_back(l.get<std::string>());
    if (labels.size() != elements.size()) {
      throw std::runtime_error("povm: label count does not match element count");
    }
  }
  return Povm(std::move(elements), std::move(labels));
}

Json state_to_json(const DensityMatrix& rho) {
  Json j;
  j["dim"] = rho.dim();
  j["matrix"] = matrix_to_json(rho.matrix());
  return j;
}

DensityMatrix state_from_json(const Json& j) {
  const int d = dim_from_json(j, "state");
  if (!j.contains("matrix")) throw std::runtime_error("state: missing field 'matrix'");
  try {
    return DensityMatrix(HermitianOperator(matrix_from_json(j.at("matrix"), d, "state matrix")));
  } catch (const std::invalid_argument& err) {
    throw std::runtime_error(std::string("state: ") + err.what());
  }
}

Json stochastic_map_to_json(const StochasticMap& map) {
  Json j;
  j["rows"] = map.lambda.rows();
  j["cols"] = map.lambda.cols();
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < map.lambda.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < map.lambda.cols(); ++c) row.push_back(map.lambda(r, c));
    rows.push_back(std::move(row));
  }
  j["matrix"] = std::move(rows);
  return j;
}

StochasticMap stochastic_map_from_json(const Json& j) {
  if (!j.contains("matrix") || !j.at("matrix").is_array() || j.at("matrix").empty()) {
    throw std::runtime_error("stochastic map: missing non-empty field 'matrix'");
  }
  const auto& rows = j.at("matrix");
  const Eigen::Index r = static_cast<Eigen::Index>(rows.size());
  const Eigen::Index c = static_cast<Eigen::Index>(rows.at(0).size());
  RealMatrix m(r, c);
  for (Eigen::Index i = 0; i < r; ++i) {
    const auto& row = rows.at(static_cast<std::size_t>(i));
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != c) {
      throw std::runtime_error("stochastic map: ragged matrix");
    }
    for (Eigen::Index k = 0; k < c; ++k) {
      if (!row.at(static_cast<std::size_t>(k)).is_number()) {
        throw std::runtime_error("stochastic map: entries must be numbers");
      }
      m(i, k) = row.at(static_cast<std::size_t>(k)).get<double>();
    }
  }
  return StochasticMap{std::move(m)};
}

namespace {

const char* certificate_name(CertificateKind k) {
  switch (k) {
    case CertificateKind::stochastic_map:
      return "stochastic-map";
    case CertificateKind::pinsker_bound:
      return "pinsker-bound";
    case CertificateKind::projective_shortcut:
      return "projective-shortcut";
    case CertificateKind::order_chain:
      return "chain";
  }
  return "?";
}

const char* status_name(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::holds:
      return "holds";
    case VerdictStatus::refuted:
      return "refuted";
    case VerdictStatus::unknown:
      return "unknown";
  }
  return "?";
}

}  // namespace

Json verdict_to_json(const OrderVerdict& v, const EntropyConfig& cfg) {
  Json j;
  j["status"] = status_name(v.status);
  if (v.certificate) j["certificate"] = certificate_name(*v.certificate);
  if (v.pinsker) {
    j["pinsker"] = Json{{"lambda", v.pinsker->lambda},
                        {"gamma", v.pinsker->gamma},
                        {"alpha_norm", v.pinsker->alpha_norm}};
  }
  if (v.map) j["stochastic_map"] = stochastic_map_to_json(*v.map);
  if (v.witness) {
    Json w;
    w["rho"] = state_to_json(v.witness->rho);
    if (v.witness->sigma) w["sigma"] = state_to_json(*v.witness->sigma);
    w["margin"] = number_or_inf(v.witness->margin);
    w["units"] = cfg.unit_name();
    j["witness"] = std::move(w);
  }
  j["samples_used"] = v.samples_used;
  return j;
}

namespace {

Json direction_to_json(const DirectionClassification& dir, const EntropyConfig& cfg) {
  Json j;
  j["linear"] = static_cast<bool>(dir.linear);
  if (dir.linear) {
    j["alpha_norm"] = dir.linear->entry_l1_norm;
    j["linear_residual"] = dir.linear->max_residual;
  }
  j["stochastic"] = static_cast<bool>(dir.stochastic);
  j["stochastic_margin"] = dir.stochastic_margin;
  if (dir.stochastic) j["stochastic_map"] = stochastic_map_to_json(*dir.stochastic);
  j["relent"] = verdict_to_json(dir.relent, cfg);
  j["entropy"] = verdict_to_json(dir.entropy, cfg);
  return j;
}

}  // namespace

Json classification_to_json(const PairClassification& pc, const EntropyConfig& cfg) {
  Json j;
  j["n_coarser_than_m"] = direction_to_json(pc.n_vs_m, cfg);
  j["m_coarser_than_n"] = direction_to_json(pc.m_vs_n, cfg);
  j["equivalent"] = pc.equivalent;
  j["n_projective"] = pc.n_projective;
  j["m_projective"] = pc.m_projective;
  return j;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& err) {
    throw std::runtime_error("parse error in " + path + ": " + err.what());
  }
}

void save_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open file for writing: " + path);
  out << j.dump(2) << "\n";
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace povmkit
