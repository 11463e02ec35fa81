// Copyright 2026 The RWA Authors. All Rights Reserved.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "rwa/chain/report.hpp"

#include "rwa/data/read_audit.hpp"
#include "rwa/error.hpp"

#include <string>

namespace rwa {

using nlohmann::json;

json to_json(const LabelingStateSpace& space) {
  json states = json::array();
  for (const auto& s : space.states()) states.push_back(s.assignments());
  return states;
}

json to_json(const TransitionMatrix& P, const LabelingStateSpace* space) {
  json doc;
  doc["format"] = kMatrixFormat;
  doc["version"] = 1;
  json rows = json::array();
  for (Eigen::Index i = 0; i < P.p.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < P.p.cols(); ++j) row.push_back(P.p(i, j));
    rows.push_back(std::move(row));
  }
  doc["p"] = std::move(rows);
  doc["overflow"] = std::vector<double>(P.overflow.data(), P.overflow.data() + P.overflow.size());
  doc["sample_count"] = P.sample_count;
  if (!P.counts.empty()) doc["counts"] = P.counts;
  doc["overflow_warning"] = P.overflow_warning;
  if (space) doc["states"] = to_json(*space);
  return doc;
}

json to_json(const PiiReport& r) {
  return {{"p_ii_hat", r.p_ii_hat},
          {"bound", r.bound},
          {"support_vectors", r.support_vectors},
          {"n", r.n},
          {"m", r.m},
          {"draws", r.draws},
          {"sigma", r.sigma},
          {"half_width_99", r.half_width_99},
          {"consistent", r.consistent()}};
}

MatrixFile matrix_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("p") || !doc["p"].is_array()) {
    throw InputError("matrix document needs a \"p\" array of rows");
  }
  const auto& rows = doc["p"];
  const auto n = static_cast<Eigen::Index>(rows.size());
  if (n == 0) throw InputError("matrix has no rows");

  Eigen::MatrixXd p(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto& row = rows[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n) {
      throw InputError("matrix row " + std::to_string(i) + " must have " + std::to_string(n) + " entries");
    }
    for (Eigen::Index j = 0; j < n; ++j) {
      const auto& v = row[static_cast<std::size_t>(j)];
      if (!v.is_number()) throw InputError("matrix entry (" + std::to_string(i) + ", " + std::to_string(j) + ") is not a number");
      p(i, j) = v.get<double>();
    }
  }

  MatrixFile out{TransitionMatrix::exact(std::move(p)), std::nullopt};
  if (doc.contains("overflow")) {
    const auto overflow = doc["overflow"].get<std::vector<double>>();
    if (static_cast<Eigen::Index>(overflow.size()) != n) throw InputError("overflow needs one entry per row");
    out.matrix.overflow = Eigen::Map<const Eigen::VectorXd>(overflow.data(), n);
  }
  if (doc.contains("sample_count")) out.matrix.sample_count = doc["sample_count"].get<std::size_t>();

  if (doc.contains("states")) {
    const auto& states = doc["states"];
    if (!states.is_array() || static_cast<Eigen::Index>(states.size()) != n) {
      throw InputError("states needs one labeling per matrix row");
    }
    std::vector<Labeling> labelings;
    for (const auto& s : states) {
      // The chain kit is binary only.
      labelings.emplace_back(s.get<std::vector<int>>(), 2);
    }
    out.states = LabelingStateSpace(std::move(labelings));
  }
  return out;
}

MatrixFile load_matrix_file(const std::filesystem::path& path) {
  auto in = open_for_reading(path);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw InputError(path.string() + ": " + e.what());
  }
  try {
    return matrix_from_json(doc);
  } catch (const json::exception& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

}  // namespace rwa
