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

#include "rwa/linsvm/model_io.hpp"

#include "rwa/data/read_audit.hpp"
#include "rwa/error.hpp"

#include <fstream>
#include <string>

namespace rwa {

using nlohmann::json;

SourceModel make_source_model(const OvaFit& fit, std::vector<double> class_values, const SvmOptions& solver,
                              std::vector<PreprocessKind> preprocess) {
  SourceModel m;
  m.hypothesis = fit.hypothesis;
  m.class_values = std::move(class_values);
  m.solver = solver;
  for (const auto& b : fit.models) m.binary_models.push_back({b.support_indices, b.epochs, b.converged});
  m.preprocess = std::move(preprocess);
  return m;
}

json to_json(const SourceModel& model) {
  const auto& h = model.hypothesis;
  json weights = json::array();
  for (Eigen::Index c = 0; c < h.weights().rows(); ++c) {
    weights.push_back(std::vector<double>(h.weights().row(c).begin(), h.weights().row(c).end()));
  }
  json binaries = json::array();
  for (const auto& b : model.binary_models) {
    binaries.push_back({{"support_indices", b.support_indices}, {"epochs", b.epochs}, {"converged", b.converged}});
  }
  json preprocess = json::array();
  for (auto k : model.preprocess) preprocess.push_back(std::string(to_string(k)));
  return {
      {"format", kModelFormat},
      {"version", kModelVersion},
      {"n_classes", h.n_classes()},
      {"n_features", h.n_features()},
      {"class_values", model.class_values},
      {"weights", std::move(weights)},
      {"biases", std::vector<double>(h.biases().begin(), h.biases().end())},
      {"solver",
       {{"loss", "l1-hinge"},
        {"method", "dual-coordinate-descent"},
        {"C", model.solver.C},
        {"bias_feature", model.solver.bias_feature},
        {"tolerance", model.solver.tolerance},
        {"max_epochs", model.solver.max_epochs},
        {"seed", model.solver.seed}}},
      {"binary_models", std::move(binaries)},
      {"preprocess", std::move(preprocess)},
  };
}

SourceModel source_model_from_json(const json& doc) {
  try {
    if (doc.at("format").get<std::string>() != kModelFormat) throw InputError("not an rwa model document");
    if (doc.at("version").get<int>() != kModelVersion) {
      throw InputError("unsupported model version " + doc.at("version").dump());
    }
    const int n_classes = doc.at("n_classes").get<int>();
    const int n_features = doc.at("n_features").get<int>();
    const auto& rows = doc.at("weights");
    if (static_cast<int>(rows.size()) != n_classes) throw InputError("weights row count mismatch");
    Eigen::MatrixXd weights(n_classes, n_features);
    for (int c = 0; c < n_classes; ++c) {
      const auto row = rows[static_cast<std::size_t>(c)].get<std::vector<double>>();
      if (static_cast<int>(row.size()) != n_features) throw InputError("weights column count mismatch");
      weights.row(c) = Eigen::Map<const Eigen::RowVectorXd>(row.data(), n_features);
    }
    const auto biases = doc.at("biases").get<std::vector<double>>();
    if (static_cast<int>(biases.size()) != n_classes) throw InputError("bias count mismatch");

    SourceModel m;
    m.hypothesis = LinearHypothesis(std::move(weights), Eigen::Map<const Eigen::VectorXd>(biases.data(), n_classes));
    m.class_values = doc.at("class_values").get<std::vector<double>>();
    if (static_cast<int>(m.class_values.size()) != n_classes) throw InputError("class_values count mismatch");
    const auto& s = doc.at("solver");
    m.solver.C = s.at("C").get<double>();
    m.solver.bias_feature = s.at("bias_feature").get<double>();
    m.solver.tolerance = s.at("tolerance").get<double>();
    m.solver.max_epochs = s.at("max_epochs").get<int>();
    m.solver.seed = s.at("seed").get<std::uint64_t>();
    for (const auto& b : doc.at("binary_models")) {
      m.binary_models.push_back({b.at("support_indices").get<std::vector<std::size_t>>(), b.at("epochs").get<int>(),
                                 b.at("converged").get<bool>()});
    }
    for (const auto& k : doc.at("preprocess")) m.preprocess.push_back(parse_preprocess_kind(k.get<std::string>()));
    return m;
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed model document: ") + e.what());
  } catch (const DimensionError& e) {
    throw InputError(std::string("malformed model document: ") + e.what());
  }
}

void save_model(const SourceModel& model, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path.string());
  out << to_json(model).dump(2) << '\n';
}

SourceModel load_model(const std::filesystem::path& path) {
  auto in = open_for_reading(path);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw InputError(path.string() + ": " + e.what());
  }
  return source_model_from_json(doc);
}

}  // namespace rwa
