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


#include "rwa/cli/commands.hpp"

#include "rwa/chain/bounds.hpp"
#include "rwa/chain/report.hpp"
#include "rwa/chain/state_space.hpp"
#include "rwa/error.hpp"

namespace rwa::cli {

using nlohmann::json;

namespace {

// Fills "stationary" and "stability", or "error" when the chain has none.
int add_stationary(json& report, const TransitionMatrix& P) {
  try {
    const auto pi = stationary(P).pi;
    const std::vector<double> values(pi.data(), pi.data() + pi.size());
    report["stationary"] = values;
    report["stability"] = values;
    report["error"] = nullptr;
    return kOk;
  } catch (const ContractError& e) {
    report["stationary"] = nullptr;
    report["stability"] = nullptr;
    report["error"] = e.what();
    return kContractFailure;
  }
}

}  // namespace

ChainOutcome cmd_chain(const ChainOptions& options, RunManifest& manifest) {
  ChainOutcome out;
  json& report = out.report;
  report["format"] = "rwa.chain-report";
  report["version"] = 1;

  if (options.matrix_file) {
    manifest.add_input("matrix", *options.matrix_file);
    const auto file = load_matrix_file(*options.matrix_file);
    report["mode"] = "matrix";
    report["matrix"] = to_json(file.matrix, file.states ? &*file.states : nullptr);
    out.exit_code = add_stationary(report, file.matrix);
    manifest.finish();
    report["manifest"] = to_json(manifest);
    return out;
  }

  if (!options.target) throw InputError("chain needs a target file or a matrix file");
  const SourceModel model = acquire_source(options.source, manifest);
  if (model.hypothesis.n_classes() != 2) throw ContractError("the chain analysis is defined for binary problems only");
  manifest.add_input("target", *options.target);
  const Dataset target = prepare_target(*options.target, options.format, model);

  const auto space = enumerate_1d_labelings(target, orientation_of(model.hypothesis), true);
  if (space.size() == 0) throw ContractError("no balanced threshold labelings on this target");

  TransitionOptions topt;
  topt.quota = options.quota.value_or(target.n_examples() / 2);
  if (topt.quota < 1) throw ContractError("per-class quota must be at least 1");
  topt.draws = options.draws;
  topt.seed = options.seed;
  topt.scheme = options.scheme;
  topt.solver = model.solver;
  topt.solver.C = options.c_target;
  topt.solver.bias_feature = options.bias_feature.value_or(model.solver.bias_feature);

  const auto P = estimate_transitions(space, target, model.hypothesis, topt);

  json states = json::array();
  for (const auto& y : space.states()) {
    std::vector<double> raw;
    for (int id : y.assignments()) raw.push_back(model.class_values[static_cast<std::size_t>(id)]);
    states.push_back(std::move(raw));
  }

  report["mode"] = "estimate";
  report["states"] = std::move(states);
  report["config"] = {{"quota", topt.quota},
                      {"draws", topt.draws},
                      {"seed", topt.seed},
                      {"c_target", topt.solver.C},
                      {"bias_feature", topt.solver.bias_feature},
                      {"scheme", topt.scheme == SubsampleScheme::class_balanced ? "class_balanced" : "uniform"}};
  report["matrix"] = to_json(P, &space);
  report["max_overflow"] = P.max_overflow();
  out.exit_code = add_stationary(report, P);

  json pii = json::array();
  if (!options.skip_pii) {
    TransitionOptions popt = topt;
    popt.draws = options.pii_draws.value_or(std::max<std::size_t>(options.draws, 100));
    for (std::size_t i = 0; i < space.size(); ++i) {
      popt.seed = options.seed ^ static_cast<std::uint64_t>(i);
      pii.push_back(to_json(verify_pii_bound(target, space.state(i), model.hypothesis, popt)));
    }
  }
  report["pii"] = std::move(pii);

  manifest.finish();
  report["manifest"] = to_json(manifest);
  return out;
}

double cmd_bound(const BoundOptions& options) {
  if (options.kind == "containment") return containment_bound<double>(options.n, options.m, options.d, options.approximate);
  if (options.kind == "generalization") return generalization_bound<double>(options.l, options.d, options.delta);
  throw InputError("unknown bound '" + options.kind + "' (containment, generalization)");
}

}  // namespace rwa::cli
