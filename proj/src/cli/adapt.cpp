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

#include "rwa/data/io.hpp"

#include <chrono>
#include <fstream>

namespace rwa::cli {

using nlohmann::json;

namespace {

std::vector<double> raw_labels(const Labeling& y, const std::vector<double>& class_values) {
  std::vector<double> out;
  out.reserve(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) out.push_back(class_values[static_cast<std::size_t>(y[i])]);
  return out;
}

json optional_number(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

json config_json(const RwaConfig& cfg, const RwaResult& r) {
  return {{"iterations", cfg.iterations},
          {"per_class_quota", r.quota},
          {"quota_from_default", !cfg.per_class_quota.has_value()},
          {"c_target", r.c_target},
          {"c_from_cross_validation", !cfg.c_target.has_value()},
          {"c_grid", cfg.c_selection.grid},
          {"cv_folds", cfg.c_selection.folds},
          {"seed", cfg.seed},
          {"include_y0_in_vote", cfg.include_y0_in_vote},
          {"empty_class_fallback", std::string(to_string(cfg.empty_class_fallback))},
          {"bias_feature", cfg.solver.bias_feature},
          {"tolerance", cfg.solver.tolerance},
          {"max_epochs", cfg.solver.max_epochs},
          {"trace_margin", cfg.trace_margin}};
}

}  // namespace

json cmd_adapt(const AdaptOptions& options, RunManifest& manifest) {
  const auto wall_start = std::chrono::steady_clock::now();
  const SourceModel model = acquire_source(options.source, manifest);
  manifest.add_input("target", options.target);
  const Dataset target = prepare_target(options.target, options.format, model);

  std::optional<std::vector<int>> truth;
  if (options.truth) {
    manifest.add_input("truth", *options.truth);
    truth = load_truth(*options.truth, model, target.n_examples());
  }

  RwaConfig cfg = options.rwa;
  cfg.solver.bias_feature = options.bias_feature.value_or(model.solver.bias_feature);
  const auto result = run_rwa(model.hypothesis, target, cfg,
                              truth ? std::optional<std::span<const int>>(*truth) : std::nullopt);

  if (options.labels_out) save_label_file(raw_labels(result.final_labels, model.class_values), *options.labels_out);

  json trace = json::array();
  int k = 0;
  for (const auto& it : result.trace.iterations) {
    trace.push_back({{"iteration", ++k},
                     {"agreement_with_previous", it.agreement_with_previous},
                     {"margin", optional_number(it.margin)},
                     {"accuracy", optional_number(it.accuracy)},
                     {"seconds", it.seconds},
                     {"retries", it.retries},
                     {"filled_classes", it.filled_classes}});
  }

  manifest.finish();
  json report;
  report["format"] = "rwa.adapt-report";
  report["version"] = 1;
  report["manifest"] = to_json(manifest);
  report["config"] = config_json(cfg, result);
  report["n_target"] = target.n_examples();
  report["n_features"] = target.n_features();
  report["class_values"] = model.class_values;
  report["initial_labels"] = raw_labels(result.initial, model.class_values);
  report["final_labels"] = raw_labels(result.final_labels, model.class_values);
  report["trace"] = std::move(trace);
  if (truth) {
    report["initial_accuracy"] = *result.initial_accuracy;
    report["final_accuracy"] = *result.final_accuracy;
  }
  report["wall_clock_seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - wall_start).count();
  return report;
}

}  // namespace rwa::cli
