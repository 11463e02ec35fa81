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
#include "rwa/error.hpp"
#include "rwa/linsvm/cross_validation.hpp"

#include <algorithm>
#include <string>

namespace rwa::cli {
namespace {

bool is_csv(const path& file) {
  auto ext = file.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) { return std::tolower(c); });
  return ext == ".csv";
}

void require_exists(const path& file) {
  if (!std::filesystem::exists(file)) throw InputError("no such file: " + file.string());
}

}  // namespace

Dataset load_labeled(const path& file, const DataFormat& format) {
  require_exists(file);
  Dataset data;
  if (is_csv(file)) {
    CsvOptions csv{.label_column = std::nullopt, .has_header = format.csv_header, .delimiter = format.csv_delimiter};
    // The label column index is only known after peeking at the width, so
    // parse once without labels and once with.
    const auto probe = load_dense_csv(file, csv);
    if (probe.n_features() < 2) throw InputError(file.string() + ": need at least one feature and a label column");
    csv.label_column = static_cast<std::size_t>(probe.n_features() - 1);
    data = load_dense_csv(file, csv);
  } else {
    data = load_svmlight(file);
  }
  if (!data.has_labels()) throw InputError(file.string() + ": labeled data expected");
  return data;
}

Dataset load_unlabeled(const path& file, const DataFormat& format) {
  require_exists(file);
  if (is_csv(file)) {
    return load_dense_csv(file, {.label_column = std::nullopt, .has_header = format.csv_header, .delimiter = format.csv_delimiter})
        .without_labels();
  }
  auto data = load_svmlight(file);
  return data.has_labels() ? data.without_labels() : data;
}

TrainedSource train_source(const Dataset& source, const TrainSourceOptions& options) {
  if (!source.has_labels()) throw InputError("source data carries no labels");
  Dataset data = source;
  if (!options.preprocess.empty()) data = PreprocessRecipe::fit(options.preprocess, source).apply(source);

  const auto& labels = data.labels();
  const int n_classes = data.n_classes();
  SvmOptions solver;
  solver.bias_feature = options.bias_feature;
  solver.seed = options.seed;

  TrainedSource out;
  if (options.c) {
    solver.C = *options.c;
  } else {
    const auto counts = class_counts(labels, n_classes);
    CvOptions cv;
    cv.folds = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(options.folds),
                                                      *std::min_element(counts.begin(), counts.end())));
    cv.seed = options.seed;
    cv.solver = solver;
    const auto result = cross_validate_c(data, labels, n_classes, cv);
    solver.C = result.best_c;
    const auto best = std::find(cv.grid.begin(), cv.grid.end(), result.best_c) - cv.grid.begin();
    out.cv_accuracy = result.mean_accuracy[static_cast<std::size_t>(best)];
  }
  const auto fit = train_ova_models(data, labels, n_classes, solver);
  out.model = make_source_model(fit, data.class_values(), solver, options.preprocess);
  return out;
}

SourceModel acquire_source(const SourceSpec& spec, RunManifest& manifest) {
  if (spec.model.has_value() == spec.source.has_value()) {
    throw InputError("give exactly one of a source model or labeled source data");
  }
  if (spec.model) {
    require_exists(*spec.model);
    manifest.add_input("model", *spec.model);
    return load_model(*spec.model);
  }
  manifest.add_input("source", *spec.source);
  return train_source(load_labeled(*spec.source, DataFormat{}), spec.training).model;
}

Dataset prepare_target(const path& file, const DataFormat& format, const SourceModel& model) {
  Dataset target = load_unlabeled(file, format);
  const int width = model.hypothesis.n_features();
  if (target.n_features() > width || (is_csv(file) && target.n_features() != width)) {
    throw DimensionError(file.string() + ": target has " + std::to_string(target.n_features()) +
                         " features, the source model " + std::to_string(width));
  }
  // svmlight leaves trailing all-zero features implicit.
  if (target.n_features() < width) target = target.with_n_features(width);
  if (!model.preprocess.empty()) target = PreprocessRecipe::fit(model.preprocess, target).apply(target);
  return target;
}

std::vector<int> load_truth(const path& file, const SourceModel& model, std::size_t n_examples) {
  require_exists(file);
  auto ids = map_to_class_ids(load_label_file(file), model.class_values);
  if (ids.size() != n_examples) {
    throw DimensionError(file.string() + ": " + std::to_string(ids.size()) + " labels for " +
                         std::to_string(n_examples) + " target examples");
  }
  return ids;
}

}  // namespace rwa::cli
