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


#pragma once

#include "rwa/adapt/rwa.hpp"
#include "rwa/chain/transitions.hpp"
#include "rwa/cli/manifest.hpp"
#include "rwa/data/dataset.hpp"
#include "rwa/data/preprocess.hpp"
#include "rwa/linsvm/model_io.hpp"

#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace rwa::cli {

using std::filesystem::path;

enum ExitCode : int {
  kOk = 0,
  kInputError = 2,
  kContractFailure = 3,
};

/// Files ending in .csv are dense CSV (labels in the last column for labeled
/// data), anything else is svmlight.
struct DataFormat {
  bool csv_header = false;
  char csv_delimiter = ',';
};

Dataset load_labeled(const path& file, const DataFormat& format);
/// Labels present in the file are dropped.
Dataset load_unlabeled(const path& file, const DataFormat& format);

struct TrainSourceOptions {
  path source;
  DataFormat format;
  std::optional<double> c;  // cross-validated over default_c_grid() when unset
  int folds = 5;
  std::uint64_t seed = 0;
  double bias_feature = 1.0;
  std::vector<PreprocessKind> preprocess;
};

struct TrainedSource {
  SourceModel model;
  std::optional<double> cv_accuracy;
};

TrainedSource train_source(const Dataset& source, const TrainSourceOptions& options);

/// Where the source hypothesis comes from: a serialized model, or labeled
/// data trained on the spot and then dropped.
struct SourceSpec {
  std::optional<path> model;
  std::optional<path> source;
  TrainSourceOptions training;
};

SourceModel acquire_source(const SourceSpec& spec, RunManifest& manifest);

/// Loads the target, widens it to the model's width for svmlight input and
/// applies the model's preprocessing kinds with target statistics.
Dataset prepare_target(const path& file, const DataFormat& format, const SourceModel& model);

std::vector<int> load_truth(const path& file, const SourceModel& model, std::size_t n_examples);

struct AdaptOptions {
  SourceSpec source;
  path target;
  DataFormat format;
  std::optional<path> truth;
  std::optional<path> labels_out;
  RwaConfig rwa;
  std::optional<double> bias_feature;  // the source model's value when unset
};

nlohmann::json cmd_adapt(const AdaptOptions& options, RunManifest& manifest);

struct ToyOptions {
  std::string which = "rotated";  // rotated | line
  std::string preset = "trace";   // trace | small (rotated only)
  path out_dir;
  std::uint64_t seed = 0;
  std::optional<int> n_per_class;
  std::optional<double> rotation_degrees;
};

/// Writes source.svm, target.svm (unlabeled), truth.txt for the rotated toy
/// and manifest.json. Returns the manifest document.
nlohmann::json cmd_toy(const ToyOptions& options, RunManifest& manifest);

struct ChainOptions {
  std::optional<path> matrix_file;
  SourceSpec source;
  std::optional<path> target;
  DataFormat format;
  std::optional<std::size_t> quota;  // floor(|T| / 2) when unset
  std::size_t draws = 1000;
  std::optional<std::size_t> pii_draws;  // defaults to max(draws, 100)
  std::uint64_t seed = 0;
  double c_target = 1.0;
  std::optional<double> bias_feature;  // overrides the model's solver setting
  SubsampleScheme scheme = SubsampleScheme::class_balanced;
  bool skip_pii = false;
};

struct ChainOutcome {
  nlohmann::json report;
  int exit_code = kOk;
};

/// A stationary distribution that cannot be computed (reducible chain,
/// leaked mass) is reported with an error message and exit code 3.
ChainOutcome cmd_chain(const ChainOptions& options, RunManifest& manifest);

struct BoundOptions {
  std::string kind;  // containment | generalization
  std::size_t n = 1, m = 0, d = 0, l = 0;
  double delta = 0.05;
  bool approximate = false;
};

double cmd_bound(const BoundOptions& options);

struct SweepOptions {
  SourceSpec source;
  std::optional<path> target;
  std::optional<path> truth;
  DataFormat format;
  /// In-memory rotated toy instead of files; seeded with toy_seed.
  bool toy = false;
  std::uint64_t toy_seed = 0;
  std::vector<int> iterations{10};
  std::vector<std::size_t> quotas;  // floor(|T| / n_classes) when empty
  std::vector<std::uint64_t> seeds{0};
  RwaConfig rwa;
  std::optional<double> bias_feature;
  unsigned threads = 0;  // 0 = hardware concurrency
};

struct SweepRow {
  int iterations = 0;
  std::size_t quota = 0;
  std::uint64_t seed = 0;
  double vote_accuracy = 0.0;
  double last_accuracy = 0.0;
};

/// Rows ordered by (iterations, quota, seed) grid position.
std::vector<SweepRow> cmd_sweep(const SweepOptions& options, RunManifest& manifest);
void write_sweep_tsv(const std::vector<SweepRow>& rows, const RunManifest& manifest, std::ostream& out);

/// Parses "0-19" or "1,4,9" or a mix ("0-3,7").
std::vector<std::uint64_t> parse_seed_list(const std::string& spec);

/// Entry point of the rwa tool. Returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rwa::cli
