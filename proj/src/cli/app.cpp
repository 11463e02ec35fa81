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

#include "rwa/error.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>

namespace rwa::cli {
namespace {

std::uint64_t default_seed() {
  const char* env = std::getenv("RWA_SEED");
  if (!env || !*env) return 0;
  try {
    std::size_t used = 0;
    const auto v = std::stoull(env, &used);
    if (used != std::string(env).size()) throw std::invalid_argument(env);
    return v;
  } catch (const std::exception&) {
    throw InputError(std::string("RWA_SEED is not an unsigned integer: ") + env);
  }
}

void emit(const nlohmann::json& doc, const std::optional<path>& file, std::ostream& out) {
  if (!file) {
    out << doc.dump(2) << '\n';
    return;
  }
  std::ofstream f(*file);
  if (!f) throw InputError("cannot write " + file->string());
  f << doc.dump(2) << '\n';
}

void add_source_flags(CLI::App* cmd, SourceSpec& spec, std::optional<double>& source_c) {
  cmd->add_option("--model", spec.model, "Serialized source model (JSON)");
  cmd->add_option("--source", spec.source, "Labeled source data, trained on the fly and discarded");
  cmd->add_option("--source-c", source_c, "Source C; cross-validated when omitted")->check(CLI::PositiveNumber);
  cmd->add_option("--source-folds", spec.training.folds, "Folds for the source C search")->check(CLI::Range(2, 100));
}

void add_format_flags(CLI::App* cmd, DataFormat& format) {
  cmd->add_flag("--csv-header", format.csv_header, "CSV inputs start with a header row");
  cmd->add_option("--csv-delimiter", format.csv_delimiter, "CSV field delimiter");
}

void add_walk_flags(CLI::App* cmd, RwaConfig& cfg, std::optional<double>& c_target, std::string& fallback) {
  cmd->add_option("--c-target", c_target, "C for target-side SVMs; cross-validated on (T, Y0) when omitted")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--cv-folds", cfg.c_selection.folds, "Folds for the target C search")->check(CLI::Range(2, 100));
  cmd->add_flag("--include-y0", cfg.include_y0_in_vote, "Let the source labeling vote");
  cmd->add_option("--empty-class", fallback, "abort | top_scores")->check(CLI::IsMember({"abort", "top_scores"}));
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Random walk adaptation of linear classifiers to an unlabeled target domain", "rwa"};
  app.require_subcommand(1);
  app.set_version_flag("--version", RWA_VERSION);

  std::vector<std::string> echo(argv, argv + argc);
  std::optional<std::uint64_t> seed;
  std::optional<path> out_file;
  std::string preprocess;
  std::optional<double> source_c;
  std::optional<double> c_target;
  std::optional<double> bias_feature;
  std::string fallback = "abort";

  // train-source
  TrainSourceOptions train;
  auto* train_cmd = app.add_subcommand("train-source", "Train and serialize the source hypothesis");
  train_cmd->add_option("--source", train.source, "Labeled source data")->required();
  train_cmd->add_option("--out", out_file, "Model file")->required();
  train_cmd->add_option("--c", source_c, "C; cross-validated when omitted")->check(CLI::PositiveNumber);
  train_cmd->add_option("--folds", train.folds, "Cross-validation folds")->check(CLI::Range(2, 100));
  train_cmd->add_option("--bias-feature", bias_feature, "Constant feature carrying the bias")->check(CLI::PositiveNumber);
  train_cmd->add_option("--preprocess", preprocess, "Comma-separated recipe, fitted per domain");
  train_cmd->add_option("--seed", seed, "Seed (default: RWA_SEED or 0)");
  add_format_flags(train_cmd, train.format);

  // adapt
  AdaptOptions adapt;
  auto* adapt_cmd = app.add_subcommand("adapt", "Run the random walk on an unlabeled target");
  add_source_flags(adapt_cmd, adapt.source, source_c);
  adapt_cmd->add_option("--target", adapt.target, "Unlabeled target data")->required();
  adapt_cmd->add_option("--truth", adapt.truth, "Ground-truth target labels, for evaluation only");
  adapt_cmd->add_option("--iterations,-K", adapt.rwa.iterations, "Walk length")->check(CLI::PositiveNumber);
  adapt_cmd->add_option("--quota", adapt.rwa.per_class_quota, "Bootstrap draws per class (default |T| / classes)");
  adapt_cmd->add_option("--bias-feature", bias_feature, "Bias feature for target SVMs (default: the model's)")
      ->check(CLI::PositiveNumber);
  adapt_cmd->add_option("--preprocess", preprocess, "Recipe when training the source on the fly");
  adapt_cmd->add_flag("--no-margin", "Skip the per-iteration margin refit");
  adapt_cmd->add_option("--labels-out", adapt.labels_out, "Write final labels, one per line");
  adapt_cmd->add_option("--out", out_file, "Report file (default stdout)");
  adapt_cmd->add_option("--seed", seed, "Seed (default: RWA_SEED or 0)");
  add_walk_flags(adapt_cmd, adapt.rwa, c_target, fallback);
  add_format_flags(adapt_cmd, adapt.format);

  // toy
  ToyOptions toy;
  auto* toy_cmd = app.add_subcommand("toy", "Write a toy source/target pair");
  toy_cmd->add_option("which", toy.which, "rotated | line")->required()->check(CLI::IsMember({"rotated", "line"}));
  toy_cmd->add_option("--out", toy.out_dir, "Output directory (created)")->required();
  toy_cmd->add_option("--preset", toy.preset, "trace | small")->check(CLI::IsMember({"trace", "small"}));
  toy_cmd->add_option("--n-per-class", toy.n_per_class)->check(CLI::PositiveNumber);
  toy_cmd->add_option("--rotation", toy.rotation_degrees, "Degrees, counter-clockwise");
  toy_cmd->add_option("--seed", seed, "Seed (default: RWA_SEED or 0)");

  // chain
  ChainOptions chain;
  std::string scheme = "class_balanced";
  auto* chain_cmd = app.add_subcommand("chain", "Transition matrix and stationary analysis of a 1-D target");
  chain_cmd->add_option("--matrix-file", chain.matrix_file, "Analyse a given transition matrix instead");
  add_source_flags(chain_cmd, chain.source, source_c);
  chain_cmd->add_option("--target", chain.target, "Unlabeled 1-feature target");
  chain_cmd->add_option("--quota", chain.quota, "Draws per class (default |T| / 2)");
  chain_cmd->add_option("--draws", chain.draws, "Monte-Carlo draws per row")->check(CLI::PositiveNumber);
  chain_cmd->add_option("--pii-draws", chain.pii_draws, "Draws per state for the diagonal check")
      ->check(CLI::Range(std::size_t{100}, std::numeric_limits<std::size_t>::max()));
  chain_cmd->add_flag("--skip-pii", chain.skip_pii, "Skip the per-state diagonal check");
  chain_cmd->add_option("--c-target", chain.c_target, "C for the bootstrap SVMs")->check(CLI::PositiveNumber);
  chain_cmd->add_option("--bias-feature", chain.bias_feature, "Bias feature (default: the model's)")
      ->check(CLI::PositiveNumber);
  chain_cmd->add_option("--scheme", scheme, "class_balanced | uniform")
      ->check(CLI::IsMember({"class_balanced", "uniform"}));
  chain_cmd->add_option("--out", out_file, "Report file (default stdout)");
  chain_cmd->add_option("--seed", seed, "Seed (default: RWA_SEED or 0)");
  add_format_flags(chain_cmd, chain.format);

  // bound
  BoundOptions bound;
  auto* bound_cmd = app.add_subcommand("bound", "Evaluate a closed-form bound");
  bound_cmd->require_subcommand(1);
  auto* containment = bound_cmd->add_subcommand("containment", "P(all d support vectors in a size-m sample of n)");
  containment->add_option("--n", bound.n)->required()->check(CLI::PositiveNumber);
  containment->add_option("--m", bound.m)->required();
  containment->add_option("--d", bound.d)->required();
  containment->add_flag("--approximate", bound.approximate, "Exponential form");
  auto* generalization = bound_cmd->add_subcommand("generalization", "Max-margin error bound from d support vectors");
  generalization->add_option("--l", bound.l)->required();
  generalization->add_option("--d", bound.d)->required();
  generalization->add_option("--delta", bound.delta)->required();

  // sweep
  SweepOptions sweep;
  std::string seeds_spec;
  std::optional<std::uint64_t> toy_seed;
  auto* sweep_cmd = app.add_subcommand("sweep", "Accuracy over a (K, quota, seed) grid as TSV");
  add_source_flags(sweep_cmd, sweep.source, source_c);
  sweep_cmd->add_option("--target", sweep.target, "Unlabeled target data");
  sweep_cmd->add_option("--truth", sweep.truth, "Ground-truth target labels");
  sweep_cmd->add_flag("--toy", sweep.toy, "Use the rotated toy instead of files");
  sweep_cmd->add_option("--toy-seed", toy_seed, "Seed of the generated toy");
  sweep_cmd->add_option("--iterations,-K", sweep.iterations, "Walk lengths")->delimiter(',');
  sweep_cmd->add_option("--quotas", sweep.quotas, "Per-class quotas")->delimiter(',');
  sweep_cmd->add_option("--seeds", seeds_spec, "Seeds, e.g. 0-19 or 1,4,9");
  sweep_cmd->add_option("--threads", sweep.threads, "Worker threads (0 = all cores)");
  sweep_cmd->add_option("--bias-feature", sweep.bias_feature, "Bias feature for target SVMs")
      ->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--out", out_file, "TSV file (default stdout)");
  add_walk_flags(sweep_cmd, sweep.rwa, c_target, fallback);
  add_format_flags(sweep_cmd, sweep.format);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    RunManifest manifest;
    manifest.args = echo;
    manifest.seed = seed.value_or(default_seed());
    manifest.start();

    auto source_training = [&](TrainSourceOptions& t) {
      t.c = source_c;
      t.seed = manifest.seed;
      if (bias_feature) t.bias_feature = *bias_feature;
      if (!preprocess.empty()) t.preprocess = parse_preprocess_chain(preprocess);
    };

    if (*train_cmd) {
      manifest.command = "train-source";
      source_training(train);
      manifest.add_input("source", train.source);
      const auto trained = train_source(load_labeled(train.source, train.format), train);
      manifest.finish();
      auto doc = to_json(trained.model);
      doc["training"] = {{"cv_accuracy", trained.cv_accuracy ? nlohmann::json(*trained.cv_accuracy) : nullptr}};
      doc["manifest"] = to_json(manifest);
      emit(doc, out_file, out);
    } else if (*adapt_cmd) {
      manifest.command = "adapt";
      source_training(adapt.source.training);
      adapt.rwa.seed = manifest.seed;
      adapt.rwa.c_target = c_target;
      adapt.rwa.empty_class_fallback = parse_empty_class_policy(fallback);
      adapt.rwa.trace_margin = adapt_cmd->count("--no-margin") == 0;
      adapt.bias_feature = bias_feature;
      emit(cmd_adapt(adapt, manifest), out_file, out);
    } else if (*toy_cmd) {
      manifest.command = "toy";
      toy.seed = manifest.seed;
      cmd_toy(toy, manifest);
    } else if (*chain_cmd) {
      manifest.command = "chain";
      source_training(chain.source.training);
      chain.seed = manifest.seed;
      chain.scheme = scheme == "uniform" ? SubsampleScheme::uniform : SubsampleScheme::class_balanced;
      const auto outcome = cmd_chain(chain, manifest);
      emit(outcome.report, out_file, out);
      if (outcome.exit_code != kOk) err << "rwa: " << outcome.report["error"].get<std::string>() << '\n';
      return outcome.exit_code;
    } else if (*bound_cmd) {
      bound.kind = *containment ? "containment" : "generalization";
      out << std::fixed << std::setprecision(6) << cmd_bound(bound) << '\n';
    } else if (*sweep_cmd) {
      manifest.command = "sweep";
      source_training(sweep.source.training);
      sweep.toy_seed = toy_seed.value_or(manifest.seed);
      sweep.rwa.c_target = c_target;
      sweep.rwa.empty_class_fallback = parse_empty_class_policy(fallback);
      if (!seeds_spec.empty()) sweep.seeds = parse_seed_list(seeds_spec);
      else sweep.seeds = {manifest.seed};
      const auto rows = cmd_sweep(sweep, manifest);
      if (out_file) {
        std::ofstream f(*out_file);
        if (!f) throw InputError("cannot write " + out_file->string());
        write_sweep_tsv(rows, manifest, f);
      } else {
        write_sweep_tsv(rows, manifest, out);
      }
    }
    return kOk;
  } catch (const InputError& e) {
    err << "rwa: " << e.what() << '\n';
    return kInputError;
  } catch (const DimensionError& e) {
    err << "rwa: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    err << "rwa: " << e.what() << '\n';
    return kContractFailure;
  }
}

}  // namespace rwa::cli
