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

#include "rwa/data/toy.hpp"
#include "rwa/error.hpp"

#include <atomic>
#include <charconv>
#include <exception>
#include <mutex>
#include <ostream>
#include <thread>

namespace rwa::cli {

std::vector<std::uint64_t> parse_seed_list(const std::string& spec) {
  auto number = [&](std::string_view s) {
    std::uint64_t v = 0;
    const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || end != s.data() + s.size() || s.empty()) {
      throw InputError("bad seed list '" + spec + "'");
    }
    return v;
  };
  std::vector<std::uint64_t> seeds;
  std::string_view rest = spec;
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const auto item = rest.substr(0, comma);
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    if (const auto dash = item.find('-'); dash != std::string_view::npos) {
      const auto lo = number(item.substr(0, dash));
      const auto hi = number(item.substr(dash + 1));
      if (hi < lo) throw InputError("bad seed range '" + std::string(item) + "'");
      for (auto s = lo; s <= hi; ++s) seeds.push_back(s);
    } else {
      seeds.push_back(number(item));
    }
  }
  if (seeds.empty()) throw InputError("empty seed list");
  return seeds;
}

namespace {

struct SweepProblem {
  LinearHypothesis h_s;
  Dataset target;
  std::vector<int> truth;
  double bias_feature = 1.0;
};

SweepProblem load_problem(const SweepOptions& options, RunManifest& manifest) {
  SweepProblem p;
  if (options.toy) {
    auto params = RotatedToyParams::trace_setup();
    params.seed = options.toy_seed;
    const auto toy = generate_rotated_toy(params);
    TrainSourceOptions training = options.source.training;
    training.seed = options.toy_seed;
    const auto model = train_source(toy.source, training).model;
    p.h_s = model.hypothesis;
    p.target = toy.target.without_labels();
    p.truth = toy.target.labels();
    p.bias_feature = options.bias_feature.value_or(model.solver.bias_feature);
    return p;
  }
  if (!options.target || !options.truth) throw InputError("sweep needs a target and a truth file, or --toy");
  const auto model = acquire_source(options.source, manifest);
  manifest.add_input("target", *options.target);
  p.target = prepare_target(*options.target, options.format, model);
  manifest.add_input("truth", *options.truth);
  p.truth = load_truth(*options.truth, model, p.target.n_examples());
  p.h_s = model.hypothesis;
  p.bias_feature = options.bias_feature.value_or(model.solver.bias_feature);
  return p;
}

}  // namespace

std::vector<SweepRow> cmd_sweep(const SweepOptions& options, RunManifest& manifest) {
  if (options.iterations.empty() || options.seeds.empty()) throw InputError("empty sweep grid");
  for (int k : options.iterations) {
    if (k < 1) throw InputError("iteration counts must be positive");
  }
  const SweepProblem problem = load_problem(options, manifest);

  std::vector<std::size_t> quotas = options.quotas;
  if (quotas.empty()) quotas.push_back(problem.target.n_examples() / static_cast<std::size_t>(problem.h_s.n_classes()));
  const int max_k = *std::max_element(options.iterations.begin(), options.iterations.end());

  const std::size_t n_k = options.iterations.size();
  const std::size_t n_q = quotas.size();
  const std::size_t n_s = options.seeds.size();
  std::vector<SweepRow> rows(n_k * n_q * n_s);

  // One walk of max_k steps per (quota, seed); shorter K are its prefixes,
  // since the walk's first K steps do not depend on how many follow.
  auto job = [&](std::size_t index) {
    const std::size_t qi = index / n_s;
    const std::size_t si = index % n_s;
    RwaConfig cfg = options.rwa;
    cfg.iterations = max_k;
    cfg.per_class_quota = quotas[qi];
    cfg.seed = options.seeds[si];
    cfg.trace_margin = false;
    cfg.solver.bias_feature = problem.bias_feature;
    const auto result = run_rwa(problem.h_s, problem.target, cfg, std::span<const int>(problem.truth));

    for (std::size_t ki = 0; ki < n_k; ++ki) {
      const int k = options.iterations[ki];
      std::vector<Labeling> voters;
      if (cfg.include_y0_in_vote) voters.push_back(result.initial);
      for (int j = 0; j < k; ++j) voters.push_back(result.trace.iterations[static_cast<std::size_t>(j)].labels);
      auto& row = rows[(ki * n_q + qi) * n_s + si];
      row.iterations = k;
      row.quota = quotas[qi];
      row.seed = cfg.seed;
      row.vote_accuracy = accuracy(majority_vote(voters), problem.truth);
      row.last_accuracy = *result.trace.iterations[static_cast<std::size_t>(k - 1)].accuracy;
    }
  };

  const std::size_t n_jobs = n_q * n_s;
  unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, n_jobs));

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < n_jobs; i = next++) {
          try {
            job(i);
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
            next = n_jobs;
          }
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
  manifest.finish();
  return rows;
}

void write_sweep_tsv(const std::vector<SweepRow>& rows, const RunManifest& manifest, std::ostream& out) {
  out << "# " << to_json(manifest).dump() << '\n';
  out << "K\tquota\tseed\tvote_accuracy\tlast_accuracy\n";
  out.precision(6);
  out << std::fixed;
  for (const auto& r : rows) {
    out << r.iterations << '\t' << r.quota << '\t' << r.seed << '\t' << r.vote_accuracy << '\t' << r.last_accuracy
        << '\n';
  }
  out.unsetf(std::ios::fixed);
}

}  // namespace rwa::cli
