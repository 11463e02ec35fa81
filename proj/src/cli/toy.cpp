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
#include "rwa/data/toy.hpp"
#include "rwa/error.hpp"

#include <fstream>

namespace rwa::cli {

using nlohmann::json;

json cmd_toy(const ToyOptions& options, RunManifest& manifest) {
  std::error_code ec;
  std::filesystem::create_directories(options.out_dir, ec);
  if (ec) throw InputError("cannot create " + options.out_dir.string() + ": " + ec.message());

  json files = json::array();
  auto write = [&](const Dataset& data, const char* name) {
    save_svmlight(data, options.out_dir / name);
    files.push_back(name);
  };

  if (options.which == "rotated") {
    RotatedToyParams params;
    if (options.preset == "trace") {
      params = RotatedToyParams::trace_setup();
    } else if (options.preset == "small") {
      params = RotatedToyParams::small_rotation();
    } else {
      throw InputError("unknown rotated preset '" + options.preset + "' (trace, small)");
    }
    params.seed = options.seed;
    if (options.n_per_class) params.n_per_class = *options.n_per_class;
    if (options.rotation_degrees) params.rotation_degrees = *options.rotation_degrees;

    const auto toy = generate_rotated_toy(params);
    write(toy.source, "source.svm");
    write(toy.target.without_labels(), "target.svm");
    std::vector<double> truth;
    for (int id : toy.target.labels()) truth.push_back(toy.target.class_values()[static_cast<std::size_t>(id)]);
    save_label_file(truth, options.out_dir / "truth.txt");
    files.push_back("truth.txt");
  } else if (options.which == "line") {
    const auto toy = generate_line_toy();
    write(toy.source, "source.svm");
    write(toy.target, "target.svm");
  } else {
    throw InputError("unknown toy '" + options.which + "' (rotated, line)");
  }

  manifest.finish();
  json doc = {{"format", "rwa.toy-manifest"}, {"version", 1}, {"manifest", to_json(manifest)}, {"files", files}};
  std::ofstream out(options.out_dir / "manifest.json");
  if (!out) throw InputError("cannot write manifest into " + options.out_dir.string());
  out << doc.dump(2) << '\n';
  return doc;
}

}  // namespace rwa::cli
