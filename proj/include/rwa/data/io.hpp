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

#include "rwa/data/dataset.hpp"

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace rwa {

struct SvmlightOptions {
  /// Overrides the inferred feature count (max index seen). Must not be
  /// smaller than the largest index in the file.
  std::optional<int> n_features;
};

/// Reads `<label> <idx>:<val> ...` lines with 1-based indices. `#` starts a
/// comment. A label of `?` (or a line starting directly with `idx:val`) marks
/// an unlabeled example; a file must be either fully labeled or fully
/// unlabeled. Labels are remapped to contiguous ids in ascending raw order.
Dataset load_svmlight(const std::filesystem::path& path, const SvmlightOptions& options = {});
Dataset parse_svmlight(std::istream& in, const std::string& source_name,
                       const SvmlightOptions& options = {});

/// Writes raw label values (or `?` for unlabeled data) and 1-based indices,
/// values printed with 17 significant digits.
void save_svmlight(const Dataset& data, const std::filesystem::path& path);
void write_svmlight(const Dataset& data, std::ostream& out);

struct CsvOptions {
  std::optional<std::size_t> label_column;
  bool has_header = false;
  char delimiter = ',';
};

Dataset load_dense_csv(const std::filesystem::path& path, const CsvOptions& options = {});
Dataset parse_dense_csv(std::istream& in, const std::string& source_name,
                        const CsvOptions& options = {});

/// One raw label per line; blank lines and `#` comments are skipped.
std::vector<double> load_label_file(const std::filesystem::path& path);
void save_label_file(const std::vector<double>& raw_labels, const std::filesystem::path& path);

/// Formats a raw label the way it is written to disk ("-1", "1", "2.5").
std::string format_label(double raw);

/// Maps raw label values onto the class ids defined by `class_values`.
/// Throws InputError for a value not present in `class_values`.
std::vector<int> map_to_class_ids(const std::vector<double>& raw,
                                  const std::vector<double>& class_values);

}  // namespace rwa
