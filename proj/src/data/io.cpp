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

#include "rwa/data/io.hpp"

#include "rwa/data/read_audit.hpp"
#include "rwa/error.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <string_view>

namespace rwa {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::optional<double> to_double(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v)) return std::nullopt;
  return v;
}

std::optional<long> to_long(std::string_view s) {
  long v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

// Assigns contiguous ids to raw labels in ascending order.
std::pair<std::vector<int>, std::vector<double>> remap_labels(const std::vector<double>& raw) {
  std::vector<double> values = raw;
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return {map_to_class_ids(raw, values), values};
}

}  // namespace

Dataset parse_svmlight(std::istream& in, const std::string& source_name,
                       const SvmlightOptions& options) {
  std::vector<std::vector<std::pair<int, double>>> rows;
  std::vector<double> raw_labels;
  std::optional<bool> labeled;
  int max_index = 0;

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view body = line;
    if (const auto hash = body.find('#'); hash != std::string_view::npos) body = body.substr(0, hash);
    body = trim(body);
    if (body.empty()) continue;

    auto tokens = split_ws(body);
    std::size_t first_feature = 0;
    bool row_labeled = false;
    if (tokens.front() == "?") {
      first_feature = 1;
    } else if (tokens.front().find(':') == std::string_view::npos) {
      const auto label = to_double(tokens.front());
      if (!label) throw ParseError(source_name, line_no, "bad label '" + std::string(tokens.front()) + "'");
      raw_labels.push_back(*label);
      row_labeled = true;
      first_feature = 1;
    }
    if (labeled && *labeled != row_labeled) {
      throw ParseError(source_name, line_no, "mix of labeled and unlabeled lines");
    }
    labeled = row_labeled;

    std::vector<std::pair<int, double>> row;
    long previous = 0;
    for (std::size_t t = first_feature; t < tokens.size(); ++t) {
      const auto colon = tokens[t].find(':');
      if (colon == std::string_view::npos) {
        throw ParseError(source_name, line_no, "expected index:value, got '" + std::string(tokens[t]) + "'");
      }
      const auto index = to_long(tokens[t].substr(0, colon));
      const auto value = to_double(tokens[t].substr(colon + 1));
      if (!index || !value) {
        throw ParseError(source_name, line_no, "malformed feature '" + std::string(tokens[t]) + "'");
      }
      if (*index < 1) throw ParseError(source_name, line_no, "feature indices are 1-based");
      if (*index <= previous) throw ParseError(source_name, line_no, "feature indices must be strictly increasing");
      if (*index > std::numeric_limits<int>::max()) throw ParseError(source_name, line_no, "feature index too large");
      previous = *index;
      max_index = std::max(max_index, static_cast<int>(*index));
      if (*value != 0.0) row.emplace_back(static_cast<int>(*index - 1), *value);
    }
    rows.push_back(std::move(row));
  }

  int n_features = max_index;
  if (options.n_features) {
    if (*options.n_features < max_index) {
      throw InputError(source_name + ": feature override " + std::to_string(*options.n_features) +
                       " is below the largest index " + std::to_string(max_index));
    }
    n_features = *options.n_features;
  }

  Dataset data = Dataset::from_rows(rows, n_features);
  if (labeled.value_or(false)) {
    auto [ids, values] = remap_labels(raw_labels);
    return data.with_labels(std::move(ids), std::move(values));
  }
  return data;
}

Dataset load_svmlight(const std::filesystem::path& path, const SvmlightOptions& options) {
  auto in = open_for_reading(path);
  return parse_svmlight(in, path.string(), options);
}

std::string format_label(double raw) {
  std::ostringstream os;
  os << std::setprecision(17) << raw;
  return os.str();
}

void write_svmlight(const Dataset& data, std::ostream& out) {
  out << std::setprecision(17);
  for (std::size_t i = 0; i < data.n_examples(); ++i) {
    if (data.has_labels()) {
      out << format_label(data.class_values()[static_cast<std::size_t>(data.labels()[i])]);
    } else {
      out << '?';
    }
    for (auto [j, v] : data.row(i)) out << ' ' << (j + 1) << ':' << v;
    out << '\n';
  }
}

void save_svmlight(const Dataset& data, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path.string());
  write_svmlight(data, out);
  if (!out) throw InputError("write failed for " + path.string());
}

Dataset parse_dense_csv(std::istream& in, const std::string& source_name, const CsvOptions& options) {
  std::vector<std::vector<double>> cells;
  std::string line;
  std::size_t line_no = 0;
  std::optional<std::size_t> width;
  bool skipped_header = !options.has_header;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view body = trim(line);
    if (body.empty()) continue;
    if (!skipped_header) {
      skipped_header = true;
      continue;
    }
    std::vector<double> row;
    std::size_t start = 0;
    std::size_t column = 0;
    while (true) {
      const auto end = body.find(options.delimiter, start);
      const auto cell = trim(body.substr(start, end == std::string_view::npos ? end : end - start));
      const auto v = to_double(cell);
      if (!v) {
        throw ParseError(source_name, line_no,
                         "column " + std::to_string(column + 1) + ": non-numeric cell '" + std::string(cell) + "'");
      }
      row.push_back(*v);
      ++column;
      if (end == std::string_view::npos) break;
      start = end + 1;
    }
    if (width && *width != row.size()) {
      throw ParseError(source_name, line_no,
                       "ragged row: " + std::to_string(row.size()) + " cells, expected " + std::to_string(*width));
    }
    width = row.size();
    cells.push_back(std::move(row));
  }

  const std::size_t n_columns = width.value_or(0);
  if (options.label_column && !cells.empty() && *options.label_column >= n_columns) {
    throw InputError(source_name + ": label column " + std::to_string(*options.label_column) +
                     " outside " + std::to_string(n_columns) + " columns");
  }
  const bool labeled = options.label_column.has_value();
  const int n_features = static_cast<int>(n_columns) - (labeled && n_columns > 0 ? 1 : 0);

  std::vector<std::vector<std::pair<int, double>>> rows;
  std::vector<double> raw_labels;
  for (const auto& r : cells) {
    std::vector<std::pair<int, double>> sparse;
    int j = 0;
    for (std::size_t c = 0; c < r.size(); ++c) {
      if (labeled && c == *options.label_column) {
        raw_labels.push_back(r[c]);
        continue;
      }
      if (r[c] != 0.0) sparse.emplace_back(j, r[c]);
      ++j;
    }
    rows.push_back(std::move(sparse));
  }

  Dataset data = Dataset::from_rows(rows, std::max(n_features, 0));
  if (labeled) {
    auto [ids, values] = remap_labels(raw_labels);
    return data.with_labels(std::move(ids), std::move(values));
  }
  return data;
}

Dataset load_dense_csv(const std::filesystem::path& path, const CsvOptions& options) {
  auto in = open_for_reading(path);
  return parse_dense_csv(in, path.string(), options);
}

std::vector<double> load_label_file(const std::filesystem::path& path) {
  auto in = open_for_reading(path);
  std::vector<double> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view body = line;
    if (const auto hash = body.find('#'); hash != std::string_view::npos) body = body.substr(0, hash);
    body = trim(body);
    if (body.empty()) continue;
    const auto v = to_double(body);
    if (!v) throw ParseError(path.string(), line_no, "bad label '" + std::string(body) + "'");
    out.push_back(*v);
  }
  return out;
}

void save_label_file(const std::vector<double>& raw_labels, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path.string());
  for (double v : raw_labels) out << format_label(v) << '\n';
}

std::vector<int> map_to_class_ids(const std::vector<double>& raw, const std::vector<double>& class_values) {
  std::vector<int> ids;
  ids.reserve(raw.size());
  for (double v : raw) {
    const auto it = std::lower_bound(class_values.begin(), class_values.end(), v);
    if (it == class_values.end() || *it != v) {
      throw InputError("label " + format_label(v) + " is not one of the known classes");
    }
    ids.push_back(static_cast<int>(it - class_values.begin()));
  }
  return ids;
}

// ---------------------------------------------------------------------------

namespace {
std::mutex audit_mutex;
std::optional<std::vector<std::filesystem::path>> active_audit;
}  // namespace

std::ifstream open_for_reading(const std::filesystem::path& path) {
  {
    std::lock_guard lock(audit_mutex);
    if (active_audit) active_audit->push_back(path);
  }
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  return in;
}

ScopedReadAudit::ScopedReadAudit() {
  std::lock_guard lock(audit_mutex);
  if (active_audit) throw ContractError("a read audit is already active");
  active_audit.emplace();
}

ScopedReadAudit::~ScopedReadAudit() {
  std::lock_guard lock(audit_mutex);
  active_audit.reset();
}

std::vector<std::filesystem::path> ScopedReadAudit::paths() const {
  std::lock_guard lock(audit_mutex);
  return *active_audit;
}

}  // namespace rwa
