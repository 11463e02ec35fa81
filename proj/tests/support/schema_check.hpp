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


// Validator for the subset of JSON Schema used by the report schemas:
// type, required, properties, additionalProperties (bool), items, enum,
// const, minimum, maximum, minItems, and local "$ref": "#/definitions/...".

#pragma once

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

namespace rwa::test {

class SchemaChecker {
 public:
  explicit SchemaChecker(nlohmann::json schema) : root_(std::move(schema)) {}

  static SchemaChecker from_file(const std::filesystem::path& p) {
    std::ifstream in(p);
    return SchemaChecker(nlohmann::json::parse(in));
  }

  /// Empty when valid; otherwise one message per violation.
  std::vector<std::string> validate(const nlohmann::json& doc) const {
    std::vector<std::string> errors;
    check(root_, doc, "$", errors);
    return errors;
  }

 private:
  static bool has_type(const nlohmann::json& v, const std::string& t) {
    if (t == "object") return v.is_object();
    if (t == "array") return v.is_array();
    if (t == "string") return v.is_string();
    if (t == "boolean") return v.is_boolean();
    if (t == "null") return v.is_null();
    if (t == "number") return v.is_number();
    if (t == "integer") return v.is_number_integer() || (v.is_number_float() && v.get<double>() == static_cast<long long>(v.get<double>()));
    return false;
  }

  const nlohmann::json& resolve(const nlohmann::json& s) const {
    if (!s.contains("$ref")) return s;
    const auto ref = s["$ref"].get<std::string>();
    const std::string prefix = "#/definitions/";
    return root_.at("definitions").at(ref.substr(prefix.size()));
  }

  void check(const nlohmann::json& raw, const nlohmann::json& v, const std::string& where,
             std::vector<std::string>& errors) const {
    const auto& s = resolve(raw);
    if (s.contains("type")) {
      bool ok = false;
      if (s["type"].is_array()) {
        for (const auto& t : s["type"]) ok = ok || has_type(v, t.get<std::string>());
      } else {
        ok = has_type(v, s["type"].get<std::string>());
      }
      if (!ok) {
        errors.push_back(where + ": expected type " + s["type"].dump() + ", got " + v.type_name());
        return;
      }
    }
    if (s.contains("const") && v != s["const"]) errors.push_back(where + ": expected " + s["const"].dump());
    if (s.contains("enum")) {
      bool found = false;
      for (const auto& e : s["enum"]) found = found || e == v;
      if (!found) errors.push_back(where + ": " + v.dump() + " not in " + s["enum"].dump());
    }
    if (v.is_number()) {
      if (s.contains("minimum") && v.get<double>() < s["minimum"].get<double>()) {
        errors.push_back(where + ": below minimum");
      }
      if (s.contains("maximum") && v.get<double>() > s["maximum"].get<double>()) {
        errors.push_back(where + ": above maximum");
      }
    }
    if (v.is_object()) {
      if (s.contains("required")) {
        for (const auto& key : s["required"]) {
          if (!v.contains(key.get<std::string>())) errors.push_back(where + ": missing " + key.get<std::string>());
        }
      }
      const bool closed = s.contains("additionalProperties") && s["additionalProperties"] == false;
      for (const auto& [key, value] : v.items()) {
        if (s.contains("properties") && s["properties"].contains(key)) {
          check(s["properties"][key], value, where + "." + key, errors);
        } else if (closed) {
          errors.push_back(where + ": unexpected property " + key);
        }
      }
    }
    if (v.is_array()) {
      if (s.contains("minItems") && v.size() < s["minItems"].get<std::size_t>()) {
        errors.push_back(where + ": fewer than " + s["minItems"].dump() + " items");
      }
      if (s.contains("items")) {
        for (std::size_t i = 0; i < v.size(); ++i) check(s["items"], v[i], where + "[" + std::to_string(i) + "]", errors);
      }
    }
  }

  nlohmann::json root_;
};

}  // namespace rwa::test
