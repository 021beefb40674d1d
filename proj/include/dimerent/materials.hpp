// Copyright 2026 The dimerent Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

/** @file
 * Materials registry. A registry file is a JSON array of objects:
 *
 *   [{"name": "...", "j_kelvin": -136, "g_factor": 2.0, "note": "..."}]
 *
 * `note` is optional. Entries from a user file shadow built-ins by name.
 */

#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace dimerent {

struct MaterialRecord {
  std::string name;
  double j_kelvin = 0.0;
  double g_factor = 2.0;
  std::string note;
};

/// Malformed registry file; the message names the entry and field.
class RegistryError : public std::runtime_error {
 public:
  explicit RegistryError(const std::string& what) : std::runtime_error(what) {}
};

inline std::vector<MaterialRecord> builtin_materials() {
  return {{"nitrosyl-iron-complex", -136.0, 2.0,
           "binuclear nitrosyl iron complex [Fe2(SC3H5N2)2(NO)4], antiferromagnetic spin-1/2 "
           "dimer"}};
}

inline std::vector<MaterialRecord> parse_registry(const std::string& text,
                                                  const std::string& source = "registry") {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw RegistryError(source + ": invalid JSON: " + e.what());
  }
  if (!doc.is_array()) throw RegistryError(source + ": top level must be a JSON array");

  std::vector<MaterialRecord> out;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const auto& item = doc[i];
    auto fail = [&](const std::string& field, const std::string& why) {
      std::ostringstream msg;
      msg << source << ": entry " << i << ", field '" << field << "': " << why;
      throw RegistryError(msg.str());
    };
    if (!item.is_object()) fail("<entry>", "must be an object");

    MaterialRecord rec;
    if (!item.contains("name") || !item["name"].is_string()) fail("name", "missing or not a string");
    rec.name = item["name"].get<std::string>();
    if (rec.name.empty()) fail("name", "must not be empty");

    if (!item.contains("j_kelvin") || !item["j_kelvin"].is_number())
      fail("j_kelvin", "missing or not a number");
    rec.j_kelvin = item["j_kelvin"].get<double>();
    if (!std::isfinite(rec.j_kelvin)) fail("j_kelvin", "must be finite");

    if (!item.contains("g_factor") || !item["g_factor"].is_number())
      fail("g_factor", "missing or not a number");
    rec.g_factor = item["g_factor"].get<double>();
    if (!(rec.g_factor > 0.0) || !std::isfinite(rec.g_factor)) fail("g_factor", "must be > 0");

    if (item.contains("note")) {
      if (!item["note"].is_string()) fail("note", "must be a string");
      rec.note = item["note"].get<std::string>();
    }
    for (const auto& prev : out)
      if (prev.name == rec.name) fail("name", "duplicate name '" + rec.name + "'");
    out.push_back(std::move(rec));
  }
  return out;
}

inline std::vector<MaterialRecord> load_registry_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw RegistryError(path + ": cannot open registry file");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_registry(buf.str(), path);
}

/// Built-ins plus an optional user file (user entries win on name clashes).
class MaterialRegistry {
 public:
  MaterialRegistry() : records_(builtin_materials()) {}

  explicit MaterialRegistry(const std::vector<MaterialRecord>& user) : MaterialRegistry() {
    for (const auto& rec : user) {
      bool replaced = false;
      for (auto& existing : records_) {
        if (existing.name == rec.name) {
          existing = rec;
          replaced = true;
        }
      }
      if (!replaced) records_.push_back(rec);
    }
  }

  std::optional<MaterialRecord> find(const std::string& name) const {
    for (const auto& rec : records_)
      if (rec.name == name) return rec;
    return std::nullopt;
  }

  const std::vector<MaterialRecord>& records() const { return records_; }

 private:
  std::vector<MaterialRecord> records_;
};

}  // namespace dimerent
