// Copyright 2026 The gfqsim Authors.
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

// Report assembly and serialisation. Every artifact carries the canonical
// config echo and the pinned tool version so identical runs are byte-identical.

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "config.hpp"
#include "json.hpp"

namespace gfqsim {

inline constexpr const char* kVersion = "1.0.0";

enum class Format { json, csv };

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  void add_row(const std::vector<double>& values);
};

struct Report {
  std::string command;
  nlohmann::ordered_json summary = nlohmann::ordered_json::object();
  Table table;
  std::string svg;    // empty when the command draws no figure
  int exit_code = 0;  // 0 ok, 1 scorecard failure, 2 physics-domain status
};

/// Thrown for any failure to write an output file (exit code 3).
class OutputError : public std::runtime_error {
 public:
  explicit OutputError(const std::string& what) : std::runtime_error(what) {}
};

std::string render_json(const Report& r, const RunConfig& cfg);

/// Config echo and flattened summary as '#' comment lines, then the header
/// row and data rows. A report without a table is written as key,value rows.
std::string render_csv(const Report& r, const RunConfig& cfg);

/// Leaf paths of a JSON value ("a.b.0"), in document order.
std::vector<std::pair<std::string, std::string>> flatten(const nlohmann::ordered_json& j);

/// Writes through a sibling temp file and rename so readers never see a
/// partial file.
void write_atomic(const std::string& path, const std::string& content);

}  // namespace gfqsim
