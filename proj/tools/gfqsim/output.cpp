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


#include "output.hpp"

#include <filesystem>
#include <fstream>

namespace gfqsim {

void Table::add_row(const std::vector<double>& values) {
  std::vector<std::string> row;
  row.reserve(values.size());
  for (double v : values) row.push_back(format_number(v));
  rows.push_back(std::move(row));
}

namespace {

std::string leaf_text(const nlohmann::ordered_json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_float()) return format_number(j.get<double>());
  return j.dump();
}

void flatten_into(const nlohmann::ordered_json& j, const std::string& prefix,
                  std::vector<std::pair<std::string, std::string>>& out) {
  const auto join = [&](const std::string& key) { return prefix.empty() ? key : prefix + "." + key; };
  if (j.is_object() && !j.empty()) {
    for (auto it = j.begin(); it != j.end(); ++it) flatten_into(it.value(), join(it.key()), out);
  } else if (j.is_array() && !j.empty()) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten_into(j[i], join(std::to_string(i)), out);
  } else {
    out.emplace_back(prefix, leaf_text(j));
  }
}

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

void csv_row(std::string& out, const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out += ',';
    out += csv_cell(cells[i]);
  }
  out += '\n';
}

}  // namespace

std::vector<std::pair<std::string, std::string>> flatten(const nlohmann::ordered_json& j) {
  std::vector<std::pair<std::string, std::string>> out;
  flatten_into(j, "", out);
  return out;
}

std::string render_json(const Report& r, const RunConfig& cfg) {
  nlohmann::ordered_json j;
  j["tool"] = "gfqsim";
  j["version"] = kVersion;
  j["command"] = r.command;
  j["config"] = cfg.to_json();
  j["summary"] = r.summary;
  if (!r.table.columns.empty()) {
    j["table"]["columns"] = r.table.columns;
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : r.table.rows) {
      nlohmann::json jr = nlohmann::json::array();
      for (const std::string& cell : row) {
        // Numeric cells go out as numbers, everything else as text.
        const auto parsed = nlohmann::json::parse(cell, nullptr, false);
        jr.push_back(parsed.is_number() ? parsed : nlohmann::json(cell));
      }
      rows.push_back(std::move(jr));
    }
    j["table"]["rows"] = std::move(rows);
  }
  return j.dump(2) + "\n";
}

std::string render_csv(const Report& r, const RunConfig& cfg) {
  std::string out = std::string("# gfqsim ") + kVersion + " " + r.command + "\n";
  for (const std::string& line : cfg.echo_lines()) out += "# " + line + "\n";
  if (r.table.columns.empty()) {
    csv_row(out, {"key", "value"});
    for (const auto& [k, v] : flatten(r.summary)) csv_row(out, {k, v});
    return out;
  }
  for (const auto& [k, v] : flatten(r.summary)) out += "# result." + k + " = " + v + "\n";
  csv_row(out, r.table.columns);
  for (const auto& row : r.table.rows) csv_row(out, row);
  return out;
}

void write_atomic(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw OutputError("cannot open '" + tmp.string() + "' for writing");
    f.write(content.data(), static_cast<std::streamsize>(content.size()));
    f.flush();
    if (!f) {
      std::error_code ignored;
      fs::remove(tmp, ignored);
      throw OutputError("write to '" + tmp.string() + "' failed");
    }
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    std::error_code ignored;
    fs::remove(tmp, ignored);
    throw OutputError("cannot move output into '" + path + "': " + ec.message());
  }
}

}  // namespace gfqsim
