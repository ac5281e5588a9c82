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

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gfq/circuit_model.hpp"
#include "gfq/cqed.hpp"
#include "gfq/landscape.hpp"
#include "gfq/observables.hpp"
#include "gfq/spectrum.hpp"
#include "json.hpp"

namespace gfqsim {

enum class Kind { real, integer, boolean, text, real_list };

struct KeySpec {
  std::string section;
  std::string key;
  std::string flag;  // long flag without the leading dashes
  Kind kind;
  std::string default_value;
  std::string help;
  std::vector<std::string> choices;  // text keys only; empty = free text
};

/// Every recognised configuration key, in canonical order.
const std::vector<KeySpec>& key_table();

/// Effective run configuration: defaults, then the INI file, then flags.
/// Values are stored canonically so the echo parses back to the same run.
class RunConfig {
 public:
  RunConfig();

  /// Throws gfq::ConfigError on unknown sections or keys and bad values.
  void load_ini(const std::string& path);
  void load_ini_text(const std::string& text);
  void set(const std::string& section, const std::string& key, const std::string& value);

  double real(const std::string& section, const std::string& key) const;
  int integer(const std::string& section, const std::string& key) const;
  bool boolean(const std::string& section, const std::string& key) const;
  const std::string& text(const std::string& section, const std::string& key) const;
  std::vector<double> real_list(const std::string& section, const std::string& key) const;

  gfq::CircuitParams circuit() const;
  gfq::DriveParams drive() const;
  gfq::PhysicalConstants constants() const;
  double ej_ratio() const;
  double ej_over_ec() const;
  gfq::ReducedPotential reduced_potential() const;
  std::optional<int> m_prime() const;

  /// Builds every parameter object so invalid input fails before any work.
  void validate() const;

  std::string to_ini() const;
  std::vector<std::string> echo_lines() const;  // "section.key = value"
  nlohmann::json to_json() const;

  bool operator==(const RunConfig& other) const { return values_ == other.values_; }

 private:
  const KeySpec& spec(const std::string& section, const std::string& key) const;
  std::map<std::string, std::string> values_;  // "section.key" -> canonical text
};

/// Shortest round-trip text for a double.
std::string format_number(double v);

}  // namespace gfqsim
