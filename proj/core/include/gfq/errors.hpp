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

#include <stdexcept>
#include <string>

namespace gfq {

// Physics-domain failures are distinct types so callers (the CLI in
// particular) can map them to a status instead of a crash.

class NoDoubleWell : public std::domain_error {
 public:
  explicit NoDoubleWell(const std::string& what)
      : std::domain_error("no double well: " + what) {}
};

class WellsMerged : public std::domain_error {
 public:
  explicit WellsMerged(const std::string& what)
      : std::domain_error("wells merged: " + what) {}
};

class DispersiveInvalid : public std::domain_error {
 public:
  explicit DispersiveInvalid(const std::string& what)
      : std::domain_error("dispersive regime invalid: " + what) {}
};

class SolverError : public std::runtime_error {
 public:
  explicit SolverError(const std::string& what) : std::runtime_error(what) {}
};

class ConfigError : public std::invalid_argument {
 public:
  explicit ConfigError(const std::string& what)
      : std::invalid_argument(what) {}
};

}  // namespace gfq
