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

#include <string>
#include <vector>

#include "config.hpp"
#include "output.hpp"

namespace gfqsim {

struct CommandSpec {
  std::string name;
  std::string help;
  Report (*run)(const RunConfig&);
  Format default_format;
};

/// Subcommands in help order. Physics-domain failures propagate as gfq
/// exceptions; the caller maps them to exit codes.
const std::vector<CommandSpec>& command_table();

Report cmd_minima(const RunConfig& cfg);
Report cmd_landscape(const RunConfig& cfg);
Report cmd_cut(const RunConfig& cfg);
Report cmd_gap(const RunConfig& cfg);
Report cmd_currents(const RunConfig& cfg);
Report cmd_coupling(const RunConfig& cfg);
Report cmd_rabi(const RunConfig& cfg);
Report cmd_twoqubit(const RunConfig& cfg);
Report cmd_reproduce(const RunConfig& cfg);

}  // namespace gfqsim
