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

#include <iosfwd>

namespace gfqsim {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitScorecard = 1,  // reproduce: at least one entry failed
  kExitDomain = 2,     // physics-domain status, e.g. no double well
  kExitIo = 3,         // output could not be written
  kExitConfig = 4,     // bad flags, unknown keys, invalid values
  kExitSolver = 5,     // a numerical solver did not converge
};

/// Full command-line entry point; reports go to `out` unless --out is given.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gfqsim
