// Copyright 2026 The Cutopt Authors
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

#include <ostream>
#include <string>
#include <vector>

namespace cutopt {

/// Entry point behind the cutopt binary: args exclude the program name,
/// normal output goes to `out`, diagnostics to `err`. Returns the process
/// exit code: 0 success, 2 flag/input errors, 3 capacity errors, 4 numeric
/// errors.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace cutopt
