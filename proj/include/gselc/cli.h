// Copyright 2026 The gselc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GSELC_CLI_H
#define GSELC_CLI_H

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gselc/graph.h"

namespace gselc {

enum ExitCode : int {
    kExitPass = 0,
    kExitVerificationFailed = 1,
    kExitUsage = 2,
};

/// Parses a constructor spec: star:N, cycle:N, path:N, empty:N or file:PATH.
Graph graph_from_spec(std::string_view spec);

/// Runs the command line `args` (args[0] is the program name). Output goes to
/// `out` unless --out redirects it; diagnostics go to `err`.
/// `env_max_qubits` is the value of GSELC_MAX_QUBITS, if set.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err,
            std::optional<std::string> env_max_qubits = std::nullopt);

}  // namespace gselc

#endif
