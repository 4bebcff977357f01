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

#ifndef GSELC_REPORT_H
#define GSELC_REPORT_H

#include "json.hpp"

namespace gselc {

/// Outcome of a verification. `passed` is true only if every asserted
/// comparison held within its tolerance; `details` records what was compared.
struct Report {
    bool passed = true;
    nlohmann::ordered_json details = nlohmann::ordered_json::object();

    /// Folds a sub-check into this report; `passed` becomes the conjunction.
    void require(bool ok) {
        passed = passed && ok;
    }
};

}  // namespace gselc

#endif
