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

#ifndef GSELC_GRAPH_IO_H
#define GSELC_GRAPH_IO_H

#include <string>
#include <string_view>

#include "gselc/graph.h"

namespace gselc {

/// Canonical JSON: `{"n":N,"edges":[[a,b],...]}` with a < b, edges sorted, no whitespace.
std::string graph_to_json(const Graph &g);

/// Parses the JSON graph format. Edge endpoints may appear in either order;
/// self-loops, duplicates and out-of-range indices raise ParseError.
Graph graph_from_json(std::string_view text);

/// Undirected DOT with one node statement per vertex and sorted edges.
std::string graph_to_dot(const Graph &g);

}  // namespace gselc

#endif
