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

#include "gselc/graph_io.h"

#include <sstream>

#include "gselc/error.h"
#include "json.hpp"

namespace gselc {

std::string graph_to_json(const Graph &g) {
    nlohmann::ordered_json doc;
    doc["n"] = g.num_vertices();
    auto edges = nlohmann::ordered_json::array();
    for (const auto &[a, b] : g.edges()) {
        edges.push_back({a, b});
    }
    doc["edges"] = std::move(edges);
    return doc.dump();
}

Graph graph_from_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        throw Error(ErrorKind::ParseError, e.what());
    }
    if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_number_unsigned()) {
        throw Error(ErrorKind::ParseError, "expected object with non-negative integer field \"n\"");
    }
    size_t n = doc["n"].get<size_t>();
    std::vector<Edge> edges;
    if (doc.contains("edges")) {
        const auto &list = doc["edges"];
        if (!list.is_array()) {
            throw Error(ErrorKind::ParseError, "\"edges\" must be an array");
        }
        for (const auto &item : list) {
            if (!item.is_array() || item.size() != 2 || !item[0].is_number_unsigned() ||
                !item[1].is_number_unsigned()) {
                throw Error(ErrorKind::ParseError, "each edge must be a pair of non-negative integers");
            }
            edges.emplace_back(item[0].get<size_t>(), item[1].get<size_t>());
        }
    }
    try {
        return Graph::from_edges(n, edges);
    } catch (const Error &e) {
        throw Error(ErrorKind::ParseError, e.what());
    }
}

std::string graph_to_dot(const Graph &g) {
    std::ostringstream out;
    out << "graph G {\n";
    for (size_t v = 0; v < g.num_vertices(); v++) {
        out << "  " << v << " [label=\"" << v << "\"];\n";
    }
    for (const auto &[a, b] : g.edges()) {
        out << "  " << a << " -- " << b << ";\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace gselc
