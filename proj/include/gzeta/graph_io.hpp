// Copyright 2026 The gzeta Authors
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

#include <filesystem>
#include <string>

#include <json.hpp>

#include "gzeta/graph.hpp"

namespace gzeta {

// Graph file schema:
//   {"vertices": <int>, "edges": [[i, j], ...],
//    "family": <string|null>, "vertex_transitive": <bool>}
// with 0-based ids and i < j on output. Input edges may come in either
// order; a reversed copy of an edge counts as a duplicate.

nlohmann::json graph_to_json(const Graph& g);
/// Throws MalformedGraphError for schema violations, and the
/// Loop/Duplicate/Disconnected variants from Graph::from_edges.
Graph graph_from_json(const nlohmann::json& j);

Graph parse_graph(const std::string& text);
Graph load_graph(const std::filesystem::path& path);
void save_graph(const Graph& g, const std::filesystem::path& path);

}  // namespace gzeta
