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

#include "gzeta/graph_io.hpp"

#include <fstream>
#include <sstream>

#include "gzeta/error.hpp"

namespace gzeta {

using nlohmann::json;

json graph_to_json(const Graph& g) {
  json edges = json::array();
  for (auto [a, b] : g.edge_list()) edges.push_back({a, b});
  json out;
  out["vertices"] = g.num_vertices();
  out["edges"] = std::move(edges);
  if (g.family().kind == Family::Kind::custom)
    out["family"] = nullptr;
  else
    out["family"] = to_string(g.family());
  out["vertex_transitive"] = g.claimed_vertex_transitive();
  return out;
}

Graph graph_from_json(const json& j) {
  if (!j.is_object()) throw MalformedGraphError("graph JSON must be an object");
  if (!j.contains("vertices") || !j["vertices"].is_number_integer() ||
      j["vertices"].get<long long>() <= 0)
    throw MalformedGraphError("\"vertices\" must be a positive integer");
  if (!j.contains("edges") || !j["edges"].is_array())
    throw MalformedGraphError("\"edges\" must be an array of [i, j] pairs");
  const auto n = j["vertices"].get<std::size_t>();

  std::vector<std::pair<Vertex, Vertex>> edges;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() ||
        !e[1].is_number_unsigned())
      throw MalformedGraphError("edge entries must be pairs of non-negative integers, got " +
                                e.dump());
    edges.emplace_back(e[0].get<Vertex>(), e[1].get<Vertex>());
  }

  Family family = Family::custom();
  if (j.contains("family") && !j["family"].is_null()) {
    if (!j["family"].is_string()) throw MalformedGraphError("\"family\" must be a string or null");
    family = parse_family(j["family"].get<std::string>());
  }
  bool vt = false;
  if (j.contains("vertex_transitive")) {
    if (!j["vertex_transitive"].is_boolean())
      throw MalformedGraphError("\"vertex_transitive\" must be a boolean");
    vt = j["vertex_transitive"].get<bool>();
  }
  return Graph::from_edges(n, edges, family, vt);
}

Graph parse_graph(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw MalformedGraphError(std::string("malformed graph JSON: ") + e.what());
  }
  return graph_from_json(j);
}

Graph load_graph(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw MalformedGraphError("cannot open graph file " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_graph(buffer.str());
}

void save_graph(const Graph& g, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write graph file " + path.string());
  out << graph_to_json(g).dump() << '\n';
}

}  // namespace gzeta
