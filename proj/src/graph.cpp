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

#include "gzeta/graph.hpp"

#include <algorithm>
#include <charconv>
#include <deque>

#include "gzeta/error.hpp"

namespace gzeta {

namespace {

std::vector<int> parse_int_args(const std::string& text, const std::string& whole) {
  std::vector<int> values;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = text.find(',', pos);
    const auto end = comma == std::string::npos ? text.size() : comma;
    int value = 0;
    const char* first = text.data() + pos;
    const char* last = text.data() + end;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || first == last)
      throw MalformedGraphError("bad family tag: " + whole);
    values.push_back(value);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return values;
}

}  // namespace

std::string to_string(const Family& f) {
  switch (f.kind) {
    case Family::Kind::cycle:
      return "cycle(" + std::to_string(f.size) + ")";
    case Family::Kind::torus:
      return "torus(" + std::to_string(f.dimension) + "," + std::to_string(f.size) + ")";
    case Family::Kind::complete:
      return "complete(" + std::to_string(f.size) + ")";
    case Family::Kind::petersen:
      return "petersen";
    case Family::Kind::hypercube:
      return "hypercube(" + std::to_string(f.dimension) + ")";
    case Family::Kind::custom:
      break;
  }
  return "custom";
}

Family parse_family(const std::string& text) {
  if (text == "petersen") return Family::petersen();
  if (text == "custom") return Family::custom();
  const auto open = text.find('(');
  if (open == std::string::npos || text.back() != ')')
    throw MalformedGraphError("bad family tag: " + text);
  const std::string name = text.substr(0, open);
  const auto args = parse_int_args(text.substr(open + 1, text.size() - open - 2), text);
  if (name == "cycle" && args.size() == 1) return Family::cycle(args[0]);
  if (name == "complete" && args.size() == 1) return Family::complete(args[0]);
  if (name == "hypercube" && args.size() == 1) return Family::hypercube(args[0]);
  if (name == "torus" && args.size() == 2) return Family::torus(args[0], args[1]);
  throw MalformedGraphError("bad family tag: " + text);
}

Graph Graph::from_edges(std::size_t num_vertices,
                        std::span<const std::pair<Vertex, Vertex>> edges,
                        Family family, bool claimed_vertex_transitive) {
  if (num_vertices == 0) throw MalformedGraphError("graph must have at least one vertex");
  Graph g;
  g.adjacency_.resize(num_vertices);
  for (auto [a, b] : edges) {
    if (a >= num_vertices || b >= num_vertices)
      throw MalformedGraphError("edge [" + std::to_string(a) + "," + std::to_string(b) +
                                "] references a vertex outside 0.." +
                                std::to_string(num_vertices - 1));
    if (a == b)
      throw LoopEdgeError("loop edge [" + std::to_string(a) + "," + std::to_string(b) +
                          "]: graphs must be simple");
    g.adjacency_[a].push_back(b);
    g.adjacency_[b].push_back(a);
  }
  for (Vertex v = 0; v < num_vertices; ++v) {
    auto& nbrs = g.adjacency_[v];
    std::sort(nbrs.begin(), nbrs.end());
    if (auto dup = std::adjacent_find(nbrs.begin(), nbrs.end()); dup != nbrs.end())
      throw DuplicateEdgeError("duplicate edge between " + std::to_string(v) + " and " +
                               std::to_string(*dup) + ": graphs must be simple");
  }
  g.num_edges_ = edges.size();

  std::vector<bool> seen(num_vertices, false);
  std::deque<Vertex> queue{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    for (Vertex w : g.adjacency_[v]) {
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        queue.push_back(w);
      }
    }
  }
  if (reached != num_vertices)
    throw DisconnectedGraphError("graph is disconnected: " + std::to_string(reached) +
                                 " of " + std::to_string(num_vertices) +
                                 " vertices reachable from vertex 0");

  const std::size_t d0 = g.adjacency_[0].size();
  const bool regular = std::all_of(g.adjacency_.begin(), g.adjacency_.end(),
                                   [d0](const auto& n) { return n.size() == d0; });
  if (regular) g.regular_degree_ = d0;
  g.family_ = family;
  g.vertex_transitive_ = claimed_vertex_transitive;
  return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& n = adjacency_[u];
  return std::binary_search(n.begin(), n.end(), v);
}

std::size_t Graph::min_degree() const {
  std::size_t best = adjacency_[0].size();
  for (const auto& n : adjacency_) best = std::min(best, n.size());
  return best;
}

std::ptrdiff_t Graph::betti_number() const {
  return static_cast<std::ptrdiff_t>(num_edges_) -
         static_cast<std::ptrdiff_t>(adjacency_.size()) + 1;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edge_list() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(num_edges_);
  for (Vertex v = 0; v < adjacency_.size(); ++v)
    for (Vertex w : adjacency_[v])
      if (v < w) out.emplace_back(v, w);
  return out;
}

Graph cycle_graph(int n) {
  if (n < 3)
    throw FamilyParameterError("cycle requires N >= 3 (N = " + std::to_string(n) +
                               " would need a loop or a multi-edge)");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(n, edges, Family::cycle(n), true);
}

Graph torus_graph(int d, int n) {
  if (d < 1) throw FamilyParameterError("torus requires dimension d >= 1");
  if (n < 3)
    throw FamilyParameterError("torus requires N >= 3 (N = " + std::to_string(n) +
                               " makes the two directions of an axis coincide, "
                               "producing loops or multi-edges)");
  std::size_t count = 1;
  for (int j = 0; j < d; ++j) count *= static_cast<std::size_t>(n);
  std::vector<std::pair<Vertex, Vertex>> edges;
  edges.reserve(count * d);
  // vertex id = sum_j k_j N^j; link every vertex to its +1 neighbor per axis
  std::size_t stride = 1;
  for (int j = 0; j < d; ++j) {
    for (std::size_t v = 0; v < count; ++v) {
      const std::size_t k = (v / stride) % n;
      const std::size_t next = v - k * stride + ((k + 1) % n) * stride;
      edges.emplace_back(v, next);
    }
    stride *= n;
  }
  return Graph::from_edges(count, edges, Family::torus(d, n), true);
}

Graph complete_graph(int n) {
  if (n < 3) throw FamilyParameterError("complete graph requires n >= 3");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph::from_edges(n, edges, Family::complete(n), true);
}

Graph petersen_graph() {
  // outer 5-cycle 0..4, spokes i -- i+5, inner pentagram 5..9
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(i, i + 5);
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return Graph::from_edges(10, edges, Family::petersen(), true);
}

Graph hypercube_graph(int d) {
  if (d < 2)
    throw FamilyParameterError("hypercube requires d >= 2 (d = 1 is a single edge, a tree)");
  if (d > 20) throw FamilyParameterError("hypercube dimension above 20 is not supported");
  const std::size_t count = std::size_t{1} << d;
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (std::size_t v = 0; v < count; ++v)
    for (int b = 0; b < d; ++b)
      if (const std::size_t w = v ^ (std::size_t{1} << b); v < w) edges.emplace_back(v, w);
  return Graph::from_edges(count, edges, Family::hypercube(d), true);
}

Graph build_family(const Family& f) {
  switch (f.kind) {
    case Family::Kind::cycle:
      return cycle_graph(f.size);
    case Family::Kind::torus:
      return torus_graph(f.dimension, f.size);
    case Family::Kind::complete:
      return complete_graph(f.size);
    case Family::Kind::petersen:
      return petersen_graph();
    case Family::Kind::hypercube:
      return hypercube_graph(f.dimension);
    case Family::Kind::custom:
      break;
  }
  throw FamilyParameterError("custom graphs have no generator; load them from a file");
}

ArcSpace::ArcSpace(const Graph& g) {
  const std::size_t n = g.num_vertices();
  incoming_.resize(n);
  outgoing_.resize(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v : g.neighbors(u)) {
      const ArcId e = origin_.size();
      origin_.push_back(u);
      terminus_.push_back(v);
      outgoing_[u].push_back(e);
      incoming_[v].push_back(e);
    }
  }
  inverse_.resize(origin_.size());
  for (ArcId e = 0; e < origin_.size(); ++e) inverse_[e] = index(terminus_[e], origin_[e]);
}

ArcId ArcSpace::index(Vertex u, Vertex v) const {
  if (u < outgoing_.size()) {
    const auto& out = outgoing_[u];
    auto it = std::lower_bound(out.begin(), out.end(), v,
                               [this](ArcId e, Vertex target) { return terminus_[e] < target; });
    if (it != out.end() && terminus_[*it] == v) return *it;
  }
  throw GraphError("no arc (" + std::to_string(u) + "," + std::to_string(v) + ")");
}

}  // namespace gzeta
