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

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace gzeta {

using Vertex = std::size_t;
using ArcId = std::size_t;

/// Which generator produced a graph. `dimension` and `size` carry the
/// family parameters: torus(d, N) uses both, cycle(N) / complete(n) /
/// hypercube(d) use one, petersen and custom none.
struct Family {
  enum class Kind { cycle, torus, complete, petersen, hypercube, custom };

  Kind kind = Kind::custom;
  int dimension = 0;
  int size = 0;

  static Family cycle(int n) { return {Kind::cycle, 0, n}; }
  static Family torus(int d, int n) { return {Kind::torus, d, n}; }
  static Family complete(int n) { return {Kind::complete, 0, n}; }
  static Family petersen() { return {Kind::petersen, 0, 0}; }
  static Family hypercube(int d) { return {Kind::hypercube, d, 0}; }
  static Family custom() { return {}; }

  bool operator==(const Family&) const = default;
};

/// "cycle(5)", "torus(2,3)", "complete(4)", "petersen", "hypercube(3)",
/// "custom".
std::string to_string(const Family& family);
/// Inverse of to_string; throws MalformedGraphError.
Family parse_family(const std::string& text);

/// Immutable connected simple undirected graph. Vertices are 0..ν-1 and
/// neighbor lists are kept sorted.
class Graph {
 public:
  /// Validates and builds. Throws LoopEdgeError, DuplicateEdgeError,
  /// MalformedGraphError (vertex id out of range, ν = 0) or
  /// DisconnectedGraphError. Edge endpoints may come in either order.
  static Graph from_edges(std::size_t num_vertices,
                          std::span<const std::pair<Vertex, Vertex>> edges,
                          Family family = Family::custom(),
                          bool claimed_vertex_transitive = false);

  std::size_t num_vertices() const { return adjacency_.size(); }
  std::size_t num_edges() const { return num_edges_; }
  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  bool adjacent(Vertex u, Vertex v) const;

  /// q + 1 when every vertex has the same degree.
  std::optional<std::size_t> regular_degree() const { return regular_degree_; }
  std::size_t min_degree() const;
  /// m - ν + 1.
  std::ptrdiff_t betti_number() const;

  const Family& family() const { return family_; }
  bool claimed_vertex_transitive() const { return vertex_transitive_; }

  /// Edges as (i, j) with i < j, sorted.
  std::vector<std::pair<Vertex, Vertex>> edge_list() const;

  /// Equality of vertex count, edge set and metadata.
  bool operator==(const Graph&) const = default;

 private:
  Graph() = default;

  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t num_edges_ = 0;
  std::optional<std::size_t> regular_degree_;
  Family family_;
  bool vertex_transitive_ = false;
};

// Built-in families. All are connected, simple and flagged vertex-transitive.
// Parameters below the simple-graph minimum raise FamilyParameterError.
Graph cycle_graph(int n);           // n >= 3
Graph torus_graph(int d, int n);    // d >= 1, n >= 3
Graph complete_graph(int n);        // n >= 3
Graph petersen_graph();
Graph hypercube_graph(int d);       // d >= 2
Graph build_family(const Family& family);

/// The 2m oriented arcs of a graph in lexicographic (origin, terminus)
/// order, with the inverse-pairing involution.
class ArcSpace {
 public:
  explicit ArcSpace(const Graph& g);

  std::size_t size() const { return origin_.size(); }
  Vertex origin(ArcId e) const { return origin_[e]; }
  Vertex terminus(ArcId e) const { return terminus_[e]; }
  ArcId inverse(ArcId e) const { return inverse_[e]; }
  /// Arc (u, v); throws GraphError when u, v are not adjacent.
  ArcId index(Vertex u, Vertex v) const;
  /// Arcs e with t(e) = v, i.e. D(v).
  std::span<const ArcId> incoming(Vertex v) const { return incoming_[v]; }
  /// Arcs e with o(e) = v; a contiguous block in lexicographic order.
  std::span<const ArcId> outgoing(Vertex v) const { return outgoing_[v]; }

  bool operator==(const ArcSpace&) const = default;

 private:
  std::vector<Vertex> origin_;
  std::vector<Vertex> terminus_;
  std::vector<ArcId> inverse_;
  std::vector<std::vector<ArcId>> incoming_;
  std::vector<std::vector<ArcId>> outgoing_;
};

inline ArcSpace arc_space(const Graph& g) { return ArcSpace(g); }

}  // namespace gzeta
