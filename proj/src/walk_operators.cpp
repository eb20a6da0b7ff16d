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

#include "gzeta/walk_operators.hpp"

#include <string>

#include "gzeta/error.hpp"

namespace gzeta {

RatMatrix adjacency(const Graph& g) {
  std::vector<RatMatrix::Entry> entries;
  for (Vertex u = 0; u < g.num_vertices(); ++u)
    for (Vertex v : g.neighbors(u)) entries.push_back({u, v, Rational(1)});
  return RatMatrix(g.num_vertices(), g.num_vertices(), std::move(entries));
}

RatMatrix degree_matrix(const Graph& g) {
  std::vector<RatMatrix::Entry> entries;
  for (Vertex u = 0; u < g.num_vertices(); ++u)
    entries.push_back({u, u, make_rational(static_cast<std::int64_t>(g.degree(u)))});
  return RatMatrix(g.num_vertices(), g.num_vertices(), std::move(entries));
}

RatMatrix transition(const Graph& g) {
  std::vector<RatMatrix::Entry> entries;
  for (Vertex u = 0; u < g.num_vertices(); ++u) {
    const Rational p = make_rational(1, static_cast<std::int64_t>(g.degree(u)));
    for (Vertex v : g.neighbors(u)) entries.push_back({u, v, p});
  }
  return RatMatrix(g.num_vertices(), g.num_vertices(), std::move(entries));
}

RatMatrix laplacian(const Graph& g) { return degree_matrix(g) - adjacency(g); }

RatMatrix shift(const ArcSpace& arcs) {
  std::vector<RatMatrix::Entry> entries;
  for (ArcId e = 0; e < arcs.size(); ++e) entries.push_back({e, arcs.inverse(e), Rational(1)});
  return RatMatrix(arcs.size(), arcs.size(), std::move(entries));
}

namespace {

void check_coin_vectors(const Graph& g, const ArcSpace& arcs, const CoinVectors& alpha) {
  if (alpha.size() != g.num_vertices())
    throw CoinError("expected one coin vector per vertex (" +
                    std::to_string(g.num_vertices()) + "), got " +
                    std::to_string(alpha.size()));
  for (Vertex u = 0; u < g.num_vertices(); ++u) {
    const auto& a = alpha[u];
    if (a.size() != arcs.size())
      throw CoinError("coin vector of vertex " + std::to_string(u) + " has length " +
                      std::to_string(a.size()) + ", expected 2m = " +
                      std::to_string(arcs.size()));
    Rational norm = 0;
    for (ArcId e = 0; e < arcs.size(); ++e) {
      const bool in_support = arcs.terminus(e) == u;
      if (!in_support && a[e] != 0)
        throw CoinError("coin vector of vertex " + std::to_string(u) +
                        " is supported on arc " + std::to_string(e) + " outside D(u)");
      if (in_support && a[e] == 0)
        throw CoinError("coin vector of vertex " + std::to_string(u) +
                        " vanishes on arc " + std::to_string(e) + " of D(u)");
      norm += a[e] * a[e];
    }
    if (norm != 1)
      throw CoinError("coin vector of vertex " + std::to_string(u) + " has squared norm " +
                      to_string(norm) + ", expected 1");
  }
}

}  // namespace

RatMatrix coin(const Graph& g, const ArcSpace& arcs, const std::optional<CoinVectors>& alpha) {
  if (alpha) check_coin_vectors(g, arcs, *alpha);
  std::vector<RatMatrix::Entry> entries;
  for (Vertex u = 0; u < g.num_vertices(); ++u) {
    const auto block = arcs.incoming(u);
    const Rational grover_entry =
        make_rational(2, static_cast<std::int64_t>(g.degree(u)));
    for (ArcId e : block) {
      for (ArcId f : block) {
        Rational value = alpha ? Rational(2 * (*alpha)[u][e] * (*alpha)[u][f]) : grover_entry;
        if (e == f) value -= 1;
        entries.push_back({e, f, std::move(value)});
      }
    }
  }
  return RatMatrix(arcs.size(), arcs.size(), std::move(entries));
}

RatMatrix grover(const Graph& g, const ArcSpace& arcs) { return shift(arcs) * coin(g, arcs); }

RatMatrix positive_support(const RatMatrix& m) {
  std::vector<RatMatrix::Entry> entries;
  for (const auto& e : m.entries())
    if (e.value > 0) entries.push_back({e.row, e.col, Rational(1)});
  return RatMatrix(m.rows(), m.cols(), std::move(entries));
}

}  // namespace gzeta
