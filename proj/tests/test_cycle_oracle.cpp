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

#include <doctest.h>

#include "gzeta/cycle_oracle.hpp"
#include "gzeta/error.hpp"

using namespace gzeta;

TEST_CASE("oracle spot values") {
  const auto c3 = cycle_oracle(cycle_graph(3), 6, OracleMode::reduced);
  CHECK(c3.at_length(3) == 6);
  CHECK(c3.at_length(4) == 0);
  CHECK(c3.at_length(6) == 6);
  CHECK(cycle_oracle(complete_graph(4), 2, OracleMode::weighted).at_length(2) == make_rational(4, 3));
  CHECK(cycle_oracle(cycle_graph(4), 2, OracleMode::weighted).at_length(2) == 0);
  for (OracleMode mode : {OracleMode::weighted, OracleMode::reduced})
    CHECK(cycle_oracle(petersen_graph(), 1, mode).at_length(1) == 0);
}

TEST_CASE("oracle equals trace powers") {
  for (const Graph& g : {cycle_graph(3), cycle_graph(5), complete_graph(4), petersen_graph(),
                         hypercube_graph(3), torus_graph(2, 3)}) {
    CAPTURE(to_string(g.family()));
    const std::size_t r = 6;
    CHECK(cycle_oracle(g, r, OracleMode::weighted).values == weighted_cycle_counts(g, r).values);
    CHECK(cycle_oracle(g, r, OracleMode::reduced).values == reduced_cycle_counts(g, r).values);
  }
  const std::vector<std::pair<Vertex, Vertex>> edges{{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}};
  const Graph kite = Graph::from_edges(4, edges);
  CHECK(cycle_oracle(kite, 7, OracleMode::weighted).values == weighted_cycle_counts(kite, 7).values);
  CHECK(cycle_oracle(kite, 7, OracleMode::reduced).values == reduced_cycle_counts(kite, 7).values);
}

TEST_CASE("oracle is schedule independent") {
  const Graph g = petersen_graph();
  CHECK(cycle_oracle(g, 5, OracleMode::weighted, 1).values ==
        cycle_oracle(g, 5, OracleMode::weighted, 4).values);
}

TEST_CASE("oracle guard refuses instead of truncating") {
  const Graph k5 = complete_graph(5);
  // 2m = 20 arcs, branching 4: 20 * 4^13 > 1e8
  CHECK(oracle_work_bound(k5, 14, OracleMode::weighted) > kOracleGuard);
  CHECK_THROWS_AS(cycle_oracle(k5, 14, OracleMode::weighted), GuardError);
  CHECK(oracle_work_bound(complete_graph(4), 8, OracleMode::reduced) == 12.0 * 128.0);
  CHECK_THROWS_AS(cycle_oracle(k5, 0, OracleMode::reduced), PreconditionError);
}
