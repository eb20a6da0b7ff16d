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

#include "gzeta/error.hpp"
#include "gzeta/walk_operators.hpp"

using namespace gzeta;

namespace {

std::vector<Graph> test_graphs() {
  std::vector<Graph> out;
  for (int n = 3; n <= 8; ++n) out.push_back(cycle_graph(n));
  out.push_back(torus_graph(2, 3));
  out.push_back(complete_graph(4));
  out.push_back(complete_graph(5));
  out.push_back(petersen_graph());
  out.push_back(hypercube_graph(3));
  // non-regular: a square with one diagonal
  const std::vector<std::pair<Vertex, Vertex>> edges{{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}};
  out.push_back(Graph::from_edges(4, edges));
  return out;
}

std::vector<Rational> row_sums(const RatMatrix& m) {
  std::vector<Rational> out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (const auto& [c, v] : m.row(i)) out[i] += v;
  return out;
}

}  // namespace

TEST_CASE("adjacency and degree") {
  const RatMatrix a3 = adjacency(cycle_graph(3));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(a3.at(i, j) == (i == j ? 0 : 1));
  for (const auto& s : row_sums(adjacency(complete_graph(4)))) CHECK(s == 3);
  for (const auto& s : row_sums(adjacency(torus_graph(2, 3)))) CHECK(s == 4);

  for (const Graph& g : test_graphs()) {
    const RatMatrix a = adjacency(g);
    CHECK(a == a.transpose());
    const RatMatrix d = degree_matrix(g);
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      CHECK(a.at(v, v) == 0);
      CHECK(d.at(v, v) == static_cast<long>(g.degree(v)));
    }
    CHECK(d.nonzeros() == g.num_vertices());
  }
}

TEST_CASE("transition and Laplacian") {
  const RatMatrix p4 = transition(cycle_graph(4));
  for (std::size_t i = 0; i < 4; ++i) {
    int halves = 0;
    for (const auto& [c, v] : p4.row(i)) {
      CHECK(v == make_rational(1, 2));
      ++halves;
    }
    CHECK(halves == 2);
  }
  // K4: P = (J - I)/3
  const RatMatrix pk = transition(complete_graph(4));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) CHECK(pk.at(i, j) == (i == j ? Rational(0) : make_rational(1, 3)));

  for (const Graph& g : test_graphs()) {
    CAPTURE(to_string(g.family()));
    for (const auto& s : row_sums(transition(g))) CHECK(s == 1);
    const RatMatrix delta = laplacian(g);
    CHECK(delta == delta.transpose());
    for (const auto& s : row_sums(delta)) CHECK(s == 0);
    if (const auto k = g.regular_degree()) {
      const Rational q1(static_cast<long>(*k));
      const std::size_t n = g.num_vertices();
      CHECK(transition(g) == adjacency(g) * (Rational(1) / q1));
      // Δ + (q+1)P - (q+1)I = 0
      CHECK((delta + q1 * transition(g) - RatMatrix::scalar(n, q1)).nonzeros() == 0);
    }
  }
}

TEST_CASE("shift, coin and Grover matrix") {
  for (const Graph& g : test_graphs()) {
    CAPTURE(to_string(g.family()));
    const ArcSpace arcs(g);
    const std::size_t n = arcs.size();
    const RatMatrix s = shift(arcs);
    const RatMatrix c = coin(g, arcs);
    const RatMatrix u = grover(g, arcs);
    CHECK(s * s == RatMatrix::identity(n));
    CHECK(c * c == RatMatrix::identity(n));
    CHECK(c == c.transpose());
    CHECK(u.transpose() * u == RatMatrix::identity(n));
    CHECK(u == s * c);

    // U_ef case table
    for (ArcId e = 0; e < n; ++e) {
      for (ArcId f = 0; f < n; ++f) {
        Rational expected = 0;
        if (arcs.terminus(f) == arcs.origin(e)) {
          expected = make_rational(2, static_cast<long>(g.degree(arcs.terminus(f))));
          if (f == arcs.inverse(e)) expected -= 1;
        }
        CHECK(u.at(e, f) == expected);
      }
    }
    // U fixes the uniform vector
    for (const auto& r : row_sums(u)) CHECK(r == 1);

    // C on the block D(v) is (2/d_v)J - I
    for (Vertex v = 0; v < g.num_vertices(); ++v)
      for (ArcId e : arcs.incoming(v))
        for (ArcId f : arcs.incoming(v))
          CHECK(c.at(e, f) == make_rational(2, static_cast<long>(g.degree(v))) - (e == f ? 1 : 0));
  }
}

TEST_CASE("Grover rows of K4") {
  const Graph g = complete_graph(4);
  const ArcSpace arcs(g);
  const RatMatrix u = grover(g, arcs);
  for (ArcId e = 0; e < arcs.size(); ++e) {
    std::vector<Rational> values;
    for (const auto& [f, v] : u.row(e)) values.push_back(v);
    std::sort(values.begin(), values.end());
    REQUIRE(values.size() == 3);
    CHECK(values[0] == make_rational(-1, 3));
    CHECK(values[1] == make_rational(2, 3));
    CHECK(values[2] == make_rational(2, 3));
  }
}

TEST_CASE("cycle Grover matrix is 0/1 and equals its positive support") {
  for (int n = 3; n <= 10; ++n) {
    const Graph g = cycle_graph(n);
    const RatMatrix u = grover(g, ArcSpace(g));
    for (const auto& e : u.entries()) CHECK(e.value == 1);
    CHECK(positive_support(u) == u);
  }
}

TEST_CASE("positive support") {
  CHECK(positive_support(RatMatrix::identity(5)) == RatMatrix::identity(5));
  const RatMatrix m(2, 2, {{0, 0, make_rational(-1, 2)}, {0, 1, make_rational(3, 7)},
                           {1, 0, Rational(0)}, {1, 1, Rational(4)}});
  const RatMatrix p = positive_support(m);
  CHECK(p.at(0, 0) == 0);
  CHECK(p.at(0, 1) == 1);
  CHECK(p.at(1, 1) == 1);
  CHECK(p.nonzeros() == 2);

  const Graph k4 = complete_graph(4);
  for (const auto& s : row_sums(positive_support(grover(k4, ArcSpace(k4))))) CHECK(s == 2);
  for (const Graph& g : test_graphs()) {
    if (!g.regular_degree()) continue;
    const long k = static_cast<long>(*g.regular_degree());
    const Rational expected = k >= 3 ? Rational(k - 1) : Rational(1);
    for (const auto& s : row_sums(positive_support(grover(g, ArcSpace(g))))) CHECK(s == expected);
  }
}

TEST_CASE("explicit coin vectors") {
  // On the 4-regular torus the Grover vector 1/sqrt(4) = 1/2 is rational.
  const Graph t = torus_graph(2, 3);
  const ArcSpace arcs(t);
  CoinVectors grover_alpha(t.num_vertices(), std::vector<Rational>(arcs.size()));
  for (Vertex v = 0; v < t.num_vertices(); ++v)
    for (ArcId e : arcs.incoming(v)) grover_alpha[v][e] = make_rational(1, 2);
  CHECK(coin(t, arcs, grover_alpha) == coin(t, arcs));

  // A non-Grover rational coin on a cycle: alpha = (3/5, 4/5).
  const Graph c = cycle_graph(5);
  const ArcSpace carcs(c);
  CoinVectors alpha(c.num_vertices(), std::vector<Rational>(carcs.size()));
  for (Vertex v = 0; v < c.num_vertices(); ++v) {
    const auto in = carcs.incoming(v);
    alpha[v][in[0]] = make_rational(3, 5);
    alpha[v][in[1]] = make_rational(4, 5);
  }
  const RatMatrix cc = coin(c, carcs, alpha);
  CHECK(cc * cc == RatMatrix::identity(carcs.size()));
  const auto in0 = carcs.incoming(0);
  CHECK(cc.at(in0[0], in0[0]) == make_rational(-7, 25));
  CHECK(cc.at(in0[0], in0[1]) == make_rational(24, 25));

  auto bad_norm = alpha;
  bad_norm[2][carcs.incoming(2)[0]] = make_rational(1, 2);
  CHECK_THROWS_AS(coin(c, carcs, bad_norm), CoinError);

  auto bad_support = alpha;
  bad_support[0][carcs.outgoing(0)[0]] = make_rational(1, 7);
  CHECK_THROWS_AS(coin(c, carcs, bad_support), CoinError);

  auto vanishing = alpha;
  vanishing[1][carcs.incoming(1)[0]] = 0;
  vanishing[1][carcs.incoming(1)[1]] = 1;
  CHECK_THROWS_AS(coin(c, carcs, vanishing), CoinError);

  CHECK_THROWS_AS(coin(c, carcs, CoinVectors(2)), CoinError);
}
