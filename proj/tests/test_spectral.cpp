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

#include <algorithm>
#include <cmath>

#include "gzeta/error.hpp"
#include "gzeta/spectral.hpp"

using namespace gzeta;

TEST_CASE("torus spectrum closed form") {
  const auto s = torus_spectrum(1, 4, OperatorTag::transition);
  REQUIRE(s.eigenvalues.size() == 4);
  CHECK(s.source == SpectrumSource::exact_circulant);
  const double expected[] = {1.0, 0.0, -1.0, 0.0};
  for (int k = 0; k < 4; ++k) CHECK(std::abs(s.eigenvalues[k] - expected[k]) < 1e-15);

  const auto t = torus_spectrum(2, 3, OperatorTag::transition);
  CHECK(t.source == SpectrumSource::closed_form_torus);
  CHECK(t.eigenvalues.size() == 9);
  CHECK(std::count_if(t.eigenvalues.begin(), t.eigenvalues.end(),
                      [](double l) { return std::abs(l - 1.0) < 1e-12; }) == 1);

  for (int d = 1; d <= 3; ++d) {
    for (int n = 3; n <= 7; ++n) {
      const auto p = torus_spectrum(d, n, OperatorTag::transition);
      const auto delta = torus_spectrum(d, n, OperatorTag::laplacian);
      CHECK(std::abs(pairwise_sum(p.eigenvalues)) < 1e-12);
      for (std::size_t i = 0; i < p.eigenvalues.size(); ++i) {
        CHECK(p.eigenvalues[i] <= 1.0 + 1e-15);
        CHECK(p.eigenvalues[i] >= -1.0 - 1e-15);
        CHECK(std::abs(delta.eigenvalues[i] - 2.0 * d * (1.0 - p.eigenvalues[i])) < 1e-15);
        CHECK(delta.eigenvalues[i] >= -1e-15);
        CHECK(delta.eigenvalues[i] <= 4.0 * d + 1e-12);
      }
    }
  }
  CHECK_THROWS_AS(torus_spectrum(2, 2, OperatorTag::transition), FamilyParameterError);
  CHECK_THROWS_AS(torus_spectrum(0, 5, OperatorTag::transition), FamilyParameterError);
}

TEST_CASE("closed-form torus spectrum matches the numeric solver") {
  for (auto [d, n] : {std::pair{1, 7}, std::pair{2, 3}, std::pair{2, 4}, std::pair{2, 5}, std::pair{3, 3}}) {
    for (OperatorTag op : {OperatorTag::transition, OperatorTag::laplacian}) {
      auto closed = torus_spectrum(d, n, op).eigenvalues;
      const auto numeric = numeric_spectrum(torus_graph(d, n), op).eigenvalues;
      std::sort(closed.begin(), closed.end());
      REQUIRE(closed.size() == numeric.size());
      for (std::size_t i = 0; i < closed.size(); ++i) CHECK(std::abs(closed[i] - numeric[i]) < 1e-10);
    }
  }
}

TEST_CASE("empirical spectral measure") {
  const EmpiricalSpectralMeasure m(torus_spectrum(2, 5, OperatorTag::transition));
  CHECK(m.atom_weight() == make_rational(1, 25));
  CHECK(m.total_weight() == 1);
  CHECK(std::abs(m.integrate([](double) { return 1.0; }) - 1.0) < 1e-15);
  CHECK(std::abs(m.integrate([](double l) { return l; })) < 1e-15);
  CHECK_THROWS_AS(EmpiricalSpectralMeasure(SpectrumList{}), MatrixError);
}

TEST_CASE("numeric spectrum of a non-regular graph") {
  const std::vector<std::pair<Vertex, Vertex>> edges{{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}};
  const auto s = numeric_spectrum(Graph::from_edges(4, edges), OperatorTag::transition);
  CHECK(std::abs(s.eigenvalues.back() - 1.0) < 1e-12);
  CHECK(std::abs(pairwise_sum(s.eigenvalues)) < 1e-12);
}

TEST_CASE("pairwise sum is order-fixed") {
  std::vector<double> v(1000);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = 1.0 / static_cast<double>(i + 1);
  const double s = pairwise_sum(v);
  CHECK(s == pairwise_sum(v));
  CHECK(std::abs(s - 7.485470860550345) < 1e-13);
  CHECK(pairwise_sum(std::vector<double>{}) == 0.0);
}

TEST_CASE("finite torus zeta") {
  for (ZetaKind kind : {ZetaKind::grover, ZetaKind::ihara}) {
    CHECK(finite_torus_zeta(2, 5, 0.0, kind).value == 1.0);
    CHECK(finite_torus_zeta(3, 3, 0.0, kind).value == 1.0);
  }
  // same quantity through the graph's own eigenvalues
  const Graph t23 = torus_graph(2, 3);
  for (ZetaKind kind : {ZetaKind::grover, ZetaKind::ihara})
    CHECK(std::abs(finite_torus_zeta(2, 3, 0.2, kind).value - spectral_zeta_eval(t23, 0.2, kind)) < 1e-12);

  // d = 1: U = U+, and det(I - uU(C_N)) = (1 - u^N)^2
  for (int n = 3; n <= 10; ++n) {
    const double g = finite_torus_zeta(1, n, 0.3, ZetaKind::grover).value;
    const double i = finite_torus_zeta(1, n, 0.3, ZetaKind::ihara).value;
    CHECK(g == i);
    CHECK(std::abs(g - std::pow(1 - std::pow(0.3, n), 2.0 / n)) < 1e-13);
  }

  // cosine sign flip is a spectrum symmetry for even N
  for (int n : {4, 6, 8}) {
    for (ZetaKind kind : {ZetaKind::grover, ZetaKind::ihara}) {
      CHECK(std::abs(finite_torus_zeta(2, n, 0.25, kind).value -
                     finite_torus_zeta(2, n, -0.25, kind).value) < 1e-14);
    }
  }
}

TEST_CASE("finite torus domain and parameter errors") {
  CHECK_THROWS_AS(finite_torus_zeta(2, 3, 1.0, ZetaKind::grover), DomainError);
  // ihara: |u| must stay below 1/(2d-1) = 1/3 for d = 2
  CHECK_THROWS_WITH_AS(finite_torus_zeta(2, 4, 0.5, ZetaKind::ihara), doctest::Contains("eigenvalue"),
                       DomainError);
  CHECK_NOTHROW(finite_torus_zeta(2, 4, 0.3, ZetaKind::ihara));
  CHECK_THROWS_AS(finite_torus_zeta(2, 2, 0.1, ZetaKind::grover), FamilyParameterError);
  CHECK_THROWS_AS(finite_torus_zeta(5, 3, 0.1, ZetaKind::grover), PreconditionError);
  CHECK_NOTHROW(finite_torus_zeta(5, 3, 0.1, ZetaKind::grover, TorusOptions{1, true}));
}

TEST_CASE("limit integral") {
  for (ZetaKind kind : {ZetaKind::grover, ZetaKind::ihara})
    for (int d = 1; d <= 3; ++d) CHECK(limit_integral(d, 0.0, 16, kind).value == 1.0);

  // quadrature / graph duality
  for (int d = 1; d <= 3; ++d) {
    for (int grid : {8, 12, 16}) {
      for (double u : {-0.2, 0.1, 0.3}) {
        for (ZetaKind kind : {ZetaKind::grover, ZetaKind::ihara}) {
          if (kind == ZetaKind::ihara && std::abs(u) * (2 * d - 1) >= 1) continue;
          CAPTURE(d);
          CAPTURE(grid);
          CAPTURE(u);
          CHECK(std::abs(limit_integral(d, u, grid, kind).value -
                         finite_torus_zeta(d, grid, u, kind).value) < 1e-13);
        }
      }
    }
  }

  // prefactor assembly: value / exp(mean_log) = (1-u^2)^{d-1}
  for (int d = 1; d <= 4; ++d) {
    const TorusZeta z = limit_integral(d, 0.15, 8, ZetaKind::grover);
    double expected = 1.0;
    for (int i = 1; i < d; ++i) expected *= 1.0 - 0.15 * 0.15;
    CHECK(z.prefactor == expected);
    CHECK(std::abs(z.value / std::exp(z.mean_log) - expected) < 1e-15);
  }

  // d = 1 limit is exactly 1 for |u| < 1
  CHECK(std::abs(limit_integral(1, 0.3, 256, ZetaKind::grover).value - 1.0) < 1e-14);

  CHECK_THROWS_AS(limit_integral(2, 0.1, 4, ZetaKind::grover), PreconditionError);
  CHECK_THROWS_AS(limit_integral(2, 0.5, 16, ZetaKind::ihara), DomainError);
  CHECK_THROWS_AS(limit_integral(6, 0.1, 8, ZetaKind::grover), PreconditionError);
}

TEST_CASE("limit integral against the high-precision quadrature fixture") {
  // mpmath reference from tests/fixtures/generate_fixtures.py
  CHECK(std::abs(limit_integral(2, 0.2, 512, ZetaKind::ihara).value - 0.99645992314675896448) < 1e-14);
  CHECK(std::abs(limit_integral(2, 0.2, 512, ZetaKind::grover).value - 0.979297920761828759) < 1e-14);
}

TEST_CASE("periodic trapezoid is exact for low trigonometric degree") {
  const double mean = periodic_trapezoid(2, 8, [](std::span<const double> t) {
    return 1.0 + std::cos(t[0]) * std::cos(t[1]) + std::cos(3 * t[1]) + std::sin(t[0]);
  });
  CHECK(std::abs(mean - 1.0) < 1e-15);
  const double a = periodic_trapezoid(3, 9, [](std::span<const double> t) { return std::cos(t[0] - t[2]); }, 1);
  const double b = periodic_trapezoid(3, 9, [](std::span<const double> t) { return std::cos(t[0] - t[2]); }, 3);
  CHECK(a == b);
}

TEST_CASE("convergence study") {
  const int sizes[] = {4, 8, 16, 32};
  const auto study = convergence_study(2, 0.2, sizes, ZetaKind::grover);
  CHECK(study.reference_grid == kReferenceGrid);
  REQUIRE(study.rows.size() == 4);
  CHECK(study.rows.back().abs_error <= 1e-6);
  for (std::size_t i = 1; i < study.rows.size(); ++i)
    CHECK(study.rows[i].abs_error <= study.rows[i - 1].abs_error);

  const auto flat = convergence_study(2, 0.0, sizes, ZetaKind::ihara, 128);
  for (const auto& row : flat.rows) CHECK(row.abs_error == 0.0);

  const int small[] = {3, 5, 7};
  const auto g1 = convergence_study(1, 0.3, small, ZetaKind::grover, 64);
  const auto i1 = convergence_study(1, 0.3, small, ZetaKind::ihara, 64);
  for (std::size_t k = 0; k < 3; ++k) {
    CHECK(g1.rows[k].value == i1.rows[k].value);
    CHECK(g1.rows[k].abs_error == i1.rows[k].abs_error);
  }

  const int unsorted[] = {8, 4};
  CHECK_THROWS_AS(convergence_study(2, 0.2, unsorted, ZetaKind::grover), PreconditionError);
  CHECK_THROWS_AS(convergence_study(2, 0.2, sizes, ZetaKind::grover, 64), PreconditionError);
}
