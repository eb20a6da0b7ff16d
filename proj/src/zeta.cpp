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

#include "gzeta/zeta.hpp"

#include <cmath>
#include <sstream>

#include "gzeta/charpoly.hpp"
#include "gzeta/error.hpp"
#include "gzeta/parallel.hpp"
#include "gzeta/spectral.hpp"
#include "gzeta/walk_operators.hpp"

namespace gzeta {

namespace {

void require_not_tree(const Graph& g, const char* what) {
  if (g.betti_number() <= 0)
    throw PreconditionError(std::string(what) +
                            ": input is a tree (Betti number 0); its Ihara zeta is trivial "
                            "and (1-u^2)^{r-1} is not a polynomial");
}

void require_no_pendant(const Graph& g, const char* what) {
  if (g.min_degree() < 2)
    throw PreconditionError(std::string(what) +
                            ": every vertex needs degree >= 2 for U+ to be the "
                            "non-backtracking operator");
}

std::size_t require_regular(const Graph& g, const char* what) {
  if (!g.regular_degree())
    throw PreconditionError(std::string(what) + " requires a regular graph");
  return *g.regular_degree();
}

// (1 - u²)^k
Poly one_minus_u_squared_pow(long k) { return Poly({1, 0, -1}).pow(k); }

RatMatrix grover_plus(const Graph& g) { return positive_support(grover(g, ArcSpace(g))); }

// log of a positive rational without overflowing double
double log_rational(const Rational& x) {
  auto log_int = [](const BigInt& z) {
    long exponent = 0;
    const double mantissa = mpz_get_d_2exp(&exponent, z.get_mpz_t());
    return std::log(mantissa) + static_cast<double>(exponent) * std::log(2.0);
  };
  return log_int(x.get_num()) - log_int(x.get_den());
}

SeriesCoefficients trace_powers(const RatMatrix& m, std::size_t r_max, SeriesKind kind,
                                unsigned workers) {
  const std::size_t n = m.rows();
  std::vector<std::vector<Rational>> diagonal(n);
  parallel_for(n, workers, [&](std::size_t j) {
    std::vector<Rational> v(n);
    v[j] = 1;
    auto& out = diagonal[j];
    out.resize(r_max);
    for (std::size_t r = 0; r < r_max; ++r) {
      v = m.apply(v);
      out[r] = v[j];
    }
  });
  SeriesCoefficients s{kind, std::vector<Rational>(r_max)};
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t r = 0; r < r_max; ++r) s.values[r] += diagonal[j][r];
  return s;
}

}  // namespace

Poly grover_zeta_reciprocal(const Graph& g, unsigned workers) {
  return det_i_minus_u(grover(g, ArcSpace(g)), workers);
}

Poly ihara_reciprocal_edge(const Graph& g, unsigned workers) {
  require_not_tree(g, "ihara_reciprocal_edge");
  require_no_pendant(g, "ihara_reciprocal_edge");
  return det_i_minus_u(grover_plus(g), workers);
}

Poly ihara_reciprocal_bass(const Graph& g, unsigned workers) {
  require_not_tree(g, "ihara_reciprocal_bass");
  const std::size_t n = g.num_vertices();
  const RatMatrix identity = RatMatrix::identity(n);
  const RatMatrix terms[] = {identity, Rational(-1) * adjacency(g), degree_matrix(g) - identity};
  return one_minus_u_squared_pow(g.betti_number() - 1) * det_matrix_polynomial(terms, workers);
}

bool KonnoSatoReport::all_hold() const {
  for (const auto& id : identities)
    if (!id.holds) return false;
  return true;
}

KonnoSatoReport konno_sato_check(const Graph& g, unsigned workers) {
  const std::size_t degree = require_regular(g, "konno_sato_check");
  const std::size_t n = g.num_vertices();
  const Rational q(static_cast<long>(degree) - 1);
  const Rational q1(static_cast<long>(degree));

  const ArcSpace arcs(g);
  const RatMatrix u_mat = grover(g, arcs);
  const Poly lhs_grover = det_i_minus_u(u_mat, workers);
  const Poly lhs_plus = det_i_minus_u(positive_support(u_mat), workers);

  const Poly prefactor = one_minus_u_squared_pow(static_cast<long>(g.num_edges()) -
                                                 static_cast<long>(n));
  const RatMatrix identity = RatMatrix::identity(n);
  const RatMatrix p = transition(g);
  const RatMatrix delta = laplacian(g);

  auto rhs = [&](const RatMatrix& c1, const RatMatrix& c2) {
    const RatMatrix terms[] = {identity, c1, c2};
    return prefactor * det_matrix_polynomial(terms, workers);
  };
  // coefficient matrices of u^0, u^1, u^2 inside each vertex determinant
  const Poly rhs1 = rhs(Rational(-2) * p, identity);
  const Poly rhs2 = rhs(Rational(-q1) * p, RatMatrix::scalar(n, q));
  const Poly rhs3 = rhs(RatMatrix::scalar(n, -2) + (Rational(2) / q1) * delta, identity);
  const Poly rhs4 = rhs(RatMatrix::scalar(n, -q1) + delta, RatMatrix::scalar(n, q));

  KonnoSatoReport report;
  report.num_vertices = n;
  report.num_edges = g.num_edges();
  report.degree = degree;
  report.family = to_string(g.family());
  report.claimed_vertex_transitive = g.claimed_vertex_transitive();
  auto record = [](KonnoSatoIdentity& id, const Poly& lhs, const Poly& rhs) {
    id.holds = lhs == rhs;
    if (!id.holds) {
      id.lhs = lhs;
      id.rhs = rhs;
    }
  };
  record(report.identities[0], lhs_grover, rhs1);
  record(report.identities[1], lhs_plus, rhs2);
  record(report.identities[2], lhs_grover, rhs3);
  record(report.identities[3], lhs_plus, rhs4);
  return report;
}

nlohmann::json report_to_json(const KonnoSatoReport& report) {
  nlohmann::json identities = nlohmann::json::array();
  for (std::size_t i = 0; i < report.identities.size(); ++i) {
    const auto& id = report.identities[i];
    nlohmann::json entry{{"identity", i + 1}, {"holds", id.holds}};
    if (id.lhs) entry["lhs"] = poly_to_json(*id.lhs);
    if (id.rhs) entry["rhs"] = poly_to_json(*id.rhs);
    identities.push_back(std::move(entry));
  }
  return {{"graph",
           {{"vertices", report.num_vertices},
            {"edges", report.num_edges},
            {"degree", report.degree},
            {"family", report.family},
            {"vertex_transitive", report.claimed_vertex_transitive}}},
          {"identities", std::move(identities)},
          {"all_hold", report.all_hold()}};
}

nlohmann::json series_to_json(const SeriesCoefficients& s) {
  nlohmann::json values = nlohmann::json::array();
  for (const auto& v : s.values) values.push_back(to_string(v));
  return {{"N", std::move(values)}};
}

SeriesCoefficients weighted_cycle_counts(const Graph& g, std::size_t r_max, unsigned workers) {
  if (r_max < 1) throw PreconditionError("weighted_cycle_counts needs r_max >= 1");
  return trace_powers(grover(g, ArcSpace(g)), r_max, SeriesKind::weighted, workers);
}

SeriesCoefficients reduced_cycle_counts(const Graph& g, std::size_t m_max, unsigned workers) {
  if (m_max < 1) throw PreconditionError("reduced_cycle_counts needs m_max >= 1");
  require_no_pendant(g, "reduced_cycle_counts");
  return trace_powers(grover_plus(g), m_max, SeriesKind::reduced, workers);
}

SeriesCoefficients rooted_counts(const Graph& g, const SeriesCoefficients& totals) {
  if (!g.claimed_vertex_transitive())
    throw PreconditionError("rooted counts N_r / nu need a vertex-transitive graph");
  SeriesCoefficients out{SeriesKind::rooted, totals.values};
  const Rational nu(static_cast<long>(g.num_vertices()));
  for (auto& v : out.values) v /= nu;
  return out;
}

bool zeta_series_consistency(const Graph& g, std::size_t order, unsigned workers) {
  if (order < 1 || order > 12)
    throw PreconditionError("zeta_series_consistency supports orders 1..12, got " +
                            std::to_string(order));
  const auto log_coeffs = log_series(grover_zeta_reciprocal(g, workers), order);
  const auto traces = weighted_cycle_counts(g, order, workers);
  for (std::size_t r = 1; r <= order; ++r)
    if (log_coeffs[r - 1] != traces.at_length(r) / Rational(static_cast<long>(r))) return false;
  return true;
}

double spectral_zeta_eval(const Graph& g, double u, ZetaKind kind, SpectralRoute route) {
  const std::size_t degree = require_regular(g, "spectral_zeta_eval");
  if (!g.claimed_vertex_transitive())
    throw PreconditionError(
        "spectral_zeta_eval requires a vertex-transitive graph (zeta = Z^{1/nu})");
  const double q = static_cast<double>(degree) - 1.0;
  const double q1 = static_cast<double>(degree);

  std::function<double(double)> argument;
  if (kind == ZetaKind::grover && route == SpectralRoute::transition)
    argument = [=](double l) { return (1 + u * u) - 2 * u * l; };
  else if (kind == ZetaKind::grover)
    argument = [=](double l) { return (1 - 2 * u + u * u) + (2 * u / q1) * l; };
  else if (route == SpectralRoute::transition)
    argument = [=](double l) { return (1 + q * u * u) - q1 * u * l; };
  else
    argument = [=](double l) { return (1 - q1 * u + q * u * u) + u * l; };

  const EmpiricalSpectralMeasure measure(numeric_spectrum(
      g, route == SpectralRoute::transition ? OperatorTag::transition : OperatorTag::laplacian));
  for (double l : measure.spectrum().eigenvalues) {
    if (!(argument(l) > 0)) {
      std::ostringstream msg;
      msg.precision(15);
      msg << "log argument " << argument(l) << " <= 0 at eigenvalue " << l << " for u = " << u;
      throw DomainError(msg.str());
    }
  }
  const double mean_log = measure.integrate([&](double l) { return std::log(argument(l)); });

  // (1-u²)^{(q-1)/2}
  const long twice_exponent = static_cast<long>(degree) - 2;
  const double base = 1 - u * u;
  double prefactor;
  if (twice_exponent % 2 == 0) {
    prefactor = std::pow(base, static_cast<double>(twice_exponent / 2));
  } else {
    if (base < 0)
      throw DomainError("(1-u^2)^{(q-1)/2} has no real value for |u| > 1 and even q");
    prefactor = std::pow(base, static_cast<double>(twice_exponent) / 2.0);
  }
  return prefactor * std::exp(mean_log);
}

double reciprocal_root(const Poly& reciprocal, std::size_t nu, double u) {
  const Rational value = reciprocal.eval(exact_rational(u));
  if (value <= 0) {
    std::ostringstream msg;
    msg << "reciprocal zeta determinant is " << value.get_d() << " at u = " << u
        << "; the positive real root is undefined";
    throw DomainError(msg.str());
  }
  return std::exp(log_rational(value) / static_cast<double>(nu));
}

double determinant_route_zeta(const Graph& g, double u, ZetaKind kind, unsigned workers) {
  const Poly reciprocal = kind == ZetaKind::grover ? grover_zeta_reciprocal(g, workers)
                                                   : ihara_reciprocal_edge(g, workers);
  return reciprocal_root(reciprocal, g.num_vertices(), u);
}

}  // namespace gzeta
