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

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gzeta/graph.hpp"
#include "gzeta/poly.hpp"

namespace gzeta {

/// Z̄(G,u)^{-1} = det(I_{2m} - uU) for the Grover matrix U.
Poly grover_zeta_reciprocal(const Graph& g, unsigned workers = 1);

/// Ihara Z(G,u)^{-1} through the positive support: det(I_{2m} - uU⁺).
/// U⁺ is the non-backtracking operator only when every degree is >= 2
/// (a pendant vertex gives 2/1 - 1 > 0 on the backtracking entry), so
/// pendant vertices raise PreconditionError, as do trees.
Poly ihara_reciprocal_edge(const Graph& g, unsigned workers = 1);

/// Ihara Z(G,u)^{-1} through the vertex determinant:
/// (1-u²)^{r-1} det(I - uA + u²(D - I)), r the Betti number.
/// Trees (r = 0) raise PreconditionError.
Poly ihara_reciprocal_bass(const Graph& g, unsigned workers = 1);

struct KonnoSatoIdentity {
  bool holds = false;
  /// Both sides, kept only when the identity fails.
  std::optional<Poly> lhs;
  std::optional<Poly> rhs;
};

/// Result of checking the four determinant factorizations
///   (1) det(I - uU)  = (1-u²)^{m-ν} det((1+u²)I - 2uP)
///   (2) det(I - uU⁺) = (1-u²)^{m-ν} det((1+qu²)I - (q+1)uP)
///   (3) det(I - uU)  = (1-u²)^{m-ν} det((1-2u+u²)I + (2u/(q+1))Δ)
///   (4) det(I - uU⁺) = (1-u²)^{m-ν} det((1-(q+1)u+qu²)I + uΔ)
/// as exact polynomial equalities.
struct KonnoSatoReport {
  std::size_t num_vertices = 0;
  std::size_t num_edges = 0;
  std::size_t degree = 0;  // q + 1
  std::string family;
  bool claimed_vertex_transitive = false;
  std::array<KonnoSatoIdentity, 4> identities;

  bool all_hold() const;
};

/// Requires a regular graph (PreconditionError otherwise). Vertex
/// transitivity is recorded in the report but not required.
KonnoSatoReport konno_sato_check(const Graph& g, unsigned workers = 1);

nlohmann::json report_to_json(const KonnoSatoReport& report);

enum class SeriesKind {
  weighted,  // N_r = Tr[U^r], Grover-weighted cycles
  reduced,   // N_m = Tr[(U⁺)^m], reduced (non-backtracking) cycles
  rooted,    // N⁰_r = N_r / ν for vertex-transitive graphs
};

struct SeriesCoefficients {
  SeriesKind kind = SeriesKind::weighted;
  /// values[r - 1] holds the count for length r.
  std::vector<Rational> values;

  const Rational& at_length(std::size_t r) const { return values.at(r - 1); }
};

nlohmann::json series_to_json(const SeriesCoefficients& s);

/// Tr[U^r] for r = 1..r_max, exactly, by powering U against each basis
/// vector.
SeriesCoefficients weighted_cycle_counts(const Graph& g, std::size_t r_max,
                                         unsigned workers = 1);

/// Tr[(U⁺)^m] for m = 1..m_max. Same pendant-vertex precondition as
/// ihara_reciprocal_edge.
SeriesCoefficients reduced_cycle_counts(const Graph& g, std::size_t m_max,
                                        unsigned workers = 1);

/// Per-vertex counts N_r / ν. Requires the graph's vertex-transitive claim.
SeriesCoefficients rooted_counts(const Graph& g, const SeriesCoefficients& totals);

/// log Z̄(u) = Σ N_r/r u^r: compares the log-series of 1/det(I - uU) with
/// Tr[U^r]/r termwise for r <= order. order must be in 1..12.
bool zeta_series_consistency(const Graph& g, std::size_t order, unsigned workers = 1);

enum class ZetaKind { grover, ihara };
enum class SpectralRoute { transition, laplacian };

/// ζ̄(G,u)^{-1} (grover) or ζ(G,u)^{-1} (ihara) of a regular graph claimed
/// vertex-transitive, from the eigenvalues of P or Δ:
///   (1-u²)^{(q-1)/2} exp[(1/ν) Σ_λ log(arg(λ))].
/// Throws PreconditionError for non-regular or non-vertex-transitive input
/// and DomainError when a log argument is not positive (the message names
/// the eigenvalue) or the prefactor has no real value.
double spectral_zeta_eval(const Graph& g, double u, ZetaKind kind,
                          SpectralRoute route = SpectralRoute::transition);

/// The same quantity from the exact reciprocal polynomial: the positive
/// real ν-th root of det(I - uU) (or det(I - uU⁺)) evaluated exactly at
/// the rational value of u. DomainError when that value is not positive.
double determinant_route_zeta(const Graph& g, double u, ZetaKind kind, unsigned workers = 1);

/// Positive real ν-th root of a reciprocal zeta polynomial at the exact
/// rational value of u.
double reciprocal_root(const Poly& reciprocal, std::size_t nu, double u);

}  // namespace gzeta
