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

#include <optional>
#include <vector>

#include "gzeta/graph.hpp"
#include "gzeta/rat_matrix.hpp"

namespace gzeta {

// Vertex operators (ν×ν, vertex id order).
RatMatrix adjacency(const Graph& g);
RatMatrix degree_matrix(const Graph& g);
/// Simple random walk: P_uv = 1/deg(u) for every arc (u, v).
RatMatrix transition(const Graph& g);
/// Δ = D - A.
RatMatrix laplacian(const Graph& g);

// Arc operators (2m×2m, ArcSpace order).

/// Flip-flop shift: S_ef = 1 iff f = e^{-1}.
RatMatrix shift(const ArcSpace& arcs);

/// Coin vectors, one per vertex, each a length-2m vector indexed by arc.
/// alpha[u] must be nonzero exactly on D(u) = {e : t(e) = u} and have unit
/// squared norm.
using CoinVectors = std::vector<std::vector<Rational>>;

/// C = 2 Σ_u |α_u⟩⟨α_u| - I. Without explicit vectors the Grover coin
/// α_u(e) = 1/sqrt(d_u) is used through its exact projector entries 1/d_u.
/// Throws CoinError on a support or norm violation.
RatMatrix coin(const Graph& g, const ArcSpace& arcs,
               const std::optional<CoinVectors>& alpha = std::nullopt);

/// U = S C with the Grover coin:
///   U_ef = 2/d_{t(f)} - [f = e^{-1}]  when t(f) = o(e), else 0.
RatMatrix grover(const Graph& g, const ArcSpace& arcs);

/// 0/1 matrix marking the strictly positive entries.
RatMatrix positive_support(const RatMatrix& m);

}  // namespace gzeta
