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

#include "gzeta/graph.hpp"
#include "gzeta/zeta.hpp"

namespace gzeta {

enum class OracleMode { weighted, reduced };

/// Upper bound on enumeration nodes for cycle_oracle.
inline constexpr double kOracleGuard = 1e8;

/// Brute-force cycle sums straight from the graph, without any matrix.
/// A cycle is a closed vertex walk v_0 v_1 ... v_r = v_0 read as arcs
/// e_i = (v_{i-1}, v_i), counted once per starting arc.
///   weighted: Σ_C Π_i w(e_i, e_{i+1}) with wraparound, where
///             w(f, e) = 2/deg t(f) - [e = f^{-1}] for t(f) = o(e).
///   reduced:  number of cycles with e_{i+1} != e_i^{-1}, wraparound
///             included.
/// The walk tree has at most 2m·b^{r_max-1} nodes, b the largest number of
/// admissible continuations from an arc; beyond kOracleGuard the call
/// throws GuardError.
SeriesCoefficients cycle_oracle(const Graph& g, std::size_t r_max, OracleMode mode,
                                unsigned workers = 1);

/// The node bound checked against kOracleGuard.
double oracle_work_bound(const Graph& g, std::size_t r_max, OracleMode mode);

}  // namespace gzeta
