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

#include <span>
#include <vector>

#include "gzeta/poly.hpp"
#include "gzeta/rat_matrix.hpp"

namespace gzeta {

/// Exact determinant. Rows are scaled to integers by their denominator lcm
/// and the integer matrix is reduced by fraction-free (Bareiss) elimination.
/// Throws MatrixError for non-square input.
Rational determinant(const RatMatrix& m);

/// The unique polynomial of degree <= values.size()-1 through the points
/// (k, values[k]), k = 0, 1, ... (Newton divided differences).
Poly interpolate_at_integers(std::span<const Rational> values);

/// det(Σ_k u^k terms[k]) for square matrices of a common size n. The
/// determinant has degree at most n·(terms.size()-1); it is evaluated at
/// that many + 1 integer nodes t = 0, 1, ... and interpolated exactly.
/// Node evaluations are independent and spread across `workers` threads.
Poly det_matrix_polynomial(std::span<const RatMatrix> terms, unsigned workers = 1);

/// det(I - u M).
Poly det_i_minus_u(const RatMatrix& m, unsigned workers = 1);

}  // namespace gzeta
