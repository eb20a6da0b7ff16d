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

#include "gzeta/charpoly.hpp"

#include <string>
#include <utility>

#include "gzeta/error.hpp"
#include "gzeta/parallel.hpp"

namespace gzeta {

namespace {

// Bareiss on a dense row-major integer matrix; consumes its input.
BigInt bareiss_determinant(std::vector<BigInt> a, std::size_t n) {
  if (n == 0) return 1;
  int sign = 1;
  BigInt previous = 1;
  auto at = [&](std::size_t i, std::size_t j) -> BigInt& { return a[i * n + j]; };
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (at(k, k) == 0) {
      std::size_t pivot = k + 1;
      while (pivot < n && at(pivot, k) == 0) ++pivot;
      if (pivot == n) return 0;
      for (std::size_t j = k; j < n; ++j) std::swap(at(k, j), at(pivot, j));
      sign = -sign;
    }
    const BigInt& p = at(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const BigInt lead = at(i, k);
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt& x = at(i, j);
        x = p * x - lead * at(k, j);
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), previous.get_mpz_t());
      }
      at(i, k) = 0;
    }
    previous = p;
  }
  BigInt det = at(n - 1, n - 1);
  if (sign < 0) det = -det;
  return det;
}

Rational dense_determinant(const std::vector<Rational>& m, std::size_t n) {
  std::vector<BigInt> scaled(n * n);
  BigInt scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    BigInt row_lcm = 1;
    for (std::size_t j = 0; j < n; ++j)
      mpz_lcm(row_lcm.get_mpz_t(), row_lcm.get_mpz_t(), m[i * n + j].get_den_mpz_t());
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& x = m[i * n + j];
      scaled[i * n + j] = x.get_num() * (row_lcm / x.get_den());
    }
    scale *= row_lcm;
  }
  Rational det(bareiss_determinant(std::move(scaled), n), scale);
  det.canonicalize();
  return det;
}

}  // namespace

Rational determinant(const RatMatrix& m) {
  if (!m.is_square())
    throw MatrixError("determinant of a non-square " + std::to_string(m.rows()) + "x" +
                      std::to_string(m.cols()) + " matrix");
  return dense_determinant(m.to_dense(), m.rows());
}

Poly interpolate_at_integers(std::span<const Rational> values) {
  const std::size_t count = values.size();
  if (count == 0) return Poly();
  // In place: after pass k, dd[i] = f[x_{i-k}, ..., x_i] for i >= k.
  std::vector<Rational> dd(values.begin(), values.end());
  for (std::size_t k = 1; k < count; ++k)
    for (std::size_t i = count - 1; i >= k; --i)
      dd[i] = (dd[i] - dd[i - 1]) / Rational(static_cast<long>(k));
  // Nested Newton form: p = dd_0 + (u - 0)(dd_1 + (u - 1)(dd_2 + ...)).
  Poly p = Poly::constant(dd[count - 1]);
  for (std::size_t k = count - 1; k-- > 0;) {
    p *= Poly({Rational(-static_cast<long>(k)), Rational(1)});
    p += Poly::constant(dd[k]);
  }
  return p;
}

Poly det_matrix_polynomial(std::span<const RatMatrix> terms, unsigned workers) {
  if (terms.empty()) throw MatrixError("matrix polynomial needs at least one term");
  const std::size_t n = terms.front().rows();
  for (const auto& t : terms)
    if (!t.is_square() || t.rows() != n)
      throw MatrixError("matrix polynomial terms must be square and of equal size");
  if (n == 0) return Poly::constant(1);

  const std::size_t nodes = n * (terms.size() - 1) + 1;
  std::vector<Rational> values(nodes);
  parallel_for(nodes, workers, [&](std::size_t node) {
    const Rational t(static_cast<long>(node));
    std::vector<Rational> dense(n * n);
    Rational power = 1;
    for (const auto& term : terms) {
      for (const auto& e : term.entries()) dense[e.row * n + e.col] += power * e.value;
      power *= t;
    }
    values[node] = dense_determinant(dense, n);
  });
  return interpolate_at_integers(values);
}

Poly det_i_minus_u(const RatMatrix& m, unsigned workers) {
  if (!m.is_square())
    throw MatrixError("det(I - uM) needs a square matrix, got " + std::to_string(m.rows()) +
                      "x" + std::to_string(m.cols()));
  const RatMatrix terms[] = {RatMatrix::identity(m.rows()), Rational(-1) * m};
  return det_matrix_polynomial(terms, workers);
}

}  // namespace gzeta
