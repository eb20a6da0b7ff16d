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
#include <span>
#include <utility>
#include <vector>

#include <json.hpp>

#include "gzeta/rational.hpp"

namespace gzeta {

/// Sparse matrix over exact rationals. Each row keeps its nonzero entries
/// sorted by column; zeros are never stored.
class RatMatrix {
 public:
  struct Entry {
    std::size_t row;
    std::size_t col;
    Rational value;
  };
  using RowEntry = std::pair<std::size_t, Rational>;

  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols);
  /// Duplicate (row, col) positions are summed. Throws MatrixError on an
  /// out-of-range position.
  RatMatrix(std::size_t rows, std::size_t cols, std::vector<Entry> entries);

  static RatMatrix identity(std::size_t n);
  static RatMatrix scalar(std::size_t n, const Rational& value);
  /// Row-major dense input.
  static RatMatrix from_dense(std::size_t rows, std::size_t cols,
                              std::span<const Rational> values);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  std::size_t nonzeros() const;

  Rational at(std::size_t i, std::size_t j) const;
  std::span<const RowEntry> row(std::size_t i) const { return data_[i]; }
  /// All nonzero entries sorted by (row, col).
  std::vector<Entry> entries() const;
  /// Row-major dense copy.
  std::vector<Rational> to_dense() const;

  RatMatrix transpose() const;
  std::vector<Rational> apply(std::span<const Rational> x) const;
  Rational trace() const;

  RatMatrix& operator+=(const RatMatrix& other);
  RatMatrix& operator-=(const RatMatrix& other);
  RatMatrix& operator*=(const Rational& s);

  friend RatMatrix operator+(RatMatrix a, const RatMatrix& b) { return a += b; }
  friend RatMatrix operator-(RatMatrix a, const RatMatrix& b) { return a -= b; }
  friend RatMatrix operator*(RatMatrix a, const Rational& s) { return a *= s; }
  friend RatMatrix operator*(const Rational& s, RatMatrix a) { return a *= s; }
  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);

  bool operator==(const RatMatrix& other) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::vector<RowEntry>> data_;
};

/// Dump format: {"rows": r, "cols": c, "entries": [[i, j, "p/q"], ...]}
/// sorted by (i, j).
nlohmann::json matrix_to_json(const RatMatrix& m);
RatMatrix matrix_from_json(const nlohmann::json& j);

}  // namespace gzeta
