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

#include "gzeta/rat_matrix.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "gzeta/error.hpp"

namespace gzeta {

namespace {

void check_same_shape(const RatMatrix& a, const RatMatrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw MatrixError(std::string("shape mismatch in ") + op + ": " +
                      std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " vs " +
                      std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
}

// Merge two sorted sparse rows, with b scaled by `sign`.
std::vector<RatMatrix::RowEntry> merge_rows(const std::vector<RatMatrix::RowEntry>& a,
                                            const std::vector<RatMatrix::RowEntry>& b,
                                            int sign) {
  std::vector<RatMatrix::RowEntry> out;
  out.reserve(a.size() + b.size());
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
      out.push_back(*ia++);
    } else if (ia == a.end() || ib->first < ia->first) {
      out.emplace_back(ib->first, sign > 0 ? ib->second : Rational(-ib->second));
      ++ib;
    } else {
      Rational v = ia->second;
      if (sign > 0)
        v += ib->second;
      else
        v -= ib->second;
      if (v != 0) out.emplace_back(ia->first, std::move(v));
      ++ia;
      ++ib;
    }
  }
  return out;
}

}  // namespace

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows) {}

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols, std::vector<Entry> entries)
    : RatMatrix(rows, cols) {
  std::vector<std::map<std::size_t, Rational>> acc(rows);
  for (auto& e : entries) {
    if (e.row >= rows || e.col >= cols)
      throw MatrixError("entry (" + std::to_string(e.row) + "," + std::to_string(e.col) +
                        ") outside a " + std::to_string(rows) + "x" + std::to_string(cols) +
                        " matrix");
    e.value.canonicalize();
    acc[e.row][e.col] += e.value;
  }
  for (std::size_t i = 0; i < rows; ++i)
    for (auto& [c, v] : acc[i])
      if (v != 0) data_[i].emplace_back(c, std::move(v));
}

RatMatrix RatMatrix::identity(std::size_t n) { return scalar(n, Rational(1)); }

RatMatrix RatMatrix::scalar(std::size_t n, const Rational& value) {
  RatMatrix m(n, n);
  if (value != 0)
    for (std::size_t i = 0; i < n; ++i) m.data_[i].emplace_back(i, value);
  return m;
}

RatMatrix RatMatrix::from_dense(std::size_t rows, std::size_t cols,
                                std::span<const Rational> values) {
  if (values.size() != rows * cols)
    throw MatrixError("dense data size does not match " + std::to_string(rows) + "x" +
                      std::to_string(cols));
  RatMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (const auto& v = values[i * cols + j]; v != 0) m.data_[i].emplace_back(j, v);
  return m;
}

std::size_t RatMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& r : data_) n += r.size();
  return n;
}

Rational RatMatrix::at(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_) throw MatrixError("index out of range");
  const auto& r = data_[i];
  auto it = std::lower_bound(r.begin(), r.end(), j,
                             [](const RowEntry& e, std::size_t c) { return e.first < c; });
  if (it != r.end() && it->first == j) return it->second;
  return Rational(0);
}

std::vector<RatMatrix::Entry> RatMatrix::entries() const {
  std::vector<Entry> out;
  out.reserve(nonzeros());
  for (std::size_t i = 0; i < rows_; ++i)
    for (const auto& [c, v] : data_[i]) out.push_back({i, c, v});
  return out;
}

std::vector<Rational> RatMatrix::to_dense() const {
  std::vector<Rational> out(rows_ * cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (const auto& [c, v] : data_[i]) out[i * cols_ + c] = v;
  return out;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (const auto& [c, v] : data_[i]) t.data_[c].emplace_back(i, v);
  return t;
}

std::vector<Rational> RatMatrix::apply(std::span<const Rational> x) const {
  if (x.size() != cols_) throw MatrixError("vector length does not match matrix columns");
  std::vector<Rational> y(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (const auto& [c, v] : data_[i])
      if (x[c] != 0) y[i] += v * x[c];
  return y;
}

Rational RatMatrix::trace() const {
  if (!is_square()) throw MatrixError("trace of a non-square matrix");
  Rational t = 0;
  for (std::size_t i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

RatMatrix& RatMatrix::operator+=(const RatMatrix& other) {
  check_same_shape(*this, other, "addition");
  for (std::size_t i = 0; i < rows_; ++i) data_[i] = merge_rows(data_[i], other.data_[i], +1);
  return *this;
}

RatMatrix& RatMatrix::operator-=(const RatMatrix& other) {
  check_same_shape(*this, other, "subtraction");
  for (std::size_t i = 0; i < rows_; ++i) data_[i] = merge_rows(data_[i], other.data_[i], -1);
  return *this;
}

RatMatrix& RatMatrix::operator*=(const Rational& s) {
  if (s == 0) {
    for (auto& r : data_) r.clear();
    return *this;
  }
  for (auto& r : data_)
    for (auto& e : r) e.second *= s;
  return *this;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols_ != b.rows_)
    throw MatrixError("shape mismatch in product: " + std::to_string(a.rows_) + "x" +
                      std::to_string(a.cols_) + " times " + std::to_string(b.rows_) + "x" +
                      std::to_string(b.cols_));
  RatMatrix out(a.rows_, b.cols_);
  std::vector<Rational> acc(b.cols_);
  std::vector<bool> touched(b.cols_, false);
  std::vector<std::size_t> cols;
  for (std::size_t i = 0; i < a.rows_; ++i) {
    cols.clear();
    for (const auto& [k, av] : a.data_[i]) {
      for (const auto& [j, bv] : b.data_[k]) {
        if (!touched[j]) {
          touched[j] = true;
          cols.push_back(j);
          acc[j] = 0;
        }
        acc[j] += av * bv;
      }
    }
    std::sort(cols.begin(), cols.end());
    for (std::size_t j : cols) {
      if (acc[j] != 0) out.data_[i].emplace_back(j, acc[j]);
      touched[j] = false;
    }
  }
  return out;
}

bool RatMatrix::operator==(const RatMatrix& other) const {
  return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
}

nlohmann::json matrix_to_json(const RatMatrix& m) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : m.entries()) entries.push_back({e.row, e.col, to_string(e.value)});
  nlohmann::json out;
  out["rows"] = m.rows();
  out["cols"] = m.cols();
  out["entries"] = std::move(entries);
  return out;
}

RatMatrix matrix_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
    throw MatrixError("matrix JSON needs rows, cols and entries");
  std::vector<RatMatrix::Entry> entries;
  for (const auto& e : j["entries"]) {
    if (!e.is_array() || e.size() != 3 || !e[2].is_string())
      throw MatrixError("matrix entries must be [i, j, \"p/q\"], got " + e.dump());
    entries.push_back({e[0].get<std::size_t>(), e[1].get<std::size_t>(),
                       parse_rational(e[2].get<std::string>())});
  }
  return RatMatrix(j["rows"].get<std::size_t>(), j["cols"].get<std::size_t>(),
                   std::move(entries));
}

}  // namespace gzeta
