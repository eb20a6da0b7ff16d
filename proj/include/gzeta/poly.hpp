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
#include <initializer_list>
#include <string>
#include <vector>

#include <json.hpp>

#include "gzeta/rational.hpp"

namespace gzeta {

/// Univariate polynomial in u with exact rational coefficients, stored in
/// ascending degree with trailing zeros trimmed. The zero polynomial has
/// no coefficients and degree -1.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);
  Poly(std::initializer_list<Rational> coeffs);

  static Poly constant(const Rational& c) { return Poly({c}); }
  /// The monomial c·u^k.
  static Poly monomial(std::size_t k, const Rational& c = 1);

  bool is_zero() const { return coeffs_.empty(); }
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  /// Coefficient of u^k (zero beyond the degree).
  Rational coeff(std::size_t k) const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  Rational eval(const Rational& u) const;
  /// Horner in double precision.
  double eval(double u) const;

  /// Throws MatrixError for a negative exponent.
  Poly pow(long exponent) const;

  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Poly& other);
  Poly& operator*=(const Rational& s);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
  friend Poly operator*(const Rational& s, Poly a) { return a *= s; }
  Poly operator-() const;

  bool operator==(const Poly& other) const { return coeffs_ == other.coeffs_; }

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Human-readable form, e.g. "1 - 2*u^3 + u^6".
std::string to_string(const Poly& p);

/// {"coeffs": ["p/q", ...]} in ascending degree.
nlohmann::json poly_to_json(const Poly& p);
Poly poly_from_json(const nlohmann::json& j);

/// Coefficients c_1..c_K of log(1/p(u)) = Σ c_r u^r + O(u^{K+1}), from the
/// recurrence p·L' = p' for L = log p. Requires p(0) = 1 (MatrixError
/// otherwise).
std::vector<Rational> log_series(const Poly& p, std::size_t order);

}  // namespace gzeta
