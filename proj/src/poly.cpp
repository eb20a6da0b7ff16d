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

#include "gzeta/poly.hpp"

#include <sstream>

#include "gzeta/error.hpp"

namespace gzeta {

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

Poly::Poly(std::initializer_list<Rational> coeffs) : Poly(std::vector<Rational>(coeffs)) {}

Poly Poly::monomial(std::size_t k, const Rational& c) {
  std::vector<Rational> coeffs(k + 1);
  coeffs[k] = c;
  return Poly(std::move(coeffs));
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Poly::coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }

Rational Poly::eval(const Rational& u) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * u + *it;
  return acc;
}

double Poly::eval(double u) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * u + it->get_d();
  return acc;
}

Poly Poly::pow(long exponent) const {
  if (exponent < 0)
    throw MatrixError("polynomial power with negative exponent " + std::to_string(exponent));
  Poly result = constant(1);
  Poly base = *this;
  for (long e = exponent; e > 0; e >>= 1) {
    if (e & 1) result *= base;
    if (e > 1) base *= base;
  }
  return result;
}

Poly& Poly::operator+=(const Poly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& other) {
  if (is_zero() || other.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + other.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j)
      out[i + j] += coeffs_[i] * other.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

Poly& Poly::operator*=(const Rational& s) {
  for (auto& c : coeffs_) c *= s;
  trim();
  return *this;
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
    const Rational& c = p.coeffs()[k];
    if (c == 0) continue;
    const Rational mag = abs(c);
    if (first)
      out << (c < 0 ? "-" : "");
    else
      out << (c < 0 ? " - " : " + ");
    first = false;
    if (k == 0 || mag != 1) {
      out << to_string(mag);
      if (k > 0) out << "*";
    }
    if (k == 1) out << "u";
    if (k > 1) out << "u^" << k;
  }
  return out.str();
}

nlohmann::json poly_to_json(const Poly& p) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(to_string(c));
  return {{"coeffs", std::move(coeffs)}};
}

Poly poly_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array())
    throw MatrixError("polynomial JSON needs a \"coeffs\" array");
  std::vector<Rational> coeffs;
  for (const auto& c : j["coeffs"]) {
    if (!c.is_string()) throw MatrixError("polynomial coefficients must be \"p/q\" strings");
    coeffs.push_back(parse_rational(c.get<std::string>()));
  }
  return Poly(std::move(coeffs));
}

std::vector<Rational> log_series(const Poly& p, std::size_t order) {
  if (p.coeff(0) != 1)
    throw MatrixError("log series needs p(0) = 1, got p(0) = " + to_string(p.coeff(0)));
  // L = log p, k l_k = k p_k - Σ_{j=1}^{k-1} p_j (k-j) l_{k-j}
  std::vector<Rational> l(order + 1);
  for (std::size_t k = 1; k <= order; ++k) {
    Rational acc = Rational(static_cast<long>(k)) * p.coeff(k);
    for (std::size_t j = 1; j < k; ++j) {
      const Rational pj = p.coeff(j);
      if (pj != 0) acc -= pj * Rational(static_cast<long>(k - j)) * l[k - j];
    }
    l[k] = acc / Rational(static_cast<long>(k));
  }
  std::vector<Rational> c(order);
  for (std::size_t k = 1; k <= order; ++k) c[k - 1] = -l[k];
  return c;
}

}  // namespace gzeta
