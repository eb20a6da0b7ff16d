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

#include "gzeta/rational.hpp"

#include <cmath>

#include "gzeta/error.hpp"

namespace gzeta {

Rational make_rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw MatrixError("rational with zero denominator");
  Rational r(BigInt(std::to_string(num)), BigInt(std::to_string(den)));
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(10); }

Rational parse_rational(std::string_view text) {
  std::string s(text);
  const auto slash = s.find('/');
  auto valid_int = [](std::string_view part, bool allow_sign) {
    if (part.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && part[0] == '-') i = 1;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9') return false;
    return true;
  };
  if (slash == std::string::npos) {
    if (!valid_int(s, true)) throw MatrixError("bad rational literal: " + s);
    return Rational(BigInt(s));
  }
  const std::string num = s.substr(0, slash);
  const std::string den = s.substr(slash + 1);
  if (!valid_int(num, true) || !valid_int(den, false))
    throw MatrixError("bad rational literal: " + s);
  BigInt d(den);
  if (d == 0) throw MatrixError("rational with zero denominator: " + s);
  Rational r(BigInt(num), d);
  r.canonicalize();
  return r;
}

Rational exact_rational(double x) {
  if (!std::isfinite(x)) throw DomainError("non-finite value has no rational form");
  Rational r(x);
  return r;
}

double to_double(const Rational& r) { return r.get_d(); }

}  // namespace gzeta
