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

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace gzeta {

/// Exact big rational. GMP keeps every value canonical (reduced, positive
/// denominator) after arithmetic; values built from numerator/denominator
/// pairs go through make_rational.
using Rational = mpq_class;
using BigInt = mpz_class;

Rational make_rational(std::int64_t num, std::int64_t den = 1);

/// "p/q" with q > 1 omitted for integers ("3", "-1/3").
std::string to_string(const Rational& r);

/// Accepts "p", "p/q" and "-p/q"; throws MatrixError on anything else or
/// a zero denominator.
Rational parse_rational(std::string_view text);

/// Exact conversion: every finite double is a dyadic rational.
Rational exact_rational(double x);

double to_double(const Rational& r);

}  // namespace gzeta
