// Copyright 2026 The ccz Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
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
#include <vector>

#include "ccz/padic.hpp"

namespace ccz {

/// Dense polynomial over Q, constant term first. Trailing zeros are trimmed
/// by the helpers below; the zero polynomial is the empty vector.
using QPoly = std::vector<mpq_class>;

namespace qpoly {

void trim(QPoly& f);
int degree(const QPoly& f);  // -1 for zero
mpq_class eval(const QPoly& f, const mpq_class& x);
QPoly derivative(const QPoly& f);
QPoly mul(const QPoly& a, const QPoly& b);
QPoly add(const QPoly& a, const QPoly& b);
QPoly scale(const QPoly& a, const mpq_class& c);
/// Determinant of the Sylvester matrix of (a, b).
mpq_class resultant(const QPoly& a, const QPoly& b);
/// (-1)^(n(n-1)/2) Res(f, f') / lc(f).
mpq_class discriminant(const QPoly& f);
/// Distinct rational roots (exact), ascending.
std::vector<mpq_class> rational_roots(const QPoly& f);
/// Exact determinant by fraction-free elimination over Q.
mpq_class determinant(std::vector<std::vector<mpq_class>> m);
/// "x^2 - x + 1" style rendering in the given variable.
std::string to_string(const QPoly& f, const std::string& var);
/// Coefficients as p-adic numbers of absolute precision n.
std::vector<PadicNumber> to_padic(const QPoly& f, Prime p, int n);
/// Evaluates at a p-adic argument.
PadicNumber eval(const std::vector<PadicNumber>& f, const PadicNumber& x);

}  // namespace qpoly

/// Least non-negative residue of a p-integral rational mod p.
std::int64_t mod_p(const mpq_class& q, Prime p);
/// True iff the denominator of q is prime to p.
bool is_p_integral(const mpq_class& q, Prime p);
/// ord_p of a nonzero rational.
int rational_valuation(const mpq_class& q, Prime p);
/// Parses "a", "-a", "a/b"; throws BadInputError.
mpq_class parse_rational(const std::string& s);
std::string format_rational(const mpq_class& q);
bool is_rational_square(const mpq_class& q, mpq_class* root = nullptr);

}  // namespace ccz
