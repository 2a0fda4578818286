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

#include <optional>
#include <string>
#include <vector>

#include "ccz/padic.hpp"
#include "ccz/polynomial.hpp"

namespace ccz {

/// a/b with |a|, |b| <= sqrt(p^prec / 2) and a/b == q mod p^prec, where prec
/// is the absolute precision of q (capped by max_digits if positive).
std::optional<mpq_class> rational_reconstruction(const PadicNumber& q, int max_digits = 0);

/// LLL-reduces the rows of B in place (delta = 3/4).
void lll_reduce(std::vector<std::vector<mpz_class>>& B);

/// Primitive integer polynomial a0 + a1 X + a2 X^2 (a2 > 0) of small height
/// vanishing at q modulo p^prec, or nullopt if none is found that is
/// irreducible over Q.
std::optional<QPoly> quadratic_dependency(const PadicNumber& q);

/// r + s*sqrt(d) in Q(sqrt(d)), d a non-square integer.
struct QuadraticNumber {
  mpq_class r;
  mpq_class s;
  mpz_class d;

  QuadraticNumber operator+(const QuadraticNumber& o) const;
  QuadraticNumber operator*(const QuadraticNumber& o) const;
  bool operator==(const QuadraticNumber& o) const { return r == o.r && s == o.s && d == o.d; }
  /// Value in Q_p given a square root of d in Q_p.
  PadicNumber to_padic(const PadicNumber& sqrt_d, int n) const;
};

/// Squarefree part of a nonzero integer (sign kept).
mpz_class squarefree_part(mpz_class n);

/// Monic-free minimal polynomial of an element of Q or a quadratic field, as
/// a primitive integer polynomial with positive leading coefficient.
QPoly minimal_polynomial(const QuadraticNumber& a);

/// An algebraic point of degree <= 2 on y^2 = G(x), recognized from p-adic
/// coordinates and verified exactly.
struct AlgebraicPoint {
  int degree = 1;                       // 1 rational, 2 quadratic
  mpz_class field;                      // squarefree d for Q(sqrt(d)); 1 if rational
  QuadraticNumber x;
  QuadraticNumber y;
  QPoly x_minpoly;
  QPoly y_minpoly;
};

/// Attempts to recognize (x, y) on y^2 = G(x) as a point over Q or a
/// quadratic field. The candidate is accepted only if it satisfies the curve
/// equation exactly and matches the p-adic coordinates to their precision.
std::optional<AlgebraicPoint> recognize_point(const QPoly& G, const PadicNumber& x,
                                              const PadicNumber& y);

}  // namespace ccz
