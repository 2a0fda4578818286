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

#include <array>
#include <cstdint>
#include <vector>

#include "ccz/curve.hpp"
#include "ccz/local.hpp"
#include "ccz/padic.hpp"

namespace ccz {

using Matrix6 = std::array<std::array<PadicNumber, kBasisSize>, kBasisSize>;

/// The exact part of the Frobenius pullback of one basis form:
///   sum_m levels[m](x) * y^-(2m+1)  +  positive(x) * y.
/// levels[m] has degree < 7.
struct FrobeniusPrimitive {
  std::vector<std::vector<PadicNumber>> levels;
  std::vector<PadicNumber> positive;

  /// Value at an affine point with unit y.
  PadicNumber evaluate(const PadicNumber& x, const PadicNumber& y) const;
};

/// phi^* w_i = d(primitive_i) + sum_j matrix[i][j] w_j, for w_i = x^i dx/2y.
struct FrobeniusData {
  Prime p = 0;
  Matrix6 matrix;
  std::array<FrobeniusPrimitive, kBasisSize> primitives;
  /// Absolute precision to which matrix and primitives are certified.
  int working_precision = 0;
  /// Guard digits of the attempt that succeeded.
  int guard = 0;
  /// Series terms kept in the expansion of phi(1/y).
  int series_terms = 0;
};

/// Frobenius structure to absolute precision >= N (guard digits 4, 8, 16).
FrobeniusData frobenius_data(const HyperellipticCurve& curve, Prime p, int N);

/// Coefficients of L(T) = det(I - T*Frob) = 1 + a1 T + ... + a6 T^6.
struct ZetaNumerator {
  Prime p = 0;
  std::array<mpz_class, 7> coefficients;  // a0 = 1

  mpz_class jacobian_order() const;  // L(1)
  /// Trace of Frobenius, -a1.
  mpz_class trace() const { return -coefficients[1]; }
  std::int64_t curve_points() const;  // #C(F_p) = p + 1 + a1
  bool functional_equation_holds() const;
  /// Max | |alpha| - sqrt(p) | over the complex roots alpha of
  /// T^6 L(1/T), i.e. the eigenvalues of Frobenius (floating point).
  double weil_deviation() const;
};

ZetaNumerator zeta_numerator(const FrobeniusData& fd);
mpz_class jacobian_order(const FrobeniusData& fd);

/// Zeta numerator from exhaustive point counts over F_p, F_p^2, F_p^3.
ZetaNumerator brute_force_zeta(const HyperellipticCurve& curve, Prime p);

/// Number of points (including infinity) over F_{p^k} by exhaustive count.
std::int64_t count_points(const HyperellipticCurve& curve, Prime p, int k);

/// The image of a finite point with unit y under the lift of Frobenius
/// x -> x^p, y -> y^p (1 + (F(x^p) - F(x)^p)/y^(2p))^(1/2).
CurvePoint frobenius_image(const HyperellipticCurve& curve, const CurvePoint& P, Prime p,
                           int n);

}  // namespace ccz
