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

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ccz/padic.hpp"
#include "ccz/polynomial.hpp"

namespace ccz {

/// Change of variables from the monic model to the input model:
/// x_input = u * x, y_input = v * y.
struct Scaling {
  mpq_class u = 1;
  mpq_class v = 1;
};

/// An exact point on a model, or the point at infinity.
struct RationalPoint {
  bool infinity = false;
  mpq_class x = 0;
  mpq_class y = 0;

  static RationalPoint at_infinity() { return {true, 0, 0}; }
  static RationalPoint affine(mpq_class x, mpq_class y) {
    return {false, std::move(x), std::move(y)};
  }
  friend bool operator==(const RationalPoint& a, const RationalPoint& b) {
    return a.infinity == b.infinity && (a.infinity || (a.x == b.x && a.y == b.y));
  }
  std::string to_string() const;
};
bool operator<(const RationalPoint& a, const RationalPoint& b);

/// A point of C(Q_p).
struct CurvePoint {
  bool infinity = false;
  PadicNumber x;
  PadicNumber y;

  static CurvePoint at_infinity() { return {true, {}, {}}; }
  static CurvePoint affine(PadicNumber x, PadicNumber y) {
    return {false, std::move(x), std::move(y)};
  }
  /// min of the coordinate absolute precisions (kExactPrecision at infinity).
  int precision() const;
};

/// A point of the reduction over F_p.
struct FpPoint {
  bool infinity = false;
  std::int64_t x = 0;
  std::int64_t y = 0;

  static FpPoint at_infinity() { return {true, 0, 0}; }
  bool is_weierstrass() const { return infinity || y == 0; }
  auto operator<=>(const FpPoint& o) const {
    if (infinity != o.infinity) return infinity ? std::strong_ordering::less : std::strong_ordering::greater;
    if (auto c = x <=> o.x; c != 0) return c;
    return y <=> o.y;
  }
  bool operator==(const FpPoint& o) const = default;
  std::string to_string() const;
};

/// y^2 = F(x) with F monic of degree 7, remembering the input model.
class HyperellipticCurve {
 public:
  /// Builds the monic model of y^2 = G(x), deg G = 7. Without an explicit
  /// scaling, (x, y) -> (c x, c^3 y) with c the leading coefficient of G.
  /// An explicit scaling must satisfy g7 * u^7 = v^2.
  static HyperellipticCurve from_model(const QPoly& g,
                                       const std::optional<Scaling>& scaling = std::nullopt);

  const QPoly& F() const { return f_; }
  const QPoly& original() const { return g_; }
  const Scaling& scaling() const { return s_; }
  const mpq_class& discriminant() const { return disc_; }

  /// True iff p is odd, F is p-integral, disc(F) is a p-adic unit and p does
  /// not divide the leading coefficient of the input model.
  bool has_good_reduction(Prime p) const;
  /// Throws BadReductionError unless has_good_reduction(p).
  void require_good_reduction(Prime p) const;

  bool contains(const RationalPoint& pt) const;
  RationalPoint to_original(const RationalPoint& pt) const;
  RationalPoint from_original(const RationalPoint& pt) const;
  bool original_contains(const RationalPoint& pt) const;

  /// F mod p, constant first, length 8.
  std::vector<std::int64_t> F_mod_p(Prime p) const;
  /// F with p-adic coefficients of absolute precision n.
  std::vector<PadicNumber> F_padic(Prime p, int n) const;

 private:
  QPoly g_;
  QPoly f_;
  Scaling s_;
  mpq_class disc_;
};

/// Smallest prime >= lower_bound of good reduction.
Prime choose_prime(const HyperellipticCurve& curve, Prime lower_bound = 7);

/// Infinity first, then affine points in lexicographic order.
std::vector<FpPoint> fp_points(const HyperellipticCurve& curve, Prime p);

FpPoint reduce(const CurvePoint& pt, Prime p);
FpPoint reduce(const RationalPoint& pt, Prime p);
CurvePoint involution(const CurvePoint& pt);
RationalPoint involution(const RationalPoint& pt);
FpPoint involution(const FpPoint& pt, Prime p);
bool is_weierstrass(const CurvePoint& pt);
CurvePoint to_padic(const RationalPoint& pt, Prime p, int n);

struct WeierstrassPoint {
  CurvePoint point;
  bool rational = false;
  std::optional<mpq_class> exact_x;
};
/// Finite Weierstrass points of C(Q_p): Hensel lifts of the roots of F mod p.
std::vector<WeierstrassPoint> weierstrass_points_qp(const HyperellipticCurve& curve,
                                                    Prime p, int n);

/// Rational points whose input-model x-coordinate has naive height <= H,
/// plus infinity, returned in monic-model coordinates and sorted.
std::vector<RationalPoint> search_rational_points(const HyperellipticCurve& curve,
                                                  std::int64_t height_bound);

}  // namespace ccz
