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
#include <string>
#include <vector>

#include "ccz/curve.hpp"
#include "ccz/series.hpp"

namespace ccz {

enum class DiskKind { kGeneric, kFiniteWeierstrass, kInfinity };

DiskKind disk_kind(const FpPoint& pt);
const char* to_string(DiskKind kind);

/// Number of basis forms x^i dx/2y carried by expansions (i = 0..5); the
/// first three are holomorphic.
inline constexpr int kBasisSize = 6;
inline constexpr int kGenus = 3;

/// c0*w0 + c1*w1 + c2*w2 with w_i = x^i dx / 2y.
struct DifferentialForm {
  std::array<PadicNumber, 3> c;

  static DifferentialForm basis(Prime p, int i);
  Prime prime() const { return c[0].prime(); }
  /// Minimum coefficient valuation.
  int min_valuation() const;
  bool is_unit_normalized() const { return min_valuation() == 0; }
  DifferentialForm with_absolute_precision(int n) const;
  std::string to_string() const;
};

/// Parametrization of a residue disk around `center` by a local coordinate t.
///
/// Generic: x = x(P) + t, y = sqrt(F(x)) on the branch of y(P).
/// Finite Weierstrass disk: y = y(P) + t, x from F(x) = y^2.
/// Infinity (center must be infinity): t = x^3/y, x = z(t^2)/t^2 and
/// y = z(t^2)^3/t^7 where z is a unit power series in s = t^2.
struct LocalExpansion {
  CurvePoint center;
  DiskKind kind = DiskKind::kGeneric;
  Prime p = 0;
  int t_precision = 0;
  int p_precision = 0;
  PadicPowerSeries x;  // finite cases only
  PadicPowerSeries y;  // finite cases only
  PadicPowerSeries z;  // infinity only, as a series in t (even)
  /// w_i(t) with x^i dx/2y = w_i(t) dt; entries i >= 3 are left empty at
  /// infinity, where those forms have poles.
  std::array<PadicPowerSeries, kBasisSize> omega;
};

/// Expansion around a point of C(Q_p). The disk type is read off from the
/// reduction of the center. M is the t-adic precision of omega, n the p-adic
/// working precision.
LocalExpansion local_coordinate(const HyperellipticCurve& curve,
                                const CurvePoint& center, Prime p, int M, int n);

/// The expansion w(t) of a holomorphic form.
PadicPowerSeries expand_differential(const DifferentialForm& form,
                                     const LocalExpansion& exp);

/// Local coordinate value of a point in the disk of exp.center.
PadicNumber parameter_of(const LocalExpansion& exp, const CurvePoint& q);
/// The point with local coordinate t (valuation >= 1).
CurvePoint point_at(const LocalExpansion& exp, const PadicNumber& t);

/// t-adic precision M that makes the antiderivative tail at a parameter of
/// valuation s correct to p^n.
int tiny_t_precision(Prime p, int n, int s);

/// Integrals of all basis forms from P to Q in one residue disk. Forms with
/// poles in the disk at infinity are returned as zero with zero precision.
std::array<PadicNumber, kBasisSize> tiny_integrals(const HyperellipticCurve& curve,
                                                   const CurvePoint& P,
                                                   const CurvePoint& Q, Prime p, int n);
PadicNumber tiny_integral(const HyperellipticCurve& curve, const DifferentialForm& form,
                          const CurvePoint& P, const CurvePoint& Q, Prime p, int n);

/// Order of vanishing at the disk's point of the mod-p reductions of alpha
/// and beta, {m_alpha, m_beta}; the disk order is their minimum. Orders up
/// to 2g - 2 are exact.
std::array<int, 2> form_orders_mod_p(const HyperellipticCurve& curve,
                                     const DifferentialForm& alpha,
                                     const DifferentialForm& beta, const FpPoint& disk,
                                     Prime p);
/// The minimum of the two orders; throws DomainError above 2, which only
/// happens when alpha and beta are dependent mod p.
int disk_vanishing_order(const HyperellipticCurve& curve, const DifferentialForm& alpha,
                         const DifferentialForm& beta, const FpPoint& disk, Prime p);

/// A lift of an F_p-point to C(Q_p): infinity, the Hensel Weierstrass root,
/// or the Teichmuller-x point with y on the branch of the residue.
CurvePoint canonical_lift(const HyperellipticCurve& curve, const FpPoint& disk, Prime p,
                          int n);

}  // namespace ccz
