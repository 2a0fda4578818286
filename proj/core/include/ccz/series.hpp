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

#include <string>
#include <vector>

#include "ccz/padic.hpp"

namespace ccz {

/// Lower bound on the valuations of the coefficients that a truncation has
/// dropped: ord_p(b_i) >= min_valuation - (integrated ? ord_p(i) : 0) for all
/// i >= t_precision.
struct TailBound {
  int min_valuation = 0;
  bool integrated = false;

  /// Tail of an integral series (all coefficients in Z_p).
  static TailBound integral() { return {0, false}; }
  /// Tail of the formal antiderivative of an integral series.
  static TailBound antiderivative() { return {0, true}; }
  /// The truncation is exact (a polynomial): the tail is identically zero.
  static TailBound none() { return {kExactPrecision, false}; }
};

/// A power series sum_{i < M} c_i t^i + O(t^M) with p-adic coefficients.
class PadicPowerSeries {
 public:
  PadicPowerSeries() = default;
  /// Coefficients beyond the supplied list (up to t_precision) are exact 0.
  PadicPowerSeries(Prime p, std::vector<PadicNumber> coefficients,
                   int t_precision);

  static PadicPowerSeries zero(Prime p, int t_precision);
  static PadicPowerSeries constant(const PadicNumber& c, int t_precision);
  /// The series t (exact).
  static PadicPowerSeries variable(Prime p, int t_precision);

  Prime prime() const { return p_; }
  int t_precision() const { return static_cast<int>(c_.size()); }
  const std::vector<PadicNumber>& coefficients() const { return c_; }
  const PadicNumber& operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }

  /// Minimum coefficient valuation (kExactPrecision for the zero series).
  int min_valuation() const;
  /// Smallest min absolute precision among coefficients.
  int min_absolute_precision() const;
  bool is_integral() const { return min_valuation() >= 0; }
  /// Index of the first coefficient that is a unit; t_precision() if none.
  /// Requires an integral series.
  int order_mod_p() const;

  PadicPowerSeries truncated(int t_precision) const;
  PadicPowerSeries with_absolute_precision(int n) const;

  friend PadicPowerSeries operator+(const PadicPowerSeries& a,
                                    const PadicPowerSeries& b);
  friend PadicPowerSeries operator-(const PadicPowerSeries& a,
                                    const PadicPowerSeries& b);
  friend PadicPowerSeries operator*(const PadicPowerSeries& a,
                                    const PadicPowerSeries& b);
  PadicPowerSeries operator-() const;
  PadicPowerSeries operator*(const PadicNumber& c) const;

  /// a(b(t)); b must have zero constant term.
  PadicPowerSeries compose(const PadicPowerSeries& b) const;
  /// Multiplicative inverse; the constant term must be a unit.
  PadicPowerSeries inverse() const;
  /// t-derivative, losing one term of t-precision.
  PadicPowerSeries derivative() const;
  /// Antiderivative with zero constant term, gaining one term of t-precision.
  /// Dividing by i+1 lowers the absolute precision of that coefficient by
  /// ord_p(i+1).
  PadicPowerSeries integral() const;
  /// c_i -> c_i * p^i, i.e. s(p t).
  PadicPowerSeries scaled_by_p() const;
  /// Multiplies by t^k (k >= 0), keeping t-precision + k.
  PadicPowerSeries shifted(int k) const;

  /// Value at t0 (valuation >= 1), with precision capped by the tail bound.
  PadicNumber evaluate_in_disk(const PadicNumber& t0,
                               TailBound tail = TailBound::integral()) const;
  /// Horner evaluation of the truncation only (polynomial view).
  PadicNumber evaluate_polynomial(const PadicNumber& t0) const;

  /// "(c0) + (c1)*t + ... + O(t^M)" with p-adic digit coefficients.
  std::string to_string() const;

 private:
  Prime p_ = 0;
  std::vector<PadicNumber> c_;
};

/// The square root Y of s with Y(0) = branch, via Newton's iteration
/// Y <- (Y + s/Y)/2. s(0) must be a unit and branch^2 == s(0).
PadicPowerSeries sqrt_series(const PadicPowerSeries& s, const PadicNumber& branch);

/// Smallest possible valuation of a dropped tail term b_i t0^i, i >= M, where
/// ord_p(t0) = s >= 1.
int tail_valuation_bound(Prime p, int t_precision, int t0_valuation,
                         TailBound tail);

}  // namespace ccz
