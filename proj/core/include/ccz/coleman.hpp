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
#include <map>
#include <memory>
#include <mutex>

#include "ccz/curve.hpp"
#include "ccz/frobenius.hpp"
#include "ccz/local.hpp"

namespace ccz {

using BasisVector = std::array<PadicNumber, kBasisSize>;
using HolomorphicVector = std::array<PadicNumber, kGenus>;

/// Everything needed to integrate on one curve at one prime. Frobenius data is
/// computed on construction; Teichmuller points and their primitive values
/// are memoized per disk behind a mutex.
class IntegrationContext {
 public:
  /// n is the working precision of points and results.
  IntegrationContext(const HyperellipticCurve& curve, Prime p, int n);
  IntegrationContext(const HyperellipticCurve& curve, Prime p, int n, FrobeniusData fd);

  const HyperellipticCurve& curve() const { return curve_; }
  Prime prime() const { return p_; }
  int precision() const { return n_; }
  const FrobeniusData& frobenius() const { return fd_; }

  /// Clears the memo table (results must not change).
  void clear_cache() const;
  std::size_t cache_size() const;

  struct Anchor {
    CurvePoint point;
    BasisVector primitive;  // primitive_i(point)
  };
  Anchor anchor(const FpPoint& disk) const;

 private:
  HyperellipticCurve curve_;
  Prime p_;
  int n_;
  FrobeniusData fd_;
  mutable std::mutex mu_;
  mutable std::map<FpPoint, Anchor> cache_;
};

/// The Frobenius-fixed point of a generic disk.
CurvePoint teichmuller_point(const IntegrationContext& ctx, const FpPoint& disk);

/// Integrals of all six basis forms between two Frobenius-fixed points.
BasisVector integrals_between_teichmullers(const IntegrationContext& ctx, const CurvePoint& P,
                                           const CurvePoint& Q);

/// Integrals of w0, w1, w2 from P to Q.
HolomorphicVector coleman_integrals(const IntegrationContext& ctx, const CurvePoint& P,
                                    const CurvePoint& Q);
/// Integrals of w0, w1, w2 from infinity to Q.
HolomorphicVector integrals_from_infinity(const IntegrationContext& ctx, const CurvePoint& Q);

PadicNumber coleman_integral(const IntegrationContext& ctx, const DifferentialForm& form,
                             const CurvePoint& P, const CurvePoint& Q);
PadicNumber pair(const DifferentialForm& form, const HolomorphicVector& integrals);

/// Solves A v = b by elimination with valuation pivoting. Throws DomainError
/// if A is singular at the available precision.
BasisVector solve_linear(Matrix6 A, BasisVector b);

}  // namespace ccz
