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

#include "ccz/coleman.hpp"

#include <utility>

namespace ccz {

namespace {

// Extra Frobenius digits over the working precision.
constexpr int kFrobeniusGuard = 4;

bool same_disk(const CurvePoint& a, const CurvePoint& b, Prime p) {
  return reduce(a, p) == reduce(b, p);
}

HolomorphicVector holomorphic_part(const BasisVector& v) { return {v[0], v[1], v[2]}; }

HolomorphicVector zeros(Prime p) {
  return {PadicNumber::zero(p), PadicNumber::zero(p), PadicNumber::zero(p)};
}

HolomorphicVector difference(const HolomorphicVector& a, const HolomorphicVector& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}

}  // namespace

IntegrationContext::IntegrationContext(const HyperellipticCurve& curve, Prime p, int n)
    : IntegrationContext(curve, p, n, frobenius_data(curve, p, n + kFrobeniusGuard)) {}

IntegrationContext::IntegrationContext(const HyperellipticCurve& curve, Prime p, int n,
                                       FrobeniusData fd)
    : curve_(curve), p_(p), n_(n), fd_(std::move(fd)) {
  curve_.require_good_reduction(p);
  if (fd_.p != p) throw DomainError("IntegrationContext: Frobenius data for another prime");
}

void IntegrationContext::clear_cache() const {
  std::lock_guard<std::mutex> lock(mu_);
  cache_.clear();
}

std::size_t IntegrationContext::cache_size() const {
  std::lock_guard<std::mutex> lock(mu_);
  return cache_.size();
}

IntegrationContext::Anchor IntegrationContext::anchor(const FpPoint& disk) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find(disk);
    if (it != cache_.end()) return it->second;
  }
  if (disk.is_weierstrass()) {
    throw DomainError("teichmuller_point: disk " + disk.to_string() + " is not generic");
  }
  Anchor a;
  a.point = canonical_lift(curve_, disk, p_, n_);
  for (int i = 0; i < kBasisSize; ++i) {
    a.primitive[static_cast<std::size_t>(i)] =
        fd_.primitives[static_cast<std::size_t>(i)].evaluate(a.point.x, a.point.y);
  }
  std::lock_guard<std::mutex> lock(mu_);
  cache_.emplace(disk, a);
  return a;
}

CurvePoint teichmuller_point(const IntegrationContext& ctx, const FpPoint& disk) {
  return ctx.anchor(disk).point;
}

BasisVector solve_linear(Matrix6 A, BasisVector b) {
  constexpr int n = kBasisSize;
  for (int c = 0; c < n; ++c) {
    int best = -1;
    for (int r = c; r < n; ++r) {
      const PadicNumber& e = A[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
      if (e.is_zero()) continue;
      if (best < 0 || e.valuation() < A[static_cast<std::size_t>(best)][static_cast<std::size_t>(c)].valuation()) {
        best = r;
      }
    }
    if (best < 0) throw DomainError("solve_linear: singular matrix at available precision");
    std::swap(A[static_cast<std::size_t>(c)], A[static_cast<std::size_t>(best)]);
    std::swap(b[static_cast<std::size_t>(c)], b[static_cast<std::size_t>(best)]);
    const PadicNumber piv = A[static_cast<std::size_t>(c)][static_cast<std::size_t>(c)];
    for (int r = c + 1; r < n; ++r) {
      auto& row = A[static_cast<std::size_t>(r)];
      if (row[static_cast<std::size_t>(c)].is_zero()) {
        continue;
      }
      const PadicNumber f = row[static_cast<std::size_t>(c)] / piv;
      for (int k = c; k < n; ++k) {
        row[static_cast<std::size_t>(k)] -= f * A[static_cast<std::size_t>(c)][static_cast<std::size_t>(k)];
      }
      b[static_cast<std::size_t>(r)] -= f * b[static_cast<std::size_t>(c)];
    }
  }
  BasisVector x;
  for (int r = n - 1; r >= 0; --r) {
    PadicNumber acc = b[static_cast<std::size_t>(r)];
    for (int k = r + 1; k < n; ++k) {
      acc -= A[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)] * x[static_cast<std::size_t>(k)];
    }
    x[static_cast<std::size_t>(r)] = acc / A[static_cast<std::size_t>(r)][static_cast<std::size_t>(r)];
  }
  return x;
}

BasisVector integrals_between_teichmullers(const IntegrationContext& ctx, const CurvePoint& P,
                                           const CurvePoint& Q) {
  const Prime p = ctx.prime();
  const auto a = ctx.anchor(reduce(P, p));
  const auto b = ctx.anchor(reduce(Q, p));
  BasisVector rhs;
  for (int i = 0; i < kBasisSize; ++i) {
    rhs[static_cast<std::size_t>(i)] =
        b.primitive[static_cast<std::size_t>(i)] - a.primitive[static_cast<std::size_t>(i)];
  }
  Matrix6 A = ctx.frobenius().matrix;
  for (int i = 0; i < kBasisSize; ++i) {
    for (int j = 0; j < kBasisSize; ++j) {
      auto& e = A[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      e = -e;
      if (i == j) e += PadicNumber::exact(p, 1);
    }
  }
  BasisVector v = solve_linear(A, rhs);
  for (auto& x : v) x = x.with_absolute_precision(ctx.precision());
  return v;
}

namespace {

// Integrals between generic points of different disks, through the anchors.
HolomorphicVector generic_integrals(const IntegrationContext& ctx, const CurvePoint& P,
                                    const CurvePoint& Q) {
  const Prime p = ctx.prime();
  const int n = ctx.precision();
  const CurvePoint Pt = ctx.anchor(reduce(P, p)).point;
  const CurvePoint Qt = ctx.anchor(reduce(Q, p)).point;
  const auto head = tiny_integrals(ctx.curve(), P, Pt, p, n);
  const auto mid = integrals_between_teichmullers(ctx, Pt, Qt);
  const auto tail = tiny_integrals(ctx.curve(), Qt, Q, p, n);
  HolomorphicVector out;
  for (int i = 0; i < kGenus; ++i) {
    const auto k = static_cast<std::size_t>(i);
    out[k] = head[k] + mid[k] + tail[k];
  }
  return out;
}

}  // namespace

HolomorphicVector integrals_from_infinity(const IntegrationContext& ctx, const CurvePoint& Q) {
  const Prime p = ctx.prime();
  const int n = ctx.precision();
  if (Q.infinity) return zeros(p);
  const FpPoint disk = reduce(Q, p);
  if (disk.infinity) {
    return holomorphic_part(tiny_integrals(ctx.curve(), CurvePoint::at_infinity(), Q, p, n));
  }
  if (disk.y == 0) {
    const CurvePoint W = canonical_lift(ctx.curve(), disk, p, n);
    return holomorphic_part(tiny_integrals(ctx.curve(), W, Q, p, n));
  }
  // The involution negates holomorphic forms, so the integral from iota(Q)
  // to Q is twice the integral from infinity.
  const auto twice = generic_integrals(ctx, involution(Q), Q);
  HolomorphicVector out;
  for (int i = 0; i < kGenus; ++i) {
    out[static_cast<std::size_t>(i)] = twice[static_cast<std::size_t>(i)].divided_by(2);
  }
  return out;
}

HolomorphicVector coleman_integrals(const IntegrationContext& ctx, const CurvePoint& P,
                                    const CurvePoint& Q) {
  const Prime p = ctx.prime();
  const int n = ctx.precision();
  if (same_disk(P, Q, p)) {
    return holomorphic_part(tiny_integrals(ctx.curve(), P, Q, p, n));
  }
  const FpPoint dp = reduce(P, p);
  const FpPoint dq = reduce(Q, p);
  if (!dp.is_weierstrass() && !dq.is_weierstrass()) return generic_integrals(ctx, P, Q);
  return difference(integrals_from_infinity(ctx, Q), integrals_from_infinity(ctx, P));
}

PadicNumber pair(const DifferentialForm& form, const HolomorphicVector& integrals) {
  PadicNumber acc = PadicNumber::zero(form.prime());
  for (int i = 0; i < kGenus; ++i) {
    acc += form.c[static_cast<std::size_t>(i)] * integrals[static_cast<std::size_t>(i)];
  }
  return acc;
}

PadicNumber coleman_integral(const IntegrationContext& ctx, const DifferentialForm& form,
                             const CurvePoint& P, const CurvePoint& Q) {
  const PadicNumber v = pair(form, coleman_integrals(ctx, P, Q));
  if (v.absolute_precision() < 1) {
    throw PrecisionError("coleman_integral: no digits left after precision loss");
  }
  return v;
}

}  // namespace ccz
