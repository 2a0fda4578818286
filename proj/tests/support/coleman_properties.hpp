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

// Property checks for Coleman integrals, shared by unit and acceptance tests.

#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "ccz/coleman.hpp"
#include "ccz/local.hpp"
#include "test_support.hpp"

namespace ccz::testing {

struct PropertyTally {
  int checks = 0;
  int failures = 0;
  int min_precision = kExactPrecision;  // least precision of any compared value
  std::vector<std::string> notes;

  void expect_zero(const PadicNumber& d, const std::string& what) {
    ++checks;
    min_precision = std::min(min_precision, d.absolute_precision());
    if (!d.is_zero() || d.absolute_precision() < 3) {
      ++failures;
      if (notes.size() < 8) notes.push_back(what + ": " + d.to_digits());
    }
  }
  bool ok() const { return failures == 0 && checks > 0; }
};

/// A random point of C(Q_p): mostly generic, sometimes deep in a Weierstrass
/// disk or in the disk at infinity.
template <class Rng>
CurvePoint random_point(const HyperellipticCurve& C, Prime p, int n, Rng& rng) {
  std::uniform_int_distribution<int> kind(0, 9);
  std::uniform_int_distribution<long> unit(1, p - 1);
  const int k = kind(rng);
  if (k == 0) {
    const auto W = weierstrass_points_qp(C, p, n);
    if (!W.empty()) {
      const auto& w = W[static_cast<std::size_t>(rng() % W.size())];
      const LocalExpansion L = local_coordinate(C, w.point, p, 3 * n, n);
      return point_at(L, PadicNumber::from_integer(p, unit(rng) * p, n));
    }
  } else if (k == 1) {
    const LocalExpansion L = local_coordinate(C, CurvePoint::at_infinity(), p, 3 * n, n);
    return point_at(L, PadicNumber::from_integer(p, unit(rng) * p, n));
  }
  for (;;) {
    if (auto P = random_generic_point(C, p, n, rng)) return *P;
  }
}

inline void check_triple(const IntegrationContext& ctx, const CurvePoint& P, const CurvePoint& Q,
                         const CurvePoint& R, std::mt19937_64& rng, PropertyTally& t) {
  const Prime p = ctx.prime();
  const auto pq = coleman_integrals(ctx, P, Q);
  const auto qr = coleman_integrals(ctx, Q, R);
  const auto pr = coleman_integrals(ctx, P, R);
  const auto ipq = coleman_integrals(ctx, involution(P), involution(Q));
  for (std::size_t i = 0; i < kGenus; ++i) {
    t.expect_zero(pq[i] + qr[i] - pr[i], "additivity w" + std::to_string(i));
    t.expect_zero(ipq[i] + pq[i], "involution w" + std::to_string(i));
  }
  std::uniform_int_distribution<long> c(-20, 20);
  DifferentialForm form;
  for (auto& a : form.c) a = PadicNumber::exact(p, c(rng));
  if (form.c[0].is_zero() && form.c[1].is_zero() && form.c[2].is_zero()) form.c[0] = PadicNumber::exact(p, 1);
  t.expect_zero(coleman_integral(ctx, form, P, Q) - pair(form, pq), "linearity");
}

inline void check_weierstrass(const IntegrationContext& ctx, PropertyTally& t) {
  const Prime p = ctx.prime();
  std::vector<CurvePoint> W{CurvePoint::at_infinity()};
  for (const auto& w : weierstrass_points_qp(ctx.curve(), p, ctx.precision())) W.push_back(w.point);
  for (std::size_t a = 0; a < W.size(); ++a) {
    for (std::size_t b = a + 1; b < W.size(); ++b) {
      const auto I = coleman_integrals(ctx, W[a], W[b]);
      for (std::size_t i = 0; i < kGenus; ++i) t.expect_zero(I[i], "weierstrass w" + std::to_string(i));
    }
  }
}

/// d(x) integrates to the change in x, through the tiny-integral machinery.
/// x has a pole in the disk at infinity, which is skipped.
inline void check_fundamental_theorem(const HyperellipticCurve& C, const CurvePoint& P, Prime p, int n,
                                      std::mt19937_64& rng, PropertyTally& t) {
  if (reduce(P, p).infinity) return;
  const LocalExpansion L = local_coordinate(C, P, p, tiny_t_precision(p, n, 1) + 2, n);
  std::uniform_int_distribution<long> d(1, p * p - 1);
  const PadicNumber s = PadicNumber::from_integer(p, d(rng) * p, n);
  const PadicNumber lhs = L.x.derivative().integral().evaluate_in_disk(s, TailBound::antiderivative());
  t.expect_zero(lhs - (point_at(L, s).x - P.x), "d(x)");
}

inline PropertyTally coleman_property_suite(const HyperellipticCurve& C, Prime p, int n, int pairs,
                                            std::uint64_t seed) {
  PropertyTally t;
  const IntegrationContext ctx(C, p, n);
  std::mt19937_64 rng(seed);
  for (int i = 0; i < pairs; ++i) {
    const CurvePoint P = random_point(C, p, n, rng);
    const CurvePoint Q = random_point(C, p, n, rng);
    const CurvePoint R = random_point(C, p, n, rng);
    check_triple(ctx, P, Q, R, rng, t);
    check_fundamental_theorem(C, P, p, n, rng, t);
  }
  check_weierstrass(ctx, t);
  return t;
}

}  // namespace ccz::testing
