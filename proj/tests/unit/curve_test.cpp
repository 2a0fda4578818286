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

#include <numeric>
#include <set>

#include <gtest/gtest.h>

#include "ccz/frobenius.hpp"
#include "test_support.hpp"

namespace ccz {
namespace {

using testing::curve_of;
using testing::example1;
using testing::example2;
using testing::example3;

TEST(Curve, MonicModelIsScaledInput) {
  // G(u x) = v^2 F(x) identically.
  for (const auto& e : {example1(), example2(), example3()}) {
    const auto C = curve_of(e);
    ASSERT_EQ(qpoly::degree(C.F()), 7);
    EXPECT_EQ(C.F()[7], 1);
    const auto& s = C.scaling();
    for (long x = -3; x <= 3; ++x) {
      EXPECT_EQ(qpoly::eval(e.g, s.u * x), s.v * s.v * qpoly::eval(C.F(), x));
    }
  }
}

TEST(Curve, ExplicitScalingMustBeConsistent) {
  const auto e = example2();
  EXPECT_THROW(HyperellipticCurve::from_model(e.g, Scaling{-4, 255}), BadInputError);
  EXPECT_THROW(HyperellipticCurve::from_model({1, 2, 3}), BadInputError);
}

TEST(Curve, KnownPointsMapBetweenModels) {
  for (const auto& e : {example1(), example2(), example3()}) {
    const auto C = curve_of(e);
    for (const auto& P : e.known) {
      EXPECT_TRUE(C.original_contains(P));
      const auto m = C.from_original(P);
      EXPECT_TRUE(C.contains(m));
      EXPECT_EQ(C.to_original(m), P);
    }
  }
}

TEST(Curve, GoodReductionAndPrimeChoice) {
  const auto C3 = curve_of(example3());
  EXPECT_FALSE(C3.has_good_reduction(5));
  EXPECT_FALSE(C3.has_good_reduction(7));
  EXPECT_TRUE(C3.has_good_reduction(11));
  EXPECT_THROW(C3.require_good_reduction(7), BadReductionError);
  EXPECT_EQ(choose_prime(C3), 11);
  EXPECT_EQ(choose_prime(curve_of(example1())), 7);
  EXPECT_EQ(choose_prime(curve_of(example2())), 7);
}

TEST(Curve, FpPointsMatchDirectCount) {
  for (const auto& e : {example1(), example2(), example3()}) {
    const auto C = curve_of(e);
    const auto F = C.F_mod_p(e.p);
    std::int64_t direct = 1;
    for (std::int64_t x = 0; x < e.p; ++x) {
      std::int64_t fx = 0;
      for (auto it = F.rbegin(); it != F.rend(); ++it) fx = (fx * x + *it) % e.p;
      for (std::int64_t y = 0; y < e.p; ++y) direct += (y * y - fx) % e.p == 0;
    }
    const auto pts = fp_points(C, e.p);
    EXPECT_EQ(static_cast<std::int64_t>(pts.size()), direct);
    EXPECT_EQ(count_points(C, e.p, 1), direct);
    EXPECT_TRUE(pts.front().infinity);
    EXPECT_TRUE(std::is_sorted(pts.begin(), pts.end()));
    std::size_t generic = 0;
    for (const auto& q : pts) generic += !q.is_weierstrass();
    EXPECT_EQ(generic % 2, 0u);
  }
}

TEST(Curve, WeierstrassPointsAreRootsOfF) {
  const auto e = example1();
  const auto C = curve_of(e);
  const auto W = weierstrass_points_qp(C, e.p, 12);
  const auto Fp = C.F_mod_p(e.p);
  std::size_t roots_mod_p = 0;
  for (std::int64_t x = 0; x < e.p; ++x) {
    std::int64_t v = 0;
    for (auto it = Fp.rbegin(); it != Fp.rend(); ++it) v = (v * x + *it) % e.p;
    roots_mod_p += v == 0;
  }
  ASSERT_EQ(W.size(), roots_mod_p);
  EXPECT_EQ(W.size(), 3u);
  for (const auto& w : W) {
    EXPECT_TRUE(qpoly::eval(C.F_padic(e.p, 12), w.point.x).is_zero());
    EXPECT_TRUE(w.point.y.is_zero());
  }
}

TEST(Curve, PointSearchAgreesWithNaiveSearch) {
  const auto e = example1();
  const auto C = curve_of(e);
  const int H = 12;
  std::set<RationalPoint> naive = {RationalPoint::at_infinity()};
  for (long b = 1; b <= H; ++b) {
    for (long a = -H; a <= H; ++a) {
      if (std::gcd(a, b) != 1) continue;
      const mpq_class x(a, b);
      mpq_class y;
      if (is_rational_square(qpoly::eval(e.g, x), &y)) {
        naive.insert(RationalPoint::affine(x, y));
        naive.insert(RationalPoint::affine(x, -y));
      }
    }
  }
  std::set<RationalPoint> found;
  for (const auto& q : search_rational_points(C, H)) found.insert(C.to_original(q));
  EXPECT_EQ(found, naive);
  for (const auto& k : e.known) EXPECT_TRUE(found.count(k)) << k.to_string();
}

TEST(Curve, ReductionAndInvolution) {
  const auto e = example2();
  const auto C = curve_of(e);
  const auto m = C.from_original(testing::pt(0, 1));
  const FpPoint d = reduce(m, 7);
  EXPECT_EQ(reduce(involution(m), 7), involution(d, 7));
  EXPECT_EQ(reduce(RationalPoint::at_infinity(), 7), FpPoint::at_infinity());
}

}  // namespace
}  // namespace ccz
