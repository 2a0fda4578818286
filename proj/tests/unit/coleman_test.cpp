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

#include <gtest/gtest.h>

#include "ccz/coleman.hpp"
#include "coleman_properties.hpp"
#include "test_support.hpp"

namespace ccz {
namespace {

using testing::curve_of;

TEST(Coleman, PropertySuiteExample1) {
  const auto e = testing::example1();
  const auto t = testing::coleman_property_suite(curve_of(e), e.p, 12, 6, 11);
  for (const auto& note : t.notes) ADD_FAILURE() << note;
  EXPECT_TRUE(t.ok());
  EXPECT_GE(t.min_precision, 3);
}

TEST(Coleman, PropertySuiteExample3) {
  const auto e = testing::example3();
  const auto t = testing::coleman_property_suite(curve_of(e), e.p, 10, 4, 12);
  for (const auto& note : t.notes) ADD_FAILURE() << note;
  EXPECT_TRUE(t.ok());
}

TEST(Coleman, IntegralsOfKnownPointsAnnihilatedByRankOneRelation) {
  // With rank 1, the integral vectors of P0 and of any other rational point
  // are proportional: their 2x2 minors vanish.
  const auto e = testing::example2();
  const auto C = curve_of(e);
  const int n = 12;
  const IntegrationContext ctx(C, e.p, n);
  const auto a = integrals_from_infinity(ctx, to_padic(C.from_original(testing::pt(0, 1)), e.p, n));
  const auto b = integrals_from_infinity(ctx, to_padic(C.from_original(testing::pt(1, 1)), e.p, n));
  EXPECT_TRUE((a[0] * b[1] - a[1] * b[0]).is_zero());
  EXPECT_TRUE((a[0] * b[2] - a[2] * b[0]).is_zero());
  EXPECT_FALSE(a[0].is_zero() && a[1].is_zero() && a[2].is_zero());
}

TEST(Coleman, TeichmullerPointIsFrobeniusFixed) {
  const auto e = testing::example1();
  const auto C = curve_of(e);
  const IntegrationContext ctx(C, e.p, 10);
  const CurvePoint T = teichmuller_point(ctx, FpPoint{false, 3, 1});
  EXPECT_TRUE((T.x.pow(static_cast<std::uint64_t>(e.p)) - T.x).is_zero());
  EXPECT_EQ(reduce(T, e.p), (FpPoint{false, 3, 1}));
}

TEST(Coleman, SameDiskUsesTinyIntegral) {
  const auto e = testing::example1();
  const auto C = curve_of(e);
  const int n = 10;
  const IntegrationContext ctx(C, e.p, n);
  const CurvePoint P = to_padic(C.from_original(testing::pt(1, 5)), e.p, n);
  const LocalExpansion L = local_coordinate(C, P, e.p, 40, n);
  const CurvePoint Q = point_at(L, PadicNumber::from_integer(e.p, 21, n));
  const auto global = coleman_integrals(ctx, P, Q);
  const auto tiny = tiny_integrals(C, P, Q, e.p, n);
  for (std::size_t i = 0; i < kGenus; ++i) EXPECT_TRUE((global[i] - tiny[i]).is_zero());
  // Same answer through infinity.
  const auto via = integrals_from_infinity(ctx, Q);
  const auto base = integrals_from_infinity(ctx, P);
  for (std::size_t i = 0; i < kGenus; ++i) EXPECT_TRUE((via[i] - base[i] - tiny[i]).is_zero());
}

TEST(Coleman, CacheDoesNotChangeResults) {
  const auto e = testing::example3();
  const auto C = curve_of(e);
  const IntegrationContext ctx(C, e.p, 8);
  const CurvePoint P = to_padic(C.from_original(testing::pt(1, 2)), e.p, 8);
  const auto first = integrals_from_infinity(ctx, P);
  EXPECT_GT(ctx.cache_size(), 0u);
  ctx.clear_cache();
  const auto second = integrals_from_infinity(ctx, P);
  for (std::size_t i = 0; i < kGenus; ++i) EXPECT_EQ(first[i], second[i]);
}

TEST(Coleman, SolveLinearAgainstIdentity) {
  Matrix6 A;
  BasisVector b;
  for (std::size_t i = 0; i < kBasisSize; ++i) {
    for (std::size_t j = 0; j < kBasisSize; ++j) {
      A[i][j] = PadicNumber::from_integer(7, i == j ? 1 + 7 * static_cast<long>(i) : 7 * static_cast<long>(j + 1), 10);
    }
    b[i] = PadicNumber::from_integer(7, static_cast<long>(i) + 2, 10);
  }
  const BasisVector x = solve_linear(A, b);
  for (std::size_t i = 0; i < kBasisSize; ++i) {
    PadicNumber acc = PadicNumber::zero(7);
    for (std::size_t j = 0; j < kBasisSize; ++j) acc += A[i][j] * x[j];
    EXPECT_TRUE((acc - b[i]).is_zero());
  }
}

}  // namespace
}  // namespace ccz
