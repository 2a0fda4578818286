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

#include <random>

#include <gtest/gtest.h>

#include "ccz/frobenius.hpp"
#include "ccz/jacobian.hpp"
#include "test_support.hpp"

namespace ccz {
namespace {

using testing::curve_of;

TEST(Frobenius, ZetaMatchesPointCountsOnExamples) {
  for (const auto& e : {testing::example1(), testing::example2(), testing::example3()}) {
    const auto C = curve_of(e);
    const auto fd = frobenius_data(C, e.p, 6);
    EXPECT_GE(fd.working_precision, 6);
    const auto z = zeta_numerator(fd);
    EXPECT_EQ(z.coefficients, brute_force_zeta(C, e.p).coefficients) << e.id;
    EXPECT_TRUE(z.functional_equation_holds());
    EXPECT_LT(z.weil_deviation(), 1e-6);
  }
}

TEST(Frobenius, Example2GroupOrders) {
  const auto C = curve_of(testing::example2());
  const auto z7 = zeta_numerator(frobenius_data(C, 7, 6));
  EXPECT_EQ(z7.curve_points(), 11);
  EXPECT_EQ(z7.jacobian_order(), JacobianFp(C, 7).order_by_enumeration());
}

TEST(Frobenius, RandomCurvesAgreeWithBruteForce) {
  std::mt19937_64 rng(7);
  for (Prime p : {7, 11}) {
    for (int trial = 0; trial < 3; ++trial) {
      const auto C = testing::random_good_curve(rng, p);
      const auto z = zeta_numerator(frobenius_data(C, p, 5));
      EXPECT_EQ(z.coefficients, brute_force_zeta(C, p).coefficients);
      EXPECT_EQ(z.curve_points(), count_points(C, p, 1));
    }
  }
}

TEST(Frobenius, ImageLiesOnCurveAndRaisesXToP) {
  const auto e = testing::example1();
  const auto C = curve_of(e);
  const int n = 12;
  const CurvePoint P = to_padic(C.from_original(testing::pt(1, 5)), e.p, n);
  const CurvePoint Q = frobenius_image(C, P, e.p, n);
  EXPECT_TRUE((Q.x - P.x.pow(static_cast<std::uint64_t>(e.p))).is_zero());
  EXPECT_TRUE((Q.y * Q.y - qpoly::eval(C.F_padic(e.p, n), Q.x)).is_zero());
  EXPECT_EQ(Q.y.residue_mod_p(), P.y.pow(static_cast<std::uint64_t>(e.p)).residue_mod_p());
}

TEST(Frobenius, MatrixTraceIsZetaTrace) {
  const auto e = testing::example2();
  const auto C = curve_of(e);
  const auto fd = frobenius_data(C, e.p, 6);
  PadicNumber tr = PadicNumber::zero(e.p);
  for (std::size_t i = 0; i < kBasisSize; ++i) tr += fd.matrix[i][i];
  const auto z = zeta_numerator(fd);
  EXPECT_TRUE((tr - PadicNumber::from_integer(e.p, z.trace(), 6)).is_zero());
}

TEST(Frobenius, RejectsSmallPrimes) {
  const auto C = curve_of(testing::example1());
  EXPECT_THROW(frobenius_data(C, 5, 6), DomainError);
}

}  // namespace
}  // namespace ccz
