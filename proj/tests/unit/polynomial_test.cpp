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

#include "ccz/polynomial.hpp"

namespace ccz {
namespace {

TEST(Polynomial, QuadraticDiscriminant) {
  // b^2 - 4ac for 3x^2 + 5x - 2.
  EXPECT_EQ(qpoly::discriminant({-2, 5, 3}), 25 + 24);
}

TEST(Polynomial, DiscriminantFromRoots) {
  // Oracle: prod_{i<j} (r_i - r_j)^2 for a monic polynomial with known roots.
  const std::vector<long> roots = {-2, 1, 3, 7};
  QPoly f = {1};
  for (long r : roots) f = qpoly::mul(f, {-r, 1});
  mpq_class expect = 1;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    for (std::size_t j = i + 1; j < roots.size(); ++j) {
      expect *= mpq_class((roots[i] - roots[j]) * (roots[i] - roots[j]));
    }
  }
  EXPECT_EQ(qpoly::discriminant(f), expect);
  const auto found = qpoly::rational_roots(f);
  ASSERT_EQ(found.size(), 4u);
  EXPECT_EQ(found[0], -2);
  EXPECT_EQ(found[3], 7);
}

TEST(Polynomial, RationalRootsWithDenominators) {
  const QPoly f = qpoly::mul({-1, 2}, {3, 5});  // (2x - 1)(5x + 3)
  const auto r = qpoly::rational_roots(qpoly::mul(f, {1, 0, 1}));
  ASSERT_EQ(r.size(), 2u);
  EXPECT_EQ(r[0], mpq_class(-3, 5));
  EXPECT_EQ(r[1], mpq_class(1, 2));
}

TEST(Polynomial, ResultantOfCoprimeLinears) {
  EXPECT_EQ(qpoly::resultant({-2, 1}, {-5, 1}), -3);
}

TEST(Polynomial, DeterminantByCofactorOracle) {
  const std::vector<std::vector<mpq_class>> m = {{2, 0, 1}, {1, 3, 2}, {1, 1, 1}};
  // 2(3-2) - 0 + 1(1-3) = 0
  EXPECT_EQ(qpoly::determinant(m), 0);
  const std::vector<std::vector<mpq_class>> m2 = {{mpq_class(1, 2), 1}, {3, 4}};
  EXPECT_EQ(qpoly::determinant(m2), -1);
}

TEST(Polynomial, RenderAndParse) {
  EXPECT_EQ(qpoly::to_string({1, -1, 1}, "x"), "x^2 - x + 1");
  EXPECT_EQ(qpoly::to_string({3, 0, 1}, "y"), "y^2 + 3");
  EXPECT_EQ(parse_rational("-6/4"), mpq_class(-3, 2));
  EXPECT_EQ(format_rational(mpq_class(-3, 2)), "-3/2");
  EXPECT_EQ(format_rational(mpq_class(5)), "5");
  EXPECT_THROW(parse_rational("1.5"), BadInputError);
  EXPECT_THROW(parse_rational("3/0"), BadInputError);
  EXPECT_THROW(parse_rational(""), BadInputError);
}

TEST(Polynomial, PadicHelpers) {
  EXPECT_EQ(mod_p(mpq_class(1, 2), 7), 4);
  EXPECT_TRUE(is_p_integral(mpq_class(3, 4), 7));
  EXPECT_FALSE(is_p_integral(mpq_class(3, 14), 7));
  EXPECT_EQ(rational_valuation(mpq_class(98, 3), 7), 2);
  mpq_class root;
  EXPECT_TRUE(is_rational_square(mpq_class(9, 4), &root));
  EXPECT_EQ(root, mpq_class(3, 2));
  EXPECT_FALSE(is_rational_square(mpq_class(2)));
}

}  // namespace
}  // namespace ccz
