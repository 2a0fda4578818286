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

#include "ccz/recognize.hpp"

namespace ccz {
namespace {

QPoly primitive(QPoly f) {
  mpz_class den = 1;
  for (const auto& c : f) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
  mpz_class g = 0;
  for (auto& c : f) {
    c *= den;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), mpz_class(c).get_mpz_t());
  }
  for (auto& c : f) c /= g;
  if (f.back() < 0) {
    for (auto& c : f) c = -c;
  }
  return f;
}

TEST(Recognize, RationalReconstructionRecoversSmallRationals) {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<long> d(-300, 300);
  for (Prime p : {7, 11}) {
    for (int trial = 0; trial < 100; ++trial) {
      const long b = std::abs(d(rng)) + 1;
      if (b % p == 0) continue;
      mpq_class q(d(rng), b);
      q.canonicalize();
      if (q.get_den() % p == 0) continue;
      const auto r = rational_reconstruction(PadicNumber::from_rational(p, q, 30));
      ASSERT_TRUE(r.has_value());
      EXPECT_EQ(*r, q);
    }
  }
}

TEST(Recognize, RationalReconstructionRejectsNoise) {
  std::mt19937_64 rng(32);
  int rejected = 0;
  for (int trial = 0; trial < 50; ++trial) {
    mpz_class v = 0;
    for (int i = 0; i < 30; ++i) v = v * 7 + static_cast<long>(rng() % 7);
    rejected += !rational_reconstruction(PadicNumber::from_integer(7, v, 30)).has_value();
  }
  EXPECT_GE(rejected, 45);
}

TEST(Recognize, QuadraticDependencyFindsMinimalPolynomial) {
  // alpha = (a + b sqrt(d)) / c with d a non-square unit square mod p.
  std::mt19937_64 rng(33);
  std::uniform_int_distribution<long> small(-12, 12);
  const Prime p = 11;
  int tested = 0;
  for (int trial = 0; trial < 200 && tested < 30; ++trial) {
    const long dd = small(rng);
    const long a = small(rng);
    const long b = small(rng);
    const long c = std::abs(small(rng)) + 1;
    if (b == 0 || dd == 0 || c % p == 0 || (dd > 0 && mpz_perfect_square_p(mpz_class(dd).get_mpz_t()))) continue;
    const PadicNumber D = PadicNumber::from_integer(p, dd, 40);
    if (!D.is_unit() || !is_square(D)) continue;
    ++tested;
    const PadicNumber alpha = (PadicNumber::from_integer(p, a, 40) + PadicNumber::from_integer(p, b, 40) * sqrt(D))
                                  .divided_by(c);
    const auto got = quadratic_dependency(alpha);
    ASSERT_TRUE(got.has_value());
    const QPoly expect = primitive({mpq_class(a * a - b * b * dd), mpq_class(-2 * a * c), mpq_class(c * c)});
    EXPECT_EQ(primitive(*got), expect);
  }
  EXPECT_EQ(tested, 30);
}

TEST(Recognize, QuadraticArithmetic) {
  const QuadraticNumber a{1, 1, 2};
  const QuadraticNumber b{1, -1, 2};
  EXPECT_EQ(a * b, (QuadraticNumber{-1, 0, 2}));
  EXPECT_EQ(a + b, (QuadraticNumber{2, 0, 2}));
  EXPECT_EQ(minimal_polynomial(a), (QPoly{-1, -2, 1}));
  EXPECT_EQ(minimal_polynomial(QuadraticNumber{mpq_class(1, 2), mpq_class(1, 2), -3}), (QPoly{1, -1, 1}));
  EXPECT_EQ(squarefree_part(72), 2);
  EXPECT_EQ(squarefree_part(-140), -35);
}

TEST(Recognize, QuadraticPointOnExample2Model) {
  // ((1 + sqrt(-3))/2, sqrt(-3)) on the input model, embedded in Q_7.
  const QPoly G = {1, -8, 28, -56, 72, -56, 24, -4};
  const Prime p = 7;
  const int n = 30;
  const PadicNumber s = sqrt(PadicNumber::from_integer(p, -3, n));
  const PadicNumber x = (PadicNumber::exact(p, 1) + s).divided_by(2);
  const auto pt = recognize_point(G, x, s);
  ASSERT_TRUE(pt.has_value());
  EXPECT_EQ(pt->degree, 2);
  EXPECT_EQ(pt->field, -3);
  EXPECT_EQ(pt->x_minpoly, (QPoly{1, -1, 1}));
  EXPECT_EQ(pt->y_minpoly, (QPoly{3, 0, 1}));
  // Independent check of G(x) = y^2 in Q(sqrt(-3)).
  QuadraticNumber acc{0, 0, -3};
  for (auto it = G.rbegin(); it != G.rend(); ++it) acc = acc * pt->x + QuadraticNumber{*it, 0, -3};
  EXPECT_EQ(acc, pt->y * pt->y);
}

TEST(Recognize, RationalPointWithIrrationalY) {
  // (0, 2 sqrt(2)) on y^2 = 4x^7 + 9x^6 - ... + 8.
  const QPoly G = {8, 32, 32, -16, -36, -8, 9, 4};
  const Prime p = 7;
  const PadicNumber y = sqrt(PadicNumber::from_integer(p, 8, 25));
  const auto pt = recognize_point(G, PadicNumber::zero(p, 25), y);
  ASSERT_TRUE(pt.has_value());
  EXPECT_EQ(pt->degree, 2);
  EXPECT_EQ(pt->x_minpoly, (QPoly{0, 1}));
  EXPECT_EQ(pt->y_minpoly, (QPoly{-8, 0, 1}));
}

TEST(Recognize, LllShortensBasis) {
  std::vector<std::vector<mpz_class>> B = {{1, 0, 0, 1000}, {0, 1, 0, 2001}, {0, 0, 1, 2999}};
  lll_reduce(B);
  mpz_class norm = 0;
  for (const auto& c : B[0]) norm += c * c;
  EXPECT_LE(norm, 10);
}

}  // namespace
}  // namespace ccz
