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

#include "ccz/pipeline.hpp"
#include "test_support.hpp"

namespace ccz {
namespace {

using testing::curve_of;
using testing::example1;
using testing::example2;
using testing::example3;

const ZeroSetReport& ex2_report() {
  static const ZeroSetReport r = [] {
    const auto e = example2();
    PipelineOptions o;
    o.p = 7;
    o.N = 18;
    return run_pipeline(curve_of(e), e.P0, e.known, o);
  }();
  return r;
}

TEST(Pipeline, AnnihilatorKillsTheBasePoint) {
  const auto e = example2();
  const auto C = curve_of(e);
  const IntegrationContext ctx(C, 7, 18);
  const auto basis = compute_annihilator(ctx, to_padic(C.from_original(e.P0), 7, 18));
  EXPECT_TRUE(basis.alpha.is_unit_normalized());
  EXPECT_TRUE(basis.beta.is_unit_normalized());
  EXPECT_GT(basis.n_prime, 3);
  for (const auto* w : {&basis.alpha, &basis.beta}) {
    PadicNumber s = PadicNumber::zero(7);
    for (int i = 0; i < kGenus; ++i) s += w->c[i] * basis.lambda[i];
    EXPECT_TRUE(s.is_zero() || s.valuation() >= basis.n_prime) << s.to_digits();
  }
  const int j = gamma_index(basis);
  EXPECT_GE(j, 0);
  EXPECT_LT(j, kGenus);
}

TEST(Pipeline, TriageRule) {
  const auto& r = ex2_report();
  std::size_t finite_points = 0;
  for (const auto& d : r.disks) {
    if (d.status == DiskStatus::kRuledOut) {
      EXPECT_EQ(d.known_in_disk.size(), static_cast<std::size_t>(d.m + 1)) << d.disk.to_string();
      EXPECT_TRUE(d.common.empty());
    }
    EXPECT_LE(d.common.size(), static_cast<std::size_t>(d.kind == DiskKind::kGeneric ? 2 : 3));
    finite_points += d.disk.infinity ? 0 : 1;
  }
  EXPECT_GT(finite_points, 0u);
  for (bool b : r.known_in_zero_set) EXPECT_TRUE(b);
  EXPECT_TRUE(r.complete);
}

TEST(Pipeline, SearchingARuledOutDiskFindsOnlyKnownPoints) {
  const auto e = example2();
  const auto C = curve_of(e);
  const IntegrationContext ctx(C, 7, 18);
  const auto basis = compute_annihilator(ctx, to_padic(C.from_original(e.P0), 7, 18));
  std::vector<RationalPoint> known;
  for (const auto& q : e.known) known.push_back(C.from_original(q));
  auto disks = triage_disks(ctx, basis, known);
  int checked = 0;
  for (auto& d : disks) {
    if (d.status != DiskStatus::kRuledOut || d.disk.infinity) continue;
    search_disk(ctx, basis, d);
    EXPECT_EQ(d.common.size(), d.known_in_disk.size()) << d.disk.to_string();
    ++checked;
  }
  EXPECT_GT(checked, 0);
}

TEST(Pipeline, Deterministic) {
  const auto e = example2();
  PipelineOptions o;
  o.p = 7;
  o.N = 18;
  EXPECT_EQ(run_pipeline(curve_of(e), e.P0, e.known, o), ex2_report());
}

TEST(Pipeline, ChooseBasePointSkipsDegenerateCandidates) {
  const auto e = example3();
  const auto C = curve_of(e);
  // Infinity and the Weierstrass point (0, 0) are torsion; (1, -2) is not.
  const auto got = choose_base_point(C, {RationalPoint::at_infinity(), testing::pt(0, 0), testing::pt(1, -2)},
                                     11, 10);
  ASSERT_TRUE(got.has_value());
  EXPECT_EQ(*got, testing::pt(1, -2));
  EXPECT_FALSE(choose_base_point(C, {RationalPoint::at_infinity(), testing::pt(0, 0)}, 11, 10).has_value());
}

TEST(Pipeline, RejectsSmallPrimesAndBadReduction) {
  const auto e1 = example1();
  PipelineOptions o;
  o.p = 5;
  EXPECT_THROW(run_pipeline(curve_of(e1), e1.P0, e1.known, o), BadInputError);
  const auto e3 = example3();
  o.p = 7;
  EXPECT_THROW(run_pipeline(curve_of(e3), e3.P0, e3.known, o), BadReductionError);
}

TEST(Pipeline, RejectsPointsOffTheCurve) {
  const auto e = example2();
  PipelineOptions o;
  o.p = 7;
  EXPECT_THROW(run_pipeline(curve_of(e), testing::pt(2, 2), e.known, o), BadInputError);
}

TEST(Pipeline, ReportCarriesZetaData) {
  const auto& r = ex2_report();
  EXPECT_EQ(r.curve_points, 11);
  EXPECT_EQ(r.jacobian_order, "530");
  EXPECT_EQ(r.coleman_bound, 11 + 4);
  EXPECT_EQ(r.zeta.size(), 7u);
}

}  // namespace
}  // namespace ccz
