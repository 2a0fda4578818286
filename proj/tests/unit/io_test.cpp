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

#include "ccz/io.hpp"
#include "test_support.hpp"

namespace ccz {
namespace {

TEST(Io, JobRoundTrip) {
  const CurveJob job = testing::job_of(testing::example2());
  const CurveJob back = parse_job(job_to_json(job));
  EXPECT_EQ(back.id, job.id);
  EXPECT_EQ(back.coeffs, job.coeffs);
  ASSERT_TRUE(back.scaling.has_value());
  EXPECT_EQ(back.scaling->u, job.scaling->u);
  EXPECT_EQ(back.scaling->v, job.scaling->v);
  EXPECT_EQ(back.p, job.p);
  EXPECT_EQ(back.P0, job.P0);
  EXPECT_EQ(back.known_points, job.known_points);
}

TEST(Io, ParsesOverridesAndRationals) {
  const CurveJob job = parse_job(
      R"({"id": "a", "coeffs": ["1/2", 3, "-4"], "P0": ["1/3", "-2"], "known_points": ["inf"],
          "overrides": {"N": 20, "M": 30, "H": 50}})");
  EXPECT_EQ(job.coeffs, (QPoly{mpq_class(1, 2), 3, -4}));
  ASSERT_TRUE(job.P0.has_value());
  EXPECT_EQ(job.P0->x, mpq_class(1, 3));
  EXPECT_EQ(job.N, 20);
  EXPECT_EQ(job.M, 30);
  EXPECT_EQ(job.H, 50);
  ASSERT_EQ(job.known_points.size(), 1u);
  EXPECT_TRUE(job.known_points[0].infinity);
}

TEST(Io, RejectsMalformedJobs) {
  EXPECT_THROW(parse_job("{"), BadInputError);
  EXPECT_THROW(parse_job("[]"), BadInputError);
  EXPECT_THROW(parse_job(R"({"id": "a"})"), BadInputError);
  EXPECT_THROW(parse_job(R"({"id": "a/b", "coeffs": ["1"]})"), BadInputError);
  EXPECT_THROW(parse_job(R"({"id": "summary", "coeffs": ["1"]})"), BadInputError);
  EXPECT_THROW(parse_job(R"({"id": "a", "coeffs": ["x"]})"), BadInputError);
  EXPECT_THROW(parse_job(R"({"id": "a", "coeffs": ["1"], "P0": [1]})"), BadInputError);
  EXPECT_THROW(parse_job(R"({"id": "a", "coeffs": ["1"], "overrides": {"N": "x"}})"), BadInputError);
}

TEST(Io, JobsFile) {
  EXPECT_TRUE(parse_jobs("").empty());
  EXPECT_EQ(parse_jobs("\n{\"id\": \"a\", \"coeffs\": [1]}\n\n{\"id\": \"b\", \"coeffs\": [1]}\n").size(), 2u);
  EXPECT_THROW(parse_jobs("{\"id\": \"a\", \"coeffs\": [1]}\n{\"id\": \"a\", \"coeffs\": [1]}\n"), BadInputError);
  EXPECT_THROW(parse_jobs("{\"id\": \"a\", \"coeffs\": [1]}\nnot json\n"), BadInputError);
}

TEST(Io, Points) {
  EXPECT_TRUE(parse_point("\"inf\"").infinity);
  const RationalPoint q = parse_point(R"(["-1/2", "3"])");
  EXPECT_EQ(q, RationalPoint::affine(mpq_class(-1, 2), 3));
  EXPECT_EQ(parse_point(point_to_json(q)), q);
  EXPECT_THROW(parse_point(R"(["1"])"), BadInputError);
}

TEST(Io, ReportRoundTrip) {
  CurveJob job = testing::job_of(testing::example2());
  job.N = 18;
  const ZeroSetReport r = run_job(job);
  const std::string text = report_to_json(r);
  const ZeroSetReport back = report_from_json(text);
  EXPECT_EQ(back, r);
  EXPECT_EQ(report_to_json(back), text);
  EXPECT_EQ(exit_code(r), kExitOk);
  EXPECT_THROW(report_from_json("{}"), BadInputError);
}

TEST(Io, ExitCodes) {
  EXPECT_EQ(exit_code(ErrorKind::kBadInput), kExitBadInput);
  EXPECT_EQ(exit_code(ErrorKind::kBadReduction), kExitBadReduction);
  EXPECT_EQ(exit_code(ErrorKind::kSimplicity), kExitSimplicity);
  EXPECT_EQ(exit_code(ErrorKind::kRecognition), kExitRecognition);
  EXPECT_EQ(exit_code(ErrorKind::kPrecision), kExitOther);
}

TEST(Io, BatchIsolatesFailures) {
  CurveJob good = testing::job_of(testing::example2());
  good.N = 18;
  CurveJob bad = testing::job_of(testing::example3());
  bad.id = "bad";
  bad.p = 7;
  CurveJob tiny = testing::job_of(testing::example1());
  tiny.id = "tiny";
  tiny.p = 5;
  const BatchResult res = run_batch({tiny, good, bad}, 3);
  ASSERT_EQ(res.rows.size(), 3u);
  EXPECT_EQ(res.rows[0].id, "bad");
  EXPECT_EQ(res.rows[0].status, "bad_reduction");
  EXPECT_EQ(res.rows[1].id, "ex2");
  EXPECT_EQ(res.rows[1].status, "ok");
  EXPECT_EQ(res.rows[2].status, "bad_input");
  EXPECT_EQ(res.artifacts[1], report_to_json(run_job(good)));
  const std::string csv = summary_csv(res.rows);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "id,p,known,zero_set,new_rational,torsion,other,status");
  EXPECT_THROW(run_batch({good, good}, 2), BadInputError);
}

}  // namespace
}  // namespace ccz
