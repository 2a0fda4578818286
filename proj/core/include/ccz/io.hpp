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

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "ccz/curve.hpp"
#include "ccz/errors.hpp"
#include "ccz/pipeline.hpp"

namespace ccz {

/// One line of a jobs file. Rationals are carried as "a/b" strings.
///
///   {"id": "ex2", "coeffs": ["1", "-8", ...], "scaling": {"u": "-4", "v": "256"},
///    "p": 7, "P0": ["0", "1"], "known_points": [["1", "1"], "inf"],
///    "overrides": {"N": 18, "M": 17, "H": 1000}}
///
/// Only id and coeffs are required.
struct CurveJob {
  std::string id;
  QPoly coeffs;
  std::optional<Scaling> scaling;
  std::optional<Prime> p;
  std::optional<RationalPoint> P0;
  std::vector<RationalPoint> known_points;
  std::optional<int> N;
  std::optional<int> M;
  std::optional<std::int64_t> H;
};

inline constexpr std::int64_t kDefaultSearchHeight = 1000;

CurveJob parse_job(const std::string& json_text);
std::string job_to_json(const CurveJob& job);
/// JSON-lines; blank lines are skipped. Duplicate ids are rejected.
std::vector<CurveJob> parse_jobs(const std::string& jsonl_text);
std::vector<CurveJob> read_jobs(const std::filesystem::path& path);
/// A bare curve file: a job without the id requirement.
CurveJob read_curve(const std::filesystem::path& path);

/// "inf" or ["x", "y"].
RationalPoint parse_point(const std::string& json_text);
std::string point_to_json(const RationalPoint& pt);

HyperellipticCurve job_curve(const CurveJob& job);

/// Runs the pipeline for one job. Without P0 the known points and a height
/// search supply candidates; the first with a nonvanishing integral is used.
/// With no known points, the search result is used as the known list.
ZeroSetReport run_job(const CurveJob& job, const PipelineOptions& base = {});

std::string report_to_json(const ZeroSetReport& report, int indent = 2);
ZeroSetReport report_from_json(const std::string& json_text);
std::string error_to_json(const std::string& id, ErrorKind kind, const std::string& message);

/// Short human-readable account of a report.
std::string report_summary(const ZeroSetReport& report);

/// Process exit codes.
enum ExitCode : int {
  kExitOk = 0,
  kExitOther = 1,
  kExitBadInput = 2,
  kExitBadReduction = 3,
  kExitSimplicity = 4,
  kExitRecognition = 5,
};
int exit_code(ErrorKind kind);
/// kExitOk for complete reports; otherwise simplicity or recognition.
int exit_code(const ZeroSetReport& report);

struct BatchRow {
  std::string id;
  Prime p = 0;
  std::size_t known = 0;
  std::size_t zero_set = 0;
  std::size_t new_rational = 0;
  std::size_t torsion = 0;
  std::size_t other = 0;
  std::string status;  // "ok", "incomplete" or an error kind
  friend bool operator==(const BatchRow&, const BatchRow&) = default;
};

struct BatchResult {
  std::vector<BatchRow> rows;  // sorted by id
  /// Per job, in id order: the report JSON or an error object.
  std::vector<std::string> artifacts;
};

/// Runs the jobs on a pool of `parallel` workers. A failing job yields an
/// error row and never stops the others.
BatchResult run_batch(const std::vector<CurveJob>& jobs, int parallel);
std::string summary_csv(const std::vector<BatchRow>& rows);
/// Writes <id>.json per job and summary.csv into out_dir.
void write_batch(const BatchResult& result, const std::filesystem::path& out_dir);

}  // namespace ccz
