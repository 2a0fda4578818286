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

#include "ccz/io.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>
#include <thread>

#include "json.hpp"

namespace ccz {

using nlohmann::json;

namespace {

mpq_class rational_of(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return mpq_class(std::to_string(j.get<std::int64_t>()));
  throw BadInputError("expected a rational string or an integer, got " + j.dump());
}

RationalPoint point_of(const json& j) {
  if (j.is_string() && j.get<std::string>() == "inf") return RationalPoint::at_infinity();
  if (j.is_array() && j.size() == 2) return RationalPoint::affine(rational_of(j[0]), rational_of(j[1]));
  throw BadInputError("expected \"inf\" or [x, y], got " + j.dump());
}

json point_json(const RationalPoint& pt) {
  if (pt.infinity) return "inf";
  return json::array({format_rational(pt.x), format_rational(pt.y)});
}

template <typename T>
std::optional<T> optional_field(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  if (!j.at(key).is_number_integer()) throw BadInputError(std::string(key) + " must be an integer");
  return j.at(key).get<T>();
}

CurveJob job_of(const json& j, bool need_id) {
  if (!j.is_object()) throw BadInputError("job must be a JSON object");
  CurveJob job;
  if (j.contains("id")) {
    if (!j["id"].is_string()) throw BadInputError("id must be a string");
    job.id = j["id"].get<std::string>();
  }
  if (need_id && job.id.empty()) throw BadInputError("job without id");
  // Ids become file names in batch output.
  const bool safe = std::all_of(job.id.begin(), job.id.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.';
  });
  if (!safe || job.id == "." || job.id == ".." || job.id == "summary") {
    throw BadInputError("job id must be [A-Za-z0-9_.-]+ and not reserved: " + job.id);
  }
  if (!j.contains("coeffs") || !j["coeffs"].is_array()) throw BadInputError("job without coeffs array");
  for (const auto& c : j["coeffs"]) job.coeffs.push_back(rational_of(c));
  if (j.contains("scaling") && !j["scaling"].is_null()) {
    const auto& s = j["scaling"];
    job.scaling = Scaling{rational_of(s.at("u")), rational_of(s.at("v"))};
  }
  job.p = optional_field<Prime>(j, "p");
  if (j.contains("P0") && !j["P0"].is_null()) job.P0 = point_of(j["P0"]);
  if (j.contains("known_points")) {
    if (!j["known_points"].is_array()) throw BadInputError("known_points must be an array");
    for (const auto& pt : j["known_points"]) job.known_points.push_back(point_of(pt));
  }
  if (j.contains("overrides") && !j["overrides"].is_null()) {
    const auto& o = j["overrides"];
    job.N = optional_field<int>(o, "N");
    job.M = optional_field<int>(o, "M");
    job.H = optional_field<std::int64_t>(o, "H");
  }
  return job;
}

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw BadInputError(std::string("malformed JSON: ") + e.what());
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw BadInputError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Report (de)serialization.

json record_json(const PadicRecord& r) {
  return {{"p", r.prime}, {"val", r.valuation}, {"unit", r.unit}, {"prec", r.absolute_precision}};
}

PadicRecord record_of(const json& j) {
  PadicRecord r;
  r.prime = j.at("p").get<Prime>();
  r.valuation = j.at("val").get<int>();
  r.unit = j.at("unit").get<std::string>();
  r.absolute_precision = j.at("prec").get<int>();
  return r;
}

json records_json(const std::vector<PadicRecord>& v) {
  json a = json::array();
  for (const auto& r : v) a.push_back(record_json(r));
  return a;
}

std::vector<PadicRecord> records_of(const json& j) {
  std::vector<PadicRecord> v;
  for (const auto& r : j) v.push_back(record_of(r));
  return v;
}

json fp_json(const FpPoint& d) {
  if (d.infinity) return "inf";
  return json::array({d.x, d.y});
}

FpPoint fp_of(const json& j) {
  if (j.is_string()) return FpPoint::at_infinity();
  return FpPoint{false, j.at(0).get<std::int64_t>(), j.at(1).get<std::int64_t>()};
}

json zero_point_json(const ZeroPoint& z) {
  json j = {{"disk", fp_json(z.disk)}, {"t", record_json(z.t)}, {"infinity", z.infinity}};
  if (!z.infinity) {
    j["x"] = record_json(z.x);
    j["y"] = record_json(z.y);
  }
  return j;
}

ZeroPoint zero_point_of(const json& j) {
  ZeroPoint z;
  z.disk = fp_of(j.at("disk"));
  z.t = record_of(j.at("t"));
  z.infinity = j.at("infinity").get<bool>();
  if (!z.infinity) {
    z.x = record_of(j.at("x"));
    z.y = record_of(j.at("y"));
  }
  return z;
}

template <typename E, std::size_t K>
E enum_of(const std::string& s, const E (&values)[K]) {
  for (E v : values) {
    if (s == to_string(v)) return v;
  }
  throw BadInputError("unknown enum value " + s);
}

constexpr PointClass kPointClasses[] = {PointClass::kKnown,       PointClass::kNewRational,
                                        PointClass::kWeierstrass, PointClass::kTorsion,
                                        PointClass::kOtherAlgebraic, PointClass::kUnrecognized};
constexpr DiskStatus kDiskStatuses[] = {DiskStatus::kRuledOut, DiskStatus::kSearched, DiskStatus::kFailed};
constexpr DiskKind kDiskKinds[] = {DiskKind::kGeneric, DiskKind::kFiniteWeierstrass, DiskKind::kInfinity};

json roots_json(const std::vector<RootSummary>& v) {
  json a = json::array();
  for (const auto& r : v) a.push_back({{"t", record_json(r.t)}, {"precision", r.precision}, {"simple", r.simple}});
  return a;
}

std::vector<RootSummary> roots_of(const json& j) {
  std::vector<RootSummary> v;
  for (const auto& r : j) {
    v.push_back({record_of(r.at("t")), r.at("precision").get<int>(), r.at("simple").get<bool>()});
  }
  return v;
}

json points_json(const std::vector<RationalPoint>& v) {
  json a = json::array();
  for (const auto& p : v) a.push_back(point_json(p));
  return a;
}

std::vector<RationalPoint> points_of(const json& j) {
  std::vector<RationalPoint> v;
  for (const auto& p : j) v.push_back(point_of(p));
  return v;
}

json disk_json(const DiskAnalysis& d) {
  json j = {{"disk", fp_json(d.disk)},
            {"kind", to_string(d.kind)},
            {"m", d.m},
            {"order_alpha", d.order_alpha},
            {"order_beta", d.order_beta},
            {"known_in_disk", points_json(d.known_in_disk)},
            {"status", to_string(d.status)},
            {"diagnostic", d.diagnostic},
            {"center_known", d.center_known},
            {"M", d.M},
            {"n_prime", d.n_prime},
            {"k_f", d.k_f},
            {"k_g", d.k_g},
            {"bound_f", d.bound_f},
            {"bound_g", d.bound_g},
            {"discriminant_f", d.discriminant_f},
            {"discriminant_g", d.discriminant_g},
            {"certified_f", d.certified_f},
            {"certified_g", d.certified_g},
            {"valuation_lemma", d.valuation_lemma},
            {"roots_f", roots_json(d.roots_f)},
            {"roots_g", roots_json(d.roots_g)}};
  json c = json::array();
  for (const auto& z : d.common) c.push_back(zero_point_json(z));
  j["common"] = c;
  return j;
}

DiskAnalysis disk_of(const json& j) {
  DiskAnalysis d;
  d.disk = fp_of(j.at("disk"));
  d.kind = enum_of(j.at("kind").get<std::string>(), kDiskKinds);
  d.m = j.at("m").get<int>();
  d.order_alpha = j.at("order_alpha").get<int>();
  d.order_beta = j.at("order_beta").get<int>();
  d.known_in_disk = points_of(j.at("known_in_disk"));
  d.status = enum_of(j.at("status").get<std::string>(), kDiskStatuses);
  d.diagnostic = j.at("diagnostic").get<std::string>();
  d.center_known = j.at("center_known").get<bool>();
  d.M = j.at("M").get<int>();
  d.n_prime = j.at("n_prime").get<int>();
  d.k_f = j.at("k_f").get<int>();
  d.k_g = j.at("k_g").get<int>();
  d.bound_f = j.at("bound_f").get<int>();
  d.bound_g = j.at("bound_g").get<int>();
  d.discriminant_f = j.at("discriminant_f").get<bool>();
  d.discriminant_g = j.at("discriminant_g").get<bool>();
  d.certified_f = j.at("certified_f").get<bool>();
  d.certified_g = j.at("certified_g").get<bool>();
  d.valuation_lemma = j.at("valuation_lemma").get<bool>();
  d.roots_f = roots_of(j.at("roots_f"));
  d.roots_g = roots_of(j.at("roots_g"));
  for (const auto& z : j.at("common")) d.common.push_back(zero_point_of(z));
  return d;
}

json classified_json(const ClassifiedPoint& c) {
  json j = {{"kind", to_string(c.kind)},
            {"point", zero_point_json(c.point)},
            {"rational", c.rational ? point_json(*c.rational) : json(nullptr)},
            {"x_minpoly", c.x_minpoly},
            {"y_minpoly", c.y_minpoly},
            {"field", c.field},
            {"gamma", c.gamma},
            {"gamma_integral", c.gamma_integral ? record_json(*c.gamma_integral) : json(nullptr)},
            {"gamma_vanishes", c.gamma_vanishes},
            {"reduction_order", c.reduction_order}};
  return j;
}

ClassifiedPoint classified_of(const json& j) {
  ClassifiedPoint c;
  c.kind = enum_of(j.at("kind").get<std::string>(), kPointClasses);
  c.point = zero_point_of(j.at("point"));
  if (!j.at("rational").is_null()) c.rational = point_of(j.at("rational"));
  c.x_minpoly = j.at("x_minpoly").get<std::string>();
  c.y_minpoly = j.at("y_minpoly").get<std::string>();
  c.field = j.at("field").get<std::string>();
  c.gamma = j.at("gamma").get<int>();
  if (!j.at("gamma_integral").is_null()) c.gamma_integral = record_of(j.at("gamma_integral"));
  c.gamma_vanishes = j.at("gamma_vanishes").get<bool>();
  c.reduction_order = j.at("reduction_order").get<std::string>();
  return c;
}

}  // namespace

CurveJob parse_job(const std::string& json_text) { return job_of(parse_text(json_text), true); }

std::string job_to_json(const CurveJob& job) {
  json j;
  j["id"] = job.id;
  json c = json::array();
  for (const auto& q : job.coeffs) c.push_back(format_rational(q));
  j["coeffs"] = c;
  if (job.scaling) j["scaling"] = {{"u", format_rational(job.scaling->u)}, {"v", format_rational(job.scaling->v)}};
  if (job.p) j["p"] = *job.p;
  if (job.P0) j["P0"] = point_json(*job.P0);
  j["known_points"] = points_json(job.known_points);
  json o = json::object();
  if (job.N) o["N"] = *job.N;
  if (job.M) o["M"] = *job.M;
  if (job.H) o["H"] = *job.H;
  if (!o.empty()) j["overrides"] = o;
  return j.dump();
}

std::vector<CurveJob> parse_jobs(const std::string& jsonl_text) {
  std::vector<CurveJob> jobs;
  std::set<std::string> ids;
  std::istringstream in(jsonl_text);
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    CurveJob job;
    try {
      job = parse_job(line);
    } catch (const BadInputError& e) {
      throw BadInputError("line " + std::to_string(number) + ": " + e.what());
    }
    if (!ids.insert(job.id).second) throw BadInputError("duplicate job id " + job.id);
    jobs.push_back(std::move(job));
  }
  return jobs;
}

std::vector<CurveJob> read_jobs(const std::filesystem::path& path) { return parse_jobs(read_file(path)); }

CurveJob read_curve(const std::filesystem::path& path) {
  CurveJob job = job_of(parse_text(read_file(path)), false);
  if (job.id.empty()) job.id = path.stem().string();
  return job;
}

RationalPoint parse_point(const std::string& json_text) {
  const std::string s = json_text == "inf" ? "\"inf\"" : json_text;
  return point_of(parse_text(s));
}

std::string point_to_json(const RationalPoint& pt) { return point_json(pt).dump(); }

HyperellipticCurve job_curve(const CurveJob& job) { return HyperellipticCurve::from_model(job.coeffs, job.scaling); }

ZeroSetReport run_job(const CurveJob& job, const PipelineOptions& base) {
  const HyperellipticCurve curve = job_curve(job);
  PipelineOptions options = base;
  if (job.p) options.p = job.p;
  if (job.N) options.N = job.N;
  if (job.M) options.M = job.M;
  const Prime p = options.p ? *options.p : choose_prime(curve, 7);
  curve.require_good_reduction(p);
  options.p = p;

  std::vector<RationalPoint> known = job.known_points;
  RationalPoint P0;
  if (job.P0) {
    P0 = *job.P0;
  } else {
    std::vector<RationalPoint> found;
    for (const auto& q : search_rational_points(curve, job.H.value_or(kDefaultSearchHeight))) {
      found.push_back(curve.to_original(q));
    }
    if (known.empty()) known = found;
    std::vector<RationalPoint> candidates = known;
    candidates.insert(candidates.end(), found.begin(), found.end());
    const int n = options.N ? *options.N : 2 * p + 4;
    const auto chosen = choose_base_point(curve, candidates, p, n);
    if (!chosen) throw BadInputError("no point of infinite order found to serve as P0");
    P0 = *chosen;
  }
  ZeroSetReport report = run_pipeline(curve, P0, known, options);
  report.id = job.id;
  return report;
}

std::string report_to_json(const ZeroSetReport& r, int indent) {
  json j;
  j["id"] = r.id;
  j["coefficients"] = r.coefficients;
  j["scaling"] = {{"u", r.scaling_u}, {"v", r.scaling_v}};
  j["monic_coefficients"] = r.monic_coefficients;
  j["p"] = r.p;
  j["N"] = r.N;
  j["n"] = r.n;
  j["n_prime"] = r.n_prime;
  j["frobenius_precision"] = r.frobenius_precision;
  j["P0"] = point_json(r.P0);
  j["known"] = points_json(r.known);
  j["known_in_zero_set"] = r.known_in_zero_set;
  j["zeta"] = r.zeta;
  j["curve_points"] = r.curve_points;
  j["jacobian_order"] = r.jacobian_order;
  j["coleman_bound"] = r.coleman_bound;
  j["p0_reduction_order"] = r.p0_reduction_order;
  j["order_prime_to_p"] = r.order_prime_to_p;
  j["p_squared_free"] = r.p_squared_free;
  j["annihilator_case"] = r.annihilator_case;
  j["lambda"] = records_json(r.lambda);
  j["alpha"] = records_json(r.alpha);
  j["beta"] = records_json(r.beta);
  j["k01"] = r.k01;
  j["k02"] = r.k02;
  j["k12"] = r.k12;
  j["gamma"] = r.gamma;
  json pts = json::array();
  for (const auto& c : r.points) pts.push_back(classified_json(c));
  j["points"] = pts;
  json disks = json::array();
  for (const auto& d : r.disks) disks.push_back(disk_json(d));
  j["disks"] = disks;
  j["warnings"] = r.warnings;
  j["complete"] = r.complete;
  return j.dump(indent);
}

ZeroSetReport report_from_json(const std::string& json_text) {
  const json j = parse_text(json_text);
  ZeroSetReport r;
  try {
    r.id = j.at("id").get<std::string>();
    r.coefficients = j.at("coefficients").get<std::vector<std::string>>();
    r.scaling_u = j.at("scaling").at("u").get<std::string>();
    r.scaling_v = j.at("scaling").at("v").get<std::string>();
    r.monic_coefficients = j.at("monic_coefficients").get<std::vector<std::string>>();
    r.p = j.at("p").get<Prime>();
    r.N = j.at("N").get<int>();
    r.n = j.at("n").get<int>();
    r.n_prime = j.at("n_prime").get<int>();
    r.frobenius_precision = j.at("frobenius_precision").get<int>();
    r.P0 = point_of(j.at("P0"));
    r.known = points_of(j.at("known"));
    r.known_in_zero_set = j.at("known_in_zero_set").get<std::vector<bool>>();
    r.zeta = j.at("zeta").get<std::vector<std::string>>();
    r.curve_points = j.at("curve_points").get<std::int64_t>();
    r.jacobian_order = j.at("jacobian_order").get<std::string>();
    r.coleman_bound = j.at("coleman_bound").get<std::int64_t>();
    r.p0_reduction_order = j.at("p0_reduction_order").get<std::string>();
    r.order_prime_to_p = j.at("order_prime_to_p").get<bool>();
    r.p_squared_free = j.at("p_squared_free").get<bool>();
    r.annihilator_case = j.at("annihilator_case").get<std::string>();
    r.lambda = records_of(j.at("lambda"));
    r.alpha = records_of(j.at("alpha"));
    r.beta = records_of(j.at("beta"));
    r.k01 = j.at("k01").get<int>();
    r.k02 = j.at("k02").get<int>();
    r.k12 = j.at("k12").get<int>();
    r.gamma = j.at("gamma").get<int>();
    for (const auto& c : j.at("points")) r.points.push_back(classified_of(c));
    for (const auto& d : j.at("disks")) r.disks.push_back(disk_of(d));
    r.warnings = j.at("warnings").get<std::vector<std::string>>();
    r.complete = j.at("complete").get<bool>();
  } catch (const json::exception& e) {
    throw BadInputError(std::string("malformed report: ") + e.what());
  }
  return r;
}

std::string error_to_json(const std::string& id, ErrorKind kind, const std::string& message) {
  json j = {{"id", id}, {"error", {{"kind", to_string(kind)}, {"message", message}}}};
  return j.dump(2);
}

std::string report_summary(const ZeroSetReport& r) {
  std::ostringstream os;
  os << "curve " << (r.id.empty() ? "(unnamed)" : r.id) << " at p = " << r.p << ", N = " << r.N
     << ", n' = " << r.n_prime << "\n";
  os << "  #C(F_p) = " << r.curve_points << ", #J(F_p) = " << r.jacobian_order
     << ", bound = " << r.coleman_bound << "\n";
  os << "  P0 = " << r.P0.to_string() << " (order " << r.p0_reduction_order << " mod p)\n";
  os << "  Z modulo the involution, " << r.points.size() << " points:\n";
  for (const auto& c : r.points) {
    os << "    " << to_string(c.kind);
    if (c.rational) {
      os << "  " << c.rational->to_string();
    } else if (!c.x_minpoly.empty()) {
      os << "  " << c.x_minpoly << " = 0, " << c.y_minpoly << " = 0 over " << c.field;
    } else {
      os << "  disk " << c.point.disk.to_string();
    }
    if (!c.reduction_order.empty()) os << "  [order mod p " << c.reduction_order << "]";
    os << "\n";
  }
  for (const auto& w : r.warnings) os << "  warning: " << w << "\n";
  os << "  status: " << (r.complete ? "complete" : "incomplete") << "\n";
  return os.str();
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kBadInput:
      return kExitBadInput;
    case ErrorKind::kBadReduction:
      return kExitBadReduction;
    case ErrorKind::kSimplicity:
      return kExitSimplicity;
    case ErrorKind::kRecognition:
      return kExitRecognition;
    default:
      return kExitOther;
  }
}

int exit_code(const ZeroSetReport& r) {
  if (r.complete) return kExitOk;
  for (const auto& d : r.disks) {
    if (d.status == DiskStatus::kFailed) return kExitSimplicity;
  }
  return kExitRecognition;
}

namespace {

BatchRow row_of(const ZeroSetReport& r) {
  BatchRow row;
  row.id = r.id;
  row.p = r.p;
  row.known = r.known.size();
  row.zero_set = r.points.size();
  row.new_rational = r.of_kind(PointClass::kNewRational).size();
  row.torsion = r.of_kind(PointClass::kTorsion).size();
  row.other = r.of_kind(PointClass::kOtherAlgebraic).size();
  row.status = r.complete ? "ok" : "incomplete";
  return row;
}

}  // namespace

BatchResult run_batch(const std::vector<CurveJob>& jobs_in, int parallel) {
  std::vector<CurveJob> jobs = jobs_in;
  std::sort(jobs.begin(), jobs.end(), [](const CurveJob& a, const CurveJob& b) { return a.id < b.id; });
  for (std::size_t i = 1; i < jobs.size(); ++i) {
    if (jobs[i].id == jobs[i - 1].id) throw BadInputError("duplicate job id " + jobs[i].id);
  }
  BatchResult result;
  result.rows.resize(jobs.size());
  result.artifacts.resize(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      const CurveJob& job = jobs[i];
      BatchRow row;
      row.id = job.id;
      row.p = job.p.value_or(0);
      try {
        const ZeroSetReport r = run_job(job);
        row = row_of(r);
        result.artifacts[i] = report_to_json(r);
      } catch (const Error& e) {
        row.status = to_string(e.kind());
        result.artifacts[i] = error_to_json(job.id, e.kind(), e.what());
      } catch (const std::exception& e) {
        row.status = "error";
        result.artifacts[i] = error_to_json(job.id, ErrorKind::kDomain, e.what());
      }
      result.rows[i] = row;
    }
  };
  const int k = std::max(1, std::min<int>(parallel, static_cast<int>(jobs.size())));
  std::vector<std::thread> pool;
  for (int t = 1; t < k; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return result;
}

std::string summary_csv(const std::vector<BatchRow>& rows) {
  std::ostringstream os;
  os << "id,p,known,zero_set,new_rational,torsion,other,status\n";
  for (const auto& r : rows) {
    os << r.id << ',' << r.p << ',' << r.known << ',' << r.zero_set << ',' << r.new_rational << ','
       << r.torsion << ',' << r.other << ',' << r.status << '\n';
  }
  return os.str();
}

void write_batch(const BatchResult& result, const std::filesystem::path& out_dir) {
  std::filesystem::create_directories(out_dir);
  for (std::size_t i = 0; i < result.rows.size(); ++i) {
    std::ofstream(out_dir / (result.rows[i].id + ".json"), std::ios::binary) << result.artifacts[i] << '\n';
  }
  std::ofstream(out_dir / "summary.csv", std::ios::binary) << summary_csv(result.rows);
}

}  // namespace ccz
