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

// ccz: Chabauty-Coleman zero sets of genus 3 hyperelliptic curves.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "ccz/coleman.hpp"
#include "ccz/frobenius.hpp"
#include "ccz/io.hpp"
#include "json.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

// Accepts "inf", "x,y" or the JSON forms "inf" / ["x","y"].
ccz::RationalPoint point_arg(const std::string& s) {
  if (s == "inf" || s == "\"inf\"") return ccz::RationalPoint::at_infinity();
  if (!s.empty() && s.front() == '[') return ccz::parse_point(s);
  const auto comma = s.find(',');
  if (comma == std::string::npos) throw ccz::BadInputError("point must be inf or x,y: " + s);
  return ccz::RationalPoint::affine(ccz::parse_rational(s.substr(0, comma)),
                                    ccz::parse_rational(s.substr(comma + 1)));
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ccz::BadInputError("cannot write " + path.string());
  out << text;
}

int fail(const std::string& id, const ccz::Error& e) {
  std::cout << ccz::error_to_json(id, e.kind(), e.what()) << "\n";
  return ccz::exit_code(e.kind());
}

int cmd_analyze(const std::string& job_file, std::optional<ccz::Prime> p, std::optional<int> N,
                const std::string& out_dir, bool trace) {
  ccz::CurveJob job;
  try {
    job = ccz::read_curve(job_file);
  } catch (const ccz::Error& e) {
    return fail("", e);
  }
  if (p) job.p = p;
  if (N) job.N = N;
  ccz::PipelineOptions opt;
  if (trace) opt.trace = [](const std::string& line) { std::cerr << line << "\n"; };
  try {
    const ccz::ZeroSetReport report = ccz::run_job(job, opt);
    const std::string text = ccz::report_to_json(report);
    if (out_dir.empty()) {
      std::cout << text << "\n";
      std::cerr << ccz::report_summary(report);
    } else {
      fs::create_directories(out_dir);
      write_text(fs::path(out_dir) / (job.id + ".json"), text + "\n");
      write_text(fs::path(out_dir) / (job.id + ".txt"), ccz::report_summary(report));
      std::cout << ccz::report_summary(report);
    }
    return ccz::exit_code(report);
  } catch (const ccz::Error& e) {
    const std::string err = ccz::error_to_json(job.id, e.kind(), e.what());
    if (!out_dir.empty()) {
      fs::create_directories(out_dir);
      write_text(fs::path(out_dir) / (job.id + ".json"), err + "\n");
    }
    std::cout << err << "\n";
    return ccz::exit_code(e.kind());
  }
}

int cmd_batch(const std::string& jobs_file, int parallel, const std::string& out_dir) {
  std::vector<ccz::CurveJob> jobs;
  try {
    jobs = ccz::read_jobs(jobs_file);
  } catch (const ccz::Error& e) {
    return fail("", e);
  }
  const ccz::BatchResult result = ccz::run_batch(jobs, parallel);
  ccz::write_batch(result, out_dir);
  std::cout << ccz::summary_csv(result.rows);
  return ccz::kExitOk;
}

int cmd_zeta(const std::string& curve_file, ccz::Prime p, bool brute) {
  try {
    const ccz::CurveJob job = ccz::read_curve(curve_file);
    const ccz::HyperellipticCurve curve = ccz::job_curve(job);
    curve.require_good_reduction(p);
    const ccz::FrobeniusData fd = ccz::frobenius_data(curve, p, 6);
    const ccz::ZetaNumerator z = ccz::zeta_numerator(fd);
    json j;
    j["p"] = p;
    json coeffs = json::array();
    for (const auto& a : z.coefficients) coeffs.push_back(a.get_str());
    j["zeta"] = coeffs;
    j["curve_points"] = z.curve_points();
    j["jacobian_order"] = z.jacobian_order().get_str();
    j["coleman_bound"] = z.curve_points() + 2 * ccz::kGenus - 2;
    j["functional_equation"] = z.functional_equation_holds();
    j["weil_deviation"] = z.weil_deviation();
    int code = ccz::kExitOk;
    if (brute) {
      const bool same = ccz::brute_force_zeta(curve, p).coefficients == z.coefficients;
      j["brute_check"] = same;
      if (!same) code = ccz::kExitOther;
    }
    std::cout << j.dump(2) << "\n";
    return code;
  } catch (const ccz::Error& e) {
    return fail("", e);
  }
}

int cmd_search(const std::string& curve_file, std::int64_t height) {
  try {
    const ccz::CurveJob job = ccz::read_curve(curve_file);
    const ccz::HyperellipticCurve curve = ccz::job_curve(job);
    json pts = json::array();
    for (const auto& q : ccz::search_rational_points(curve, height)) {
      pts.push_back(json::parse(ccz::point_to_json(curve.to_original(q))));
    }
    std::cout << json{{"height", height}, {"points", pts}}.dump(2) << "\n";
    return ccz::kExitOk;
  } catch (const ccz::Error& e) {
    return fail("", e);
  }
}

int cmd_integrate(const std::string& curve_file, ccz::Prime p, int form, const std::string& from,
                  const std::string& to, std::optional<int> n_opt) {
  try {
    const ccz::CurveJob job = ccz::read_curve(curve_file);
    const ccz::HyperellipticCurve curve = ccz::job_curve(job);
    curve.require_good_reduction(p);
    if (form < 0 || form >= ccz::kGenus) throw ccz::BadInputError("form index must be 0, 1 or 2");
    const int n = n_opt.value_or(2 * static_cast<int>(p) + 4);
    const ccz::RationalPoint P = point_arg(from);
    const ccz::RationalPoint Q = point_arg(to);
    for (const auto* pt : {&P, &Q}) {
      if (!pt->infinity && !curve.original_contains(*pt)) {
        throw ccz::BadInputError("point not on the curve: " + pt->to_string());
      }
    }
    const ccz::IntegrationContext ctx(curve, p, n);
    const ccz::PadicNumber v =
        ccz::coleman_integral(ctx, ccz::DifferentialForm::basis(p, form),
                              ccz::to_padic(curve.from_original(P), p, n),
                              ccz::to_padic(curve.from_original(Q), p, n));
    const ccz::PadicRecord r = ccz::to_record(v);
    // The forms are x^i dx/2y on the monic model.
    json j = {{"p", p},         {"form", form},
              {"from", json::parse(ccz::point_to_json(P))},
              {"to", json::parse(ccz::point_to_json(Q))},
              {"value", {{"p", r.prime}, {"val", r.valuation}, {"unit", r.unit}, {"prec", r.absolute_precision}}},
              {"digits", v.to_digits()}};
    std::cout << j.dump(2) << "\n";
    return ccz::kExitOk;
  } catch (const ccz::Error& e) {
    return fail("", e);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Chabauty-Coleman zero sets for genus 3 odd-degree hyperelliptic curves"};
  app.require_subcommand(1);

  std::string job_file;
  std::optional<ccz::Prime> p_opt;
  std::optional<int> n_opt;
  std::string out_dir;
  bool trace = false;
  auto* analyze = app.add_subcommand("analyze", "Zero set of one job");
  analyze->add_option("--job", job_file, "Job file (JSON object)")->required()->check(CLI::ExistingFile);
  analyze->add_option("--p", p_opt, "Prime of good reduction (>= 7)");
  analyze->add_option("--N", n_opt, "Working precision (default 2p + 4)");
  analyze->add_option("--out", out_dir, "Directory for <id>.json and <id>.txt");
  analyze->add_flag("--trace", trace, "Per-disk trace on stderr");

  std::string jobs_file;
  int parallel = 1;
  std::string batch_out;
  auto* batch = app.add_subcommand("batch", "Run a JSON-lines job file");
  batch->add_option("--jobs", jobs_file, "Jobs file")->required()->check(CLI::ExistingFile);
  batch->add_option("--parallel", parallel, "Worker count")->check(CLI::Range(1, 256));
  batch->add_option("--out", batch_out, "Output directory")->required();

  std::string curve_file;
  ccz::Prime p = 0;
  bool brute = false;
  auto* zeta = app.add_subcommand("zeta", "Zeta numerator and group order");
  zeta->add_option("--curve", curve_file, "Curve file")->required()->check(CLI::ExistingFile);
  zeta->add_option("--p", p, "Prime")->required();
  zeta->add_flag("--brute-check", brute, "Compare against exhaustive point counts");

  std::int64_t height = ccz::kDefaultSearchHeight;
  auto* search = app.add_subcommand("search-points", "Rational points of bounded height");
  search->add_option("--curve", curve_file, "Curve file")->required()->check(CLI::ExistingFile);
  search->add_option("--height", height, "Bound on max(|num|, |den|) of x");

  int form = 0;
  std::string from;
  std::string to;
  auto* integrate = app.add_subcommand("integrate", "Coleman integral of x^i dx/2y");
  integrate->add_option("--curve", curve_file, "Curve file")->required()->check(CLI::ExistingFile);
  integrate->add_option("--p", p, "Prime")->required();
  integrate->add_option("--form", form, "Form index i in 0..2")->required();
  integrate->add_option("--from", from, "inf or x,y (input model)")->required();
  integrate->add_option("--to", to, "inf or x,y (input model)")->required();
  integrate->add_option("--N", n_opt, "Working precision (default 2p + 4)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : ccz::kExitBadInput;
  }

  try {
    if (*analyze) return cmd_analyze(job_file, p_opt, n_opt, out_dir, trace);
    if (*batch) return cmd_batch(jobs_file, parallel, batch_out);
    if (*zeta) return cmd_zeta(curve_file, p, brute);
    if (*search) return cmd_search(curve_file, height);
    if (*integrate) return cmd_integrate(curve_file, p, form, from, to, n_opt);
  } catch (const ccz::Error& e) {
    return fail("", e);
  } catch (const std::exception& e) {
    std::cerr << "ccz: " << e.what() << "\n";
    return ccz::kExitOther;
  }
  return ccz::kExitOther;
}
