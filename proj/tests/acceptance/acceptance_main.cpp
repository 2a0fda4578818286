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

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ccz/frobenius.hpp"
#include "ccz/io.hpp"
#include "ccz/pipeline.hpp"
#include "coleman_properties.hpp"
#include "root_oracle.hpp"
#include "test_support.hpp"

namespace {

using namespace ccz;
using testing::curve_of;
using testing::Example;

// Pinned tolerances.
constexpr double kRuntimeLimitSeconds = 300.0;
constexpr double kWeilTolerance = 1e-6;
constexpr int kDigitCompare = 3;  // p-adic digits compared against reference values
constexpr int kMinTrackedPrecision = 3;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [fail: " << what << "]";
    }
  }
};

struct Run {
  std::string label;
  ZeroSetReport report;
  double seconds = 0;
};

Run run(const std::string& label, const Example& e, std::optional<int> N = std::nullopt) {
  PipelineOptions o;
  o.p = e.p;
  o.N = N;
  const auto t0 = std::chrono::steady_clock::now();
  Run r{label, run_pipeline(curve_of(e), e.P0, e.known, o), 0};
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

std::vector<const ClassifiedPoint*> extras(const ZeroSetReport& r) {
  std::vector<const ClassifiedPoint*> out;
  for (const auto& c : r.points) {
    if (c.kind != PointClass::kKnown && c.kind != PointClass::kWeierstrass) out.push_back(&c);
  }
  return out;
}

bool all_known_covered(const ZeroSetReport& r) {
  if (r.known_in_zero_set.size() != r.known.size()) return false;
  for (bool b : r.known_in_zero_set) {
    if (!b) return false;
  }
  return true;
}

// Criterion 1.
void example2_end_to_end(const Run& run2, Outcome& o) {
  const auto& r = run2.report;
  o.require(all_known_covered(r), "known points not all in Z");
  o.require(r.known.size() == 5, "known set has " + std::to_string(r.known.size()) + " points");
  o.require(r.of_kind(PointClass::kWeierstrass).empty(), "unexpected Weierstrass points");
  const auto x = extras(r);
  o.require(x.size() == 2, std::to_string(x.size()) + " extra points");
  for (const auto* c : x) {
    o.require(c->x_minpoly == "x^2 - x + 1" && c->y_minpoly == "y^2 + 3",
              "extra point " + c->x_minpoly + " / " + c->y_minpoly);
    o.require(c->field == "Q(sqrt(-3))", "field " + c->field);
  }
  o.require(r.complete, "report incomplete");
  o.require(run2.seconds < kRuntimeLimitSeconds, "runtime");
  o.detail << " classes=" << r.points.size() << " extras=" << x.size() << " N=" << r.N
           << " time=" << run2.seconds << "s";
}

mpz_class residue_ratio(const PadicNumber& a, const PadicNumber& b, int k) {
  return (a / b).residue(k);
}

mpz_class base7(std::initializer_list<long> digits) {
  mpz_class v = 0;
  mpz_class pk = 1;
  for (long d : digits) {
    v += pk * d;
    pk *= 7;
  }
  return v;
}

// Criterion 2.
void example2_annihilator(Outcome& o) {
  const Example e = testing::example2();
  const auto C = curve_of(e);
  const int n = 18;
  const IntegrationContext ctx(C, e.p, n);
  const auto basis = compute_annihilator(ctx, to_padic(C.from_original(e.P0), e.p, n));
  // Reference digits (constant first), base 7.
  const PadicNumber a0 = PadicNumber::from_integer(7, base7({1, 2, 1, 2, 5}), 5);
  const PadicNumber a1 = PadicNumber::from_integer(7, base7({4, 0, 1, 0, 5}), 5);
  const PadicNumber b0 = PadicNumber::from_integer(7, base7({6, 3, 2, 0, 5}), 5);
  const PadicNumber b2 = a1;
  const auto& A = basis.alpha.c;
  const auto& B = basis.beta.c;
  o.require(A[1].is_unit() && B[2].is_unit(), "alpha/beta lack the reference unit coefficient");
  if (A[1].is_unit() && B[2].is_unit()) {
    o.require(residue_ratio(A[0], A[1], kDigitCompare) == residue_ratio(a0, a1, kDigitCompare),
              "alpha digits");
    o.require(residue_ratio(B[0], B[2], kDigitCompare) == residue_ratio(b0, b2, kDigitCompare),
              "beta digits");
  }
  o.require(A[2].is_zero() && A[2].absolute_precision() >= kDigitCompare, "alpha has a w2 term");
  o.require(B[1].is_zero() && B[1].absolute_precision() >= kDigitCompare, "beta has a w1 term");

  DiskAnalysis d;
  d.disk = FpPoint{false, 2, 4};
  d.kind = disk_kind(d.disk);
  search_disk(ctx, basis, d);
  auto residues = [](const std::vector<RootSummary>& roots) {
    std::set<mpz_class> s;
    for (const auto& r : roots) s.insert(from_record(r.t).residue(kDigitCompare));
    return s;
  };
  const std::set<mpz_class> rf = residues(d.roots_f);
  const std::set<mpz_class> rg = residues(d.roots_g);
  const std::set<mpz_class> r1 = {mpz_class(6 * 7 + 5 * 49)};
  const std::set<mpz_class> r2 = {mpz_class(6 * 7 + 2 * 49)};
  o.require((rf == r1 && rg == r2) || (rf == r2 && rg == r1), "disk (2,4) roots");
  o.require(d.common.empty(), "disk (2,4) has a common root");
  o.detail << " n'=" << basis.n_prime << " roots_f=" << d.roots_f.size() << " roots_g=" << d.roots_g.size()
           << " common=" << d.common.size();
}

// Criterion 3.
void example2_p11(const Run& run, Outcome& o) {
  const auto& r = run.report;
  o.require(all_known_covered(r), "known points not all in Z");
  o.require(extras(r).empty(), std::to_string(extras(r).size()) + " non-Weierstrass extras");
  o.require(r.complete, "report incomplete");
  o.detail << " classes=" << r.points.size() << " weierstrass=" << r.of_kind(PointClass::kWeierstrass).size()
           << " (Q_11 Weierstrass points are 2-torsion and lie in Z on any model)";
}

// Criterion 4.
void example1(const Run& run, Outcome& o) {
  const auto& r = run.report;
  o.require(all_known_covered(r), "known points not all in Z");
  const auto W = r.of_kind(PointClass::kWeierstrass);
  o.require(W.size() == 3, "|W| = " + std::to_string(W.size()));
  const auto x = extras(r);
  o.require(x.size() == 1, std::to_string(x.size()) + " extra classes");
  for (const auto* c : x) {
    o.require(c->kind == PointClass::kTorsion, std::string("class ") + to_string(c->kind));
    o.require(c->x_minpoly == "x" && c->y_minpoly == "y^2 - 8", c->x_minpoly + " / " + c->y_minpoly);
    o.require(c->reduction_order == "12", "reduction order " + c->reduction_order);
  }
  o.require(r.complete, "report incomplete");
  o.detail << " |W|=" << W.size() << " extras=" << x.size();
}

// Criterion 5.
void example3(const Run& run, Outcome& o) {
  const auto& r = run.report;
  o.require(all_known_covered(r), "known points not all in Z");
  const auto W = r.of_kind(PointClass::kWeierstrass);
  o.require(W.size() == 2, "|W| = " + std::to_string(W.size()));
  const auto x = extras(r);
  o.require(x.size() == 1, std::to_string(x.size()) + " extra classes");
  for (const auto* c : x) {
    o.require(c->kind == PointClass::kOtherAlgebraic, std::string("class ") + to_string(c->kind));
    o.require(c->x_minpoly == "x + 1" && c->y_minpoly == "y^2 + 140", c->x_minpoly + " / " + c->y_minpoly);
    o.require(!c->gamma_vanishes, "gamma integral vanishes");
  }
  o.require(r.complete, "report incomplete");
  o.detail << " |W|=" << W.size() << " extras=" << x.size();
}

// #C(F_p) on the input model by Legendre symbols, independent of the library.
std::int64_t naive_point_count(const HyperellipticCurve& C, Prime p) {
  std::vector<mpz_class> g;
  for (const auto& c : C.original()) {
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), c.get_den().get_mpz_t(), mpz_class(p).get_mpz_t());
    g.push_back(mpz_class(c.get_num() * inv) % p);
  }
  std::int64_t count = 1;  // one point at infinity for odd degree
  for (long x = 0; x < p; ++x) {
    mpz_class v = 0;
    for (auto it = g.rbegin(); it != g.rend(); ++it) v = (v * x + *it) % p;
    if (v < 0) v += p;
    count += 1 + mpz_jacobi(v.get_mpz_t(), mpz_class(p).get_mpz_t());
  }
  return count;
}

// Criterion 6.
void zeta_certification(Outcome& o) {
  std::vector<std::pair<HyperellipticCurve, Prime>> curves = {
      {curve_of(testing::example1()), 7}, {curve_of(testing::example2()), 7}, {curve_of(testing::example3()), 11}};
  std::mt19937_64 rng(2026);
  for (Prime p : {7, 11}) {
    for (int i = 0; i < 3; ++i) curves.emplace_back(testing::random_good_curve(rng, p), p);
  }
  double worst = 0;
  for (const auto& [C, p] : curves) {
    const ZetaNumerator z = zeta_numerator(frobenius_data(C, p, 6));
    const ZetaNumerator brute = brute_force_zeta(C, p);
    const std::string tag = qpoly::to_string(C.original(), "x") + " p=" + std::to_string(p);
    o.require(z.coefficients == brute.coefficients, "L(T) differs from point counts for " + tag);
    o.require(z.curve_points() == naive_point_count(C, p), "#C(F_p) for " + tag);
    mpz_class pk = 1;
    bool symmetric = true;
    for (int i = 3; i >= 0; --i) {
      symmetric = symmetric && z.coefficients[static_cast<std::size_t>(6 - i)] == pk * z.coefficients[static_cast<std::size_t>(i)];
      pk *= p;
    }
    o.require(symmetric && z.functional_equation_holds(), "functional equation for " + tag);
    worst = std::max(worst, z.weil_deviation());
  }
  o.require(worst < kWeilTolerance, "Weil deviation");
  o.detail << " curves=" << curves.size() << " max||alpha|-sqrt(p)|=" << worst;
}

// Criterion 7.
void coleman_properties(Outcome& o) {
  std::vector<std::pair<HyperellipticCurve, Prime>> curves = {
      {curve_of(testing::example1()), 7}, {curve_of(testing::example2()), 7}, {curve_of(testing::example3()), 11}};
  std::mt19937_64 rng(77);
  curves.emplace_back(testing::random_good_curve(rng, 7), 7);
  curves.emplace_back(testing::random_good_curve(rng, 11), 11);
  int checks = 0;
  int min_prec = kExactPrecision;
  std::uint64_t seed = 100;
  for (const auto& [C, p] : curves) {
    const auto t = testing::coleman_property_suite(C, p, 10, 20, seed++);
    checks += t.checks;
    min_prec = std::min(min_prec, t.min_precision);
    for (const auto& note : t.notes) o.require(false, note);
    o.require(t.ok(), "property failures on " + qpoly::to_string(C.original(), "x"));
  }
  o.require(min_prec >= kMinTrackedPrecision, "tracked precision below 3 digits");
  o.detail << " curves=" << curves.size() << " checks=" << checks << " min_precision=" << min_prec;
}

// Criterion 8.
void root_oracle(const std::vector<Run>& runs, Outcome& o) {
  for (Prime p : {7, 11, 13}) {
    const auto t = testing::root_oracle_suite(p, 100, static_cast<std::uint64_t>(1000 + p));
    for (const auto& note : t.notes) o.require(false, note);
    o.require(t.ok() && t.series == 100, "p=" + std::to_string(p));
    o.detail << " p=" << p << ":" << t.series << "/" << t.skipped << "skipped";
  }
  int disks = 0;
  for (const auto& r : runs) {
    for (const auto& d : r.report.disks) {
      if (d.status == DiskStatus::kRuledOut) continue;
      ++disks;
      o.require(d.valuation_lemma, r.label + " disk " + d.disk.to_string() + " valuation lemma");
      o.require(static_cast<int>(d.roots_f.size()) <= d.order_alpha + 1, r.label + " f roots > m_f + 1");
      o.require(static_cast<int>(d.roots_g.size()) <= d.order_beta + 1, r.label + " g roots > m_g + 1");
    }
  }
  o.detail << " pipeline_disks=" << disks;
}

// Criterion 9.
void disk_bounds(const std::vector<Run>& runs, Outcome& o) {
  for (const auto& r : runs) {
    const auto& rep = r.report;
    for (const auto& d : rep.disks) {
      const std::size_t cap = d.kind == DiskKind::kGeneric ? 2 : 3;
      const std::size_t in_disk = d.status == DiskStatus::kRuledOut ? d.known_in_disk.size() : d.common.size();
      o.require(in_disk <= cap, r.label + " disk " + d.disk.to_string());
    }
    // Classes away from infinity and W stand for two points.
    std::size_t full_z = 0;
    std::size_t rational = 0;
    for (const auto& c : rep.points) {
      const bool fixed = c.point.infinity || c.kind == PointClass::kWeierstrass || (c.rational && c.rational->y == 0);
      const std::size_t w = fixed ? 1 : 2;
      full_z += w;
      if (c.rational) rational += w;
    }
    const auto bound = static_cast<std::size_t>(rep.curve_points + 4);
    o.require(rational <= bound, r.label + " rational count");
    o.require(full_z <= bound, r.label + " |Z| exceeds #C(F_p) + 4");
    o.detail << " " << r.label << ":" << rational << "/" << full_z << "<=" << bound;
  }
}

// Criterion 10.
void determinism(Outcome& o) {
  std::vector<CurveJob> jobs = {testing::job_of(testing::example1()), testing::job_of(testing::example2()),
                                testing::job_of(testing::example3())};
  const BatchResult serial = run_batch(jobs, 1);
  const BatchResult parallel = run_batch(jobs, 8);
  o.require(serial.artifacts == parallel.artifacts, "artifacts differ");
  o.require(summary_csv(serial.rows) == summary_csv(parallel.rows), "summaries differ");
  for (const auto& row : serial.rows) o.require(row.status == "ok", row.id + " status " + row.status);

  CurveJob bad = testing::job_of(testing::example3());
  bad.id = "injected_bad";
  bad.p = 7;
  jobs.push_back(bad);
  const BatchResult mixed = run_batch(jobs, 8);
  std::size_t failed = 0;
  for (std::size_t i = 0; i < mixed.rows.size(); ++i) {
    const auto& row = mixed.rows[i];
    if (row.id == "injected_bad") {
      o.require(row.status == "bad_reduction", "injected job status " + row.status);
      ++failed;
      continue;
    }
    if (row.status != "ok") ++failed;
    const auto it = std::find_if(serial.rows.begin(), serial.rows.end(),
                                 [&](const BatchRow& s) { return s.id == row.id; });
    o.require(it != serial.rows.end() &&
                  serial.artifacts[static_cast<std::size_t>(it - serial.rows.begin())] == mixed.artifacts[i],
              row.id + " changed next to a failing job");
  }
  o.require(failed == 1, std::to_string(failed) + " failed jobs");
  o.detail << " jobs=" << serial.rows.size() << " bytes=" << [&] {
    std::size_t b = 0;
    for (const auto& a : serial.artifacts) b += a.size();
    return b;
  }();
}

}  // namespace

int main() {
  std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria;
  std::vector<Run> runs;
  std::cout << "running pipelines..." << std::endl;
  runs.push_back(run("ex2_p7", testing::example2(), 18));
  runs.push_back(run("ex2_p11", testing::example2(11)));
  runs.push_back(run("ex1_p7", testing::example1()));
  runs.push_back(run("ex3_p11", testing::example3()));

  criteria.emplace_back("ex2 end-to-end at p = 7", [&](Outcome& o) { example2_end_to_end(runs[0], o); });
  criteria.emplace_back("ex2 annihilator digits and disk (2,4) roots", example2_annihilator);
  criteria.emplace_back("ex2 at p = 11", [&](Outcome& o) { example2_p11(runs[1], o); });
  criteria.emplace_back("ex1 at p = 7", [&](Outcome& o) { example1(runs[2], o); });
  criteria.emplace_back("ex3 at p = 11", [&](Outcome& o) { example3(runs[3], o); });
  criteria.emplace_back("zeta certification", zeta_certification);
  criteria.emplace_back("Coleman integral properties", coleman_properties);
  criteria.emplace_back("root solver oracle", [&](Outcome& o) { root_oracle(runs, o); });
  criteria.emplace_back("disk cardinality bounds", [&](Outcome& o) { disk_bounds(runs, o); });
  criteria.emplace_back("determinism and isolation", determinism);

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    failures += o.pass ? 0 : 1;
    std::cout << "CRITERION " << i + 1 << " " << (o.pass ? "PASS" : "FAIL") << " " << criteria[i].first << ":"
              << o.detail.str() << std::endl;
  }
  std::cout << (failures == 0 ? "ALL PASS" : std::to_string(failures) + " FAILED") << std::endl;
  return failures == 0 ? 0 : 1;
}
