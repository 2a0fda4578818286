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

#include "ccz/pipeline.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "ccz/jacobian.hpp"
#include "ccz/recognize.hpp"

namespace ccz {

const char* to_string(AnnihilatorCase c) {
  return c == AnnihilatorCase::kGeneric ? "generic" : "lambda0_zero";
}

const char* to_string(DiskStatus s) {
  switch (s) {
    case DiskStatus::kRuledOut:
      return "ruled_out";
    case DiskStatus::kSearched:
      return "searched";
    case DiskStatus::kFailed:
      return "failed";
  }
  return "?";
}

const char* to_string(PointClass c) {
  switch (c) {
    case PointClass::kKnown:
      return "known";
    case PointClass::kNewRational:
      return "new_rational";
    case PointClass::kWeierstrass:
      return "weierstrass";
    case PointClass::kTorsion:
      return "torsion";
    case PointClass::kOtherAlgebraic:
      return "other_algebraic";
    case PointClass::kUnrecognized:
      return "unrecognized";
  }
  return "?";
}

std::vector<const ClassifiedPoint*> ZeroSetReport::of_kind(PointClass c) const {
  std::vector<const ClassifiedPoint*> out;
  for (const auto& pt : points) {
    if (pt.kind == c) out.push_back(&pt);
  }
  return out;
}

namespace {

int order_of(const PadicNumber& a) { return a.is_zero() ? a.absolute_precision() : a.valuation(); }

DifferentialForm make_form(const PadicNumber& c0, const PadicNumber& c1, const PadicNumber& c2, int k) {
  DifferentialForm f;
  f.c = {c0.shifted(-k), c1.shifted(-k), c2.shifted(-k)};
  return f;
}

int form_precision(const DifferentialForm& f) {
  int n = kExactPrecision;
  for (const auto& c : f.c) n = std::min(n, c.absolute_precision());
  return n;
}

CurvePoint from_zero_point(const ZeroPoint& z) {
  if (z.infinity) return CurvePoint::at_infinity();
  return CurvePoint::affine(from_record(z.x), from_record(z.y));
}

ZeroPoint to_zero_point(const FpPoint& disk, const PadicNumber& t, const CurvePoint& Q) {
  ZeroPoint z;
  z.disk = disk;
  z.t = to_record(t);
  z.infinity = Q.infinity;
  if (!Q.infinity) {
    z.x = to_record(Q.x);
    z.y = to_record(Q.y);
  }
  return z;
}

bool same_point(const CurvePoint& a, const CurvePoint& b) {
  if (a.infinity || b.infinity) return a.infinity == b.infinity;
  return (a.x - b.x).is_zero() && (a.y - b.y).is_zero();
}

std::string poly_string(const QPoly& f, const std::string& var) { return qpoly::to_string(f, var); }

}  // namespace

AnnihilatorBasis compute_annihilator(const IntegrationContext& ctx, const CurvePoint& P0) {
  const int n = ctx.precision();
  AnnihilatorBasis b;
  b.lambda = integrals_from_infinity(ctx, P0);
  const auto& l = b.lambda;
  if (l[0].is_zero() && l[1].is_zero() && l[2].is_zero()) {
    throw PrecisionError("compute_annihilator: all integrals vanish at working precision");
  }
  const int o0 = order_of(l[0]);
  const int o1 = order_of(l[1]);
  const int o2 = order_of(l[2]);
  b.k01 = std::min(o0, o1);
  b.k02 = std::min(o0, o2);
  b.k12 = std::min(o1, o2);
  const Prime p = ctx.prime();
  const PadicNumber zero = PadicNumber::zero(p);
  int formula = 0;
  if (l[0].is_zero() && l[0].absolute_precision() >= n) {
    b.kase = AnnihilatorCase::kLambda0Zero;
    b.alpha = DifferentialForm::basis(p, 0);
    b.beta = make_form(zero, -l[2], l[1], b.k12);
    formula = n - b.k12;
    b.warnings.push_back("lambda_0 vanishes to the working precision and is treated as zero");
  } else {
    b.alpha = make_form(-l[1], l[0], zero, b.k01);
    b.beta = make_form(-l[2], zero, l[0], b.k02);
    formula = n - std::max(b.k01, b.k02);
  }
  b.n_prime = std::min({formula, form_precision(b.alpha), form_precision(b.beta)});
  if (b.n_prime < formula) {
    b.warnings.push_back("n' lowered from " + std::to_string(formula) + " to " +
                         std::to_string(b.n_prime) + " by the precision of the integrals");
  }
  if (b.n_prime < 1) throw PrecisionError("compute_annihilator: no precision left for alpha, beta");
  b.alpha = b.alpha.with_absolute_precision(b.n_prime);
  b.beta = b.beta.with_absolute_precision(b.n_prime);
  if (!b.alpha.is_unit_normalized() || !b.beta.is_unit_normalized()) {
    throw PrecisionError("compute_annihilator: alpha or beta vanishes mod p");
  }
  return b;
}

int gamma_index(const AnnihilatorBasis& basis) {
  // Least j with w_j outside span(alpha, beta) mod p; otherwise the j whose
  // determinant has least valuation.
  const auto& A = basis.alpha.c;
  const auto& B = basis.beta.c;
  int best = 0;
  int best_val = kExactPrecision + 1;
  for (std::size_t j = 0; j < static_cast<std::size_t>(kGenus); ++j) {
    const std::size_t a = (j + 1) % 3;
    const std::size_t b = (j + 2) % 3;
    const PadicNumber det = A[a] * B[b] - A[b] * B[a];
    const int v = det.is_zero() ? kExactPrecision : det.valuation();
    if (v == 0) return static_cast<int>(j);
    if (v < best_val) {
      best_val = v;
      best = static_cast<int>(j);
    }
  }
  return best;
}

std::optional<RationalPoint> choose_base_point(const HyperellipticCurve& curve,
                                               const std::vector<RationalPoint>& candidates,
                                               Prime p, int n) {
  std::vector<RationalPoint> sorted = candidates;
  std::sort(sorted.begin(), sorted.end());
  IntegrationContext ctx(curve, p, n);
  for (const auto& c : sorted) {
    if (c.infinity || c.y == 0 || !curve.original_contains(c)) continue;
    const auto I = integrals_from_infinity(ctx, to_padic(curve.from_original(c), p, n));
    if (!I[0].is_zero() || !I[1].is_zero() || !I[2].is_zero()) return c;
  }
  return std::nullopt;
}

std::vector<DiskAnalysis> triage_disks(const IntegrationContext& ctx, const AnnihilatorBasis& basis,
                                       const std::vector<RationalPoint>& known) {
  const Prime p = ctx.prime();
  const auto& curve = ctx.curve();
  std::vector<DiskAnalysis> out;
  for (const FpPoint& d : fp_points(curve, p)) {
    if (involution(d, p) < d) continue;
    DiskAnalysis a;
    a.disk = d;
    a.kind = disk_kind(d);
    for (const auto& k : known) {
      if (reduce(k, p) == d) a.known_in_disk.push_back(k);
    }
    const auto o = form_orders_mod_p(curve, basis.alpha, basis.beta, d, p);
    a.order_alpha = o[0];
    a.order_beta = o[1];
    a.m = std::min(o[0], o[1]);
    const bool enough = static_cast<int>(a.known_in_disk.size()) == a.m + 1 && a.m < p - 2;
    a.status = enough ? DiskStatus::kRuledOut : DiskStatus::kSearched;
    out.push_back(std::move(a));
  }
  return out;
}

namespace {

std::vector<PadicNumber> scaled_polynomial(const PadicPowerSeries& f, int M, int n) {
  int removed = 0;
  const PadicPowerSeries g = strip_zero_root(f.truncated(M), &removed);
  std::vector<PadicNumber> h;
  int k = kExactPrecision;
  for (int i = 0; i < g.t_precision(); ++i) {
    h.push_back(g[i].with_absolute_precision(n).shifted(i));
    if (!h.back().is_zero()) k = std::min(k, h.back().valuation());
  }
  if (k >= kExactPrecision) return {};
  for (auto& c : h) c = c.shifted(-k);
  return h;
}

std::vector<RootSummary> summarize(const RootReport& r) {
  std::vector<RootSummary> out;
  for (const auto& x : r.roots) out.push_back({to_record(x.t), x.precision, x.simple});
  return out;
}

}  // namespace

void search_disk(const IntegrationContext& ctx, const AnnihilatorBasis& basis, DiskAnalysis& disk,
                 std::optional<int> M_override) {
  const Prime p = ctx.prime();
  const int n = ctx.precision();
  const int np = basis.n_prime;
  const auto& curve = ctx.curve();
  disk.n_prime = np;
  disk.common.clear();
  disk.roots_f.clear();
  disk.roots_g.clear();

  CurvePoint center;
  PadicNumber cf = PadicNumber::zero(p);
  PadicNumber cg = PadicNumber::zero(p);
  if (!disk.known_in_disk.empty()) {
    disk.center_known = true;
    center = to_padic(disk.known_in_disk.front(), p, n);
  } else {
    disk.center_known = false;
    center = canonical_lift(curve, disk.disk, p, n);
    const auto I = integrals_from_infinity(ctx, center);
    cf = pair(basis.alpha, I);
    cg = pair(basis.beta, I);
  }

  // The t-adic truncation depends on m_f, read off a short expansion first.
  const auto orders = form_orders_mod_p(curve, basis.alpha, basis.beta, disk.disk, p);
  TruncationPolicy pf = truncation_parameters(np, p, orders[0]);
  TruncationPolicy pg = truncation_parameters(np, p, orders[1]);
  if (M_override) pf.M = pg.M = *M_override;
  const int M = std::max(pf.M, pg.M);
  disk.M = M;
  const LocalExpansion exp = local_coordinate(curve, center, p, M, n);

  auto antiderivative = [&](const DifferentialForm& form, const PadicNumber& c) {
    const PadicPowerSeries d = expand_differential(form, exp);
    PadicPowerSeries f = d.integral();
    if (!c.is_exact_zero()) f = f + PadicPowerSeries::constant(c, f.t_precision());
    return f.truncated(M).with_absolute_precision(np);
  };
  const PadicPowerSeries f = antiderivative(basis.alpha, cf);
  const PadicPowerSeries g = antiderivative(basis.beta, cg);

  disk.bound_f = root_count_bound(expand_differential(basis.alpha, exp));
  disk.bound_g = root_count_bound(expand_differential(basis.beta, exp));
  const RootReport rf = roots_in_pZp(f, pf);
  const RootReport rg = roots_in_pZp(g, pg);
  disk.k_f = rf.k;
  disk.k_g = rg.k;
  disk.certified_f = rf.all_simple_certified;
  disk.certified_g = rg.all_simple_certified;
  disk.valuation_lemma = rf.valuation_lemma_holds && rg.valuation_lemma_holds;
  disk.roots_f = summarize(rf);
  disk.roots_g = summarize(rg);
  try {
    const auto hf = scaled_polynomial(f, pf.M, np);
    disk.discriminant_f = hf.size() > 1 ? simplicity_check(hf) : true;
    const auto hg = scaled_polynomial(g, pg.M, np);
    disk.discriminant_g = hg.size() > 1 ? simplicity_check(hg) : true;
  } catch (const Error&) {
    disk.discriminant_f = disk.discriminant_g = false;
  }

  if (!disk.certified_f && !disk.certified_g) {
    disk.status = DiskStatus::kFailed;
    disk.diagnostic = "neither f nor g has only simple roots at the available precision";
    return;
  }
  const RootReport& primary = disk.certified_f ? rf : rg;
  const RootReport& other = disk.certified_f ? rg : rf;
  for (const auto& r : primary.roots) {
    bool common = false;
    for (const auto& s : other.roots) {
      if ((r.t - s.t).is_zero()) {
        common = true;
        break;
      }
    }
    if (!common) continue;
    const CurvePoint Q = point_at(exp, r.t);
    disk.common.push_back(to_zero_point(disk.disk, r.t, Q));
  }
  disk.status = DiskStatus::kSearched;
}

namespace {

struct Classifier {
  const IntegrationContext& ctx;
  const AnnihilatorBasis& basis;
  const JacobianFp& jac;
  const mpz_class& group_order;
  const std::vector<RationalPoint>& known;  // monic model
  int gamma;

  ClassifiedPoint classify(const ZeroPoint& z) const {
    const Prime p = ctx.prime();
    const auto& curve = ctx.curve();
    ClassifiedPoint c;
    c.point = z;
    c.gamma = gamma;
    const CurvePoint Q = from_zero_point(z);
    for (const auto& k : known) {
      if (reduce(k, p) != z.disk) continue;
      const CurvePoint K = to_padic(k, p, ctx.precision());
      if (same_point(K, Q)) {
        c.kind = PointClass::kKnown;
        c.rational = curve.to_original(k);
        c.field = "Q";
        return c;
      }
    }
    if (Q.infinity) {
      c.kind = PointClass::kKnown;
      c.rational = RationalPoint::at_infinity();
      c.field = "Q";
      return c;
    }
    try {
      c.reduction_order = jac.element_order(jac.point_class(reduce(Q, p)), group_order).get_str();
    } catch (const Error&) {
      c.reduction_order.clear();
    }
    const bool weierstrass = !z.disk.infinity && z.disk.y == 0 && Q.y.is_zero();
    const Scaling& s = curve.scaling();
    const int nx = Q.x.absolute_precision();
    const int ny = Q.y.absolute_precision();
    const PadicNumber xo = PadicNumber::from_rational(p, s.u, nx) * Q.x;
    const PadicNumber yo = PadicNumber::from_rational(p, s.v, ny) * Q.y;
    std::optional<AlgebraicPoint> alg;
    try {
      alg = recognize_point(curve.original(), xo, yo);
    } catch (const Error&) {
      alg.reset();
    }
    if (alg) {
      c.x_minpoly = poly_string(alg->x_minpoly, "x");
      c.y_minpoly = poly_string(alg->y_minpoly, "y");
      c.field = alg->degree == 1 ? std::string("Q") : "Q(sqrt(" + alg->field.get_str() + "))";
    }
    if (alg && alg->degree == 1) {
      c.rational = RationalPoint::affine(alg->x.r, alg->y.r);
      c.kind = weierstrass ? PointClass::kNewRational : PointClass::kNewRational;
      return c;
    }
    if (weierstrass) {
      c.kind = PointClass::kWeierstrass;
      return c;
    }
    const auto I = integrals_from_infinity(ctx, Q);
    const PadicNumber gi = I[static_cast<std::size_t>(gamma)];
    c.gamma_integral = to_record(gi);
    c.gamma_vanishes = gi.is_zero();
    if (!alg) {
      c.kind = PointClass::kUnrecognized;
      return c;
    }
    c.kind = c.gamma_vanishes ? PointClass::kTorsion : PointClass::kOtherAlgebraic;
    return c;
  }
};

}  // namespace

ZeroSetReport run_pipeline(const HyperellipticCurve& curve, const RationalPoint& P0,
                           const std::vector<RationalPoint>& known_in, const PipelineOptions& options) {
  const Prime p = options.p ? *options.p : choose_prime(curve, 7);
  if (p < 7) throw BadInputError("run_pipeline: p must be at least 7");
  curve.require_good_reduction(p);
  const int N = options.N ? *options.N : 2 * p + 4;
  if (N < 6) throw BadInputError("run_pipeline: N must be at least 6");
  auto trace = [&](const std::string& s) {
    if (options.trace) options.trace(s);
  };

  if (P0.infinity || !curve.original_contains(P0)) {
    throw BadInputError("run_pipeline: P0 must be an affine point on the curve");
  }
  std::set<RationalPoint> known_set;
  known_set.insert(RationalPoint::at_infinity());
  for (const auto& k : known_in) {
    if (!curve.original_contains(k)) throw BadInputError("run_pipeline: known point " + k.to_string() + " is not on the curve");
    const RationalPoint m = curve.from_original(k);
    known_set.insert(m);
    known_set.insert(involution(m));
  }
  known_set.insert(curve.from_original(P0));
  known_set.insert(involution(curve.from_original(P0)));
  const std::vector<RationalPoint> known(known_set.begin(), known_set.end());

  ZeroSetReport rep;
  for (const auto& c : curve.original()) rep.coefficients.push_back(format_rational(c));
  for (const auto& c : curve.F()) rep.monic_coefficients.push_back(format_rational(c));
  rep.scaling_u = format_rational(curve.scaling().u);
  rep.scaling_v = format_rational(curve.scaling().v);
  rep.p = p;
  rep.N = N;
  rep.n = N;
  rep.P0 = P0;
  for (const auto& k : known) rep.known.push_back(curve.to_original(k));

  IntegrationContext ctx(curve, p, N);
  rep.frobenius_precision = ctx.frobenius().working_precision;
  const ZetaNumerator zeta = zeta_numerator(ctx.frobenius());
  if (zeta.curve_points() != count_points(curve, p, 1)) {
    throw PrecisionError("run_pipeline: Frobenius point count disagrees with enumeration");
  }
  for (const auto& a : zeta.coefficients) rep.zeta.push_back(a.get_str());
  rep.curve_points = zeta.curve_points();
  const mpz_class group_order = zeta.jacobian_order();
  rep.jacobian_order = group_order.get_str();
  rep.coleman_bound = zeta.curve_points() + 2 * kGenus - 2;

  const JacobianFp jac(curve, p);
  const CurvePoint P0m = to_padic(curve.from_original(P0), p, N);
  const MumfordDivisor d0 = jac.point_class(reduce(curve.from_original(P0), p));
  rep.p0_reduction_order = jac.element_order(d0, group_order).get_str();
  const AnomalyFlags flags = is_nonanomalous(jac, d0, group_order);
  rep.order_prime_to_p = flags.order_prime_to_p;
  rep.p_squared_free = flags.p_squared_free;
  if (!flags.p_squared_free) rep.warnings.push_back("p^2 divides #J(F_p); constant terms may be non-integral");

  const AnnihilatorBasis basis = compute_annihilator(ctx, P0m);
  for (const auto& w : basis.warnings) rep.warnings.push_back(w);
  rep.annihilator_case = to_string(basis.kase);
  for (const auto& l : basis.lambda) rep.lambda.push_back(to_record(l));
  for (const auto& c : basis.alpha.c) rep.alpha.push_back(to_record(c));
  for (const auto& c : basis.beta.c) rep.beta.push_back(to_record(c));
  rep.k01 = basis.k01;
  rep.k02 = basis.k02;
  rep.k12 = basis.k12;
  rep.n_prime = basis.n_prime;
  rep.gamma = gamma_index(basis);
  {
    std::ostringstream os;
    os << "p=" << p << " N=" << N << " n'=" << basis.n_prime << " #C(F_p)=" << rep.curve_points
       << " #J(F_p)=" << rep.jacobian_order << " case=" << rep.annihilator_case;
    trace(os.str());
  }

  rep.disks = triage_disks(ctx, basis, known);
  for (auto& d : rep.disks) {
    if (d.status == DiskStatus::kSearched) {
      try {
        search_disk(ctx, basis, d, options.M);
      } catch (const Error& e) {
        d.status = DiskStatus::kFailed;
        d.diagnostic = std::string(to_string(e.kind())) + ": " + e.what();
      }
    }
    std::ostringstream os;
    os << "disk " << d.disk.to_string() << " kind=" << to_string(d.kind) << " m=" << d.m
       << " known=" << d.known_in_disk.size() << " status=" << to_string(d.status);
    if (d.status != DiskStatus::kRuledOut) {
      os << " M=" << d.M << " k_f=" << d.k_f << " k_g=" << d.k_g << " roots_f=" << d.roots_f.size()
         << " roots_g=" << d.roots_g.size() << " common=" << d.common.size();
    }
    if (!d.diagnostic.empty()) os << " (" << d.diagnostic << ")";
    trace(os.str());
    if (d.status == DiskStatus::kFailed) rep.complete = false;
  }

  const Classifier cl{ctx, basis, jac, group_order, known, rep.gamma};
  for (const auto& d : rep.disks) {
    if (d.status == DiskStatus::kRuledOut) {
      for (const auto& k : d.known_in_disk) {
        ClassifiedPoint c;
        c.kind = PointClass::kKnown;
        c.rational = curve.to_original(k);
        c.field = "Q";
        const CurvePoint K = to_padic(k, p, N);
        c.point = to_zero_point(d.disk, PadicNumber::zero(p), K);
        c.gamma = rep.gamma;
        rep.points.push_back(std::move(c));
      }
      continue;
    }
    for (const auto& z : d.common) {
      ClassifiedPoint c = cl.classify(z);
      if (c.kind == PointClass::kUnrecognized) rep.complete = false;
      rep.points.push_back(std::move(c));
    }
  }

  for (const auto& k : known) {
    const CurvePoint K = to_padic(k, p, N);
    const auto I = integrals_from_infinity(ctx, K);
    rep.known_in_zero_set.push_back(pair(basis.alpha, I).is_zero() && pair(basis.beta, I).is_zero());
  }
  return rep;
}

}  // namespace ccz
