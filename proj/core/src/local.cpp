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

#include "ccz/local.hpp"

#include <algorithm>
#include <sstream>

namespace ccz {

DiskKind disk_kind(const FpPoint& pt) {
  if (pt.infinity) return DiskKind::kInfinity;
  return pt.y == 0 ? DiskKind::kFiniteWeierstrass : DiskKind::kGeneric;
}

const char* to_string(DiskKind kind) {
  switch (kind) {
    case DiskKind::kGeneric: return "generic";
    case DiskKind::kFiniteWeierstrass: return "finite_weierstrass";
    case DiskKind::kInfinity: return "infinity";
  }
  return "unknown";
}

DifferentialForm DifferentialForm::basis(Prime p, int i) {
  DifferentialForm f;
  for (int j = 0; j < 3; ++j) {
    f.c[static_cast<std::size_t>(j)] = PadicNumber::exact(p, i == j ? 1 : 0);
  }
  return f;
}

int DifferentialForm::min_valuation() const {
  int v = kExactPrecision;
  for (const auto& x : c) {
    if (!x.is_zero()) v = std::min(v, x.valuation());
  }
  return v;
}

DifferentialForm DifferentialForm::with_absolute_precision(int n) const {
  DifferentialForm f = *this;
  for (auto& x : f.c) x = x.with_absolute_precision(n);
  return f;
}

std::string DifferentialForm::to_string() const {
  std::ostringstream out;
  for (int i = 0; i < 3; ++i) {
    if (i > 0) out << " + ";
    out << "(" << c[static_cast<std::size_t>(i)].to_digits() << ")*w" << i;
  }
  return out.str();
}

namespace {

PadicPowerSeries apply_poly(const std::vector<PadicNumber>& f, const PadicPowerSeries& x) {
  const int m = x.t_precision();
  PadicPowerSeries acc = PadicPowerSeries::zero(x.prime(), m);
  for (auto it = f.rbegin(); it != f.rend(); ++it) {
    acc = acc * x + PadicPowerSeries::constant(*it, m);
  }
  return acc;
}

std::vector<PadicNumber> poly_derivative(const std::vector<PadicNumber>& f) {
  std::vector<PadicNumber> d;
  for (std::size_t i = 1; i < f.size(); ++i) d.push_back(f[i] * static_cast<std::int64_t>(i));
  return d;
}

PadicPowerSeries power(const PadicPowerSeries& a, int e) {
  PadicPowerSeries r = PadicPowerSeries::constant(PadicNumber::exact(a.prime(), 1), a.t_precision());
  for (int i = 0; i < e; ++i) r = r * a;
  return r;
}

/// s(t) -> s(t^2), as a series in t with t-precision m.
PadicPowerSeries even_in_t(const PadicPowerSeries& s, int m) {
  std::vector<PadicNumber> c(static_cast<std::size_t>(m), PadicNumber::zero(s.prime()));
  for (int i = 0; 2 * i < m; ++i) {
    if (i >= s.t_precision()) throw PrecisionError("even_in_t: series too short");
    c[static_cast<std::size_t>(2 * i)] = s[i];
  }
  return PadicPowerSeries(s.prime(), std::move(c), m);
}

/// The unit series z(s) at infinity, s-precision ms.
PadicPowerSeries infinity_z(const std::vector<PadicNumber>& F, Prime p, int ms) {
  // G(z) = z^7 - z^6 + sum_{i<7} F_i s^(7-i) z^i, G(1) = 0 mod s, G'(1) = 1.
  const PadicNumber one = PadicNumber::exact(p, 1);
  auto G = [&](const PadicPowerSeries& z, int m) {
    std::vector<PadicPowerSeries> zp{PadicPowerSeries::constant(one, m)};
    for (int i = 1; i <= 7; ++i) zp.push_back(zp.back() * z);
    PadicPowerSeries g = zp[7] - zp[6];
    PadicPowerSeries dg = zp[6] * PadicNumber::exact(p, 7) - zp[5] * PadicNumber::exact(p, 6);
    for (int i = 0; i < 7; ++i) {
      const int shift = 7 - i;
      if (shift >= m) continue;
      g = g + (zp[static_cast<std::size_t>(i)] * F[static_cast<std::size_t>(i)]).shifted(shift).truncated(m);
      if (i >= 1) {
        dg = dg + (zp[static_cast<std::size_t>(i - 1)] *
                   (F[static_cast<std::size_t>(i)] * static_cast<std::int64_t>(i)))
                      .shifted(shift)
                      .truncated(m);
      }
    }
    return std::make_pair(g, dg);
  };
  PadicPowerSeries z = PadicPowerSeries::constant(one, 1);
  for (int prec = 1; prec < ms;) {
    prec = std::min(2 * prec, ms);
    PadicPowerSeries zz(p, z.coefficients(), prec);
    auto [g, dg] = G(zz, prec);
    z = zz - g * dg.inverse();
  }
  return z;
}

}  // namespace

LocalExpansion local_coordinate(const HyperellipticCurve& curve, const CurvePoint& center,
                                Prime p, int M, int n) {
  LocalExpansion e;
  e.center = center;
  e.p = p;
  e.t_precision = M;
  e.p_precision = n;
  const auto F = curve.F_padic(p, n);
  const PadicNumber one = PadicNumber::exact(p, 1);
  const FpPoint red = reduce(center, p);
  e.kind = disk_kind(red);
  if (e.kind == DiskKind::kInfinity) {
    if (!center.infinity) {
      throw DomainError("local_coordinate: the infinity disk is centered at infinity");
    }
    const int ms = M / 2 + 2;
    const PadicPowerSeries z = infinity_z(F, p, ms);
    e.z = even_in_t(z, M + 1);
    // w_i = z^(i-3) (s z_s - z) t^(4-2i) dt.
    const PadicPowerSeries zs = z.derivative();
    const PadicPowerSeries s_zs = zs.shifted(1).truncated(ms);
    const PadicPowerSeries core = s_zs - z.truncated(ms);
    const PadicPowerSeries zinv = z.inverse();
    for (int i = 0; i < 3; ++i) {
      PadicPowerSeries w = core * power(zinv, 3 - i);
      e.omega[static_cast<std::size_t>(i)] = even_in_t(w, M).shifted(4 - 2 * i).truncated(M);
    }
    for (int i = 3; i < kBasisSize; ++i) e.omega[static_cast<std::size_t>(i)] = PadicPowerSeries::zero(p, 0);
    return e;
  }
  const PadicNumber x0 = center.x.with_absolute_precision(n);
  const PadicNumber y0 = center.y.with_absolute_precision(n);
  const PadicPowerSeries t = PadicPowerSeries::variable(p, M);
  if (e.kind == DiskKind::kGeneric) {
    e.x = PadicPowerSeries::constant(x0, M) + t;
    const PadicPowerSeries Fx = apply_poly(F, e.x);
    e.y = sqrt_series(Fx, y0);
    const PadicPowerSeries inv2y = (e.y * PadicNumber::exact(p, 2)).inverse();
    PadicPowerSeries xi = PadicPowerSeries::constant(one, M);
    for (int i = 0; i < kBasisSize; ++i) {
      e.omega[static_cast<std::size_t>(i)] = xi * inv2y;
      xi = xi * e.x;
    }
    return e;
  }
  // Finite Weierstrass disk: y = y0 + t, F(x) = y^2 solved by Newton.
  e.y = PadicPowerSeries::constant(y0, M) + t;
  const PadicPowerSeries y2 = e.y * e.y;
  const auto dF = poly_derivative(F);
  PadicPowerSeries x = PadicPowerSeries::constant(x0, 1);
  {
    // Refine x0 itself so that F(x0) = y0^2 to full precision.
    PadicNumber xv = x0;
    const PadicNumber target = y0 * y0;
    for (int it = 0; it < 2 * n + 4; ++it) {
      PadicNumber r = qpoly::eval(F, xv) - target;
      if (r.is_zero()) break;
      xv = (xv - r / qpoly::eval(dF, xv)).with_absolute_precision(n);
    }
    x = PadicPowerSeries::constant(xv, 1);
  }
  for (int prec = 1; prec < M;) {
    prec = std::min(2 * prec, M);
    PadicPowerSeries xx(p, x.coefficients(), prec);
    PadicPowerSeries r = apply_poly(F, xx) - y2.truncated(prec);
    x = xx - r * apply_poly(dF, xx).inverse();
  }
  e.x = x;
  const PadicPowerSeries inv_dF = apply_poly(dF, e.x).inverse();
  PadicPowerSeries xi = PadicPowerSeries::constant(one, M);
  for (int i = 0; i < kBasisSize; ++i) {
    e.omega[static_cast<std::size_t>(i)] = xi * inv_dF;
    xi = xi * e.x;
  }
  return e;
}

PadicPowerSeries expand_differential(const DifferentialForm& form, const LocalExpansion& exp) {
  PadicPowerSeries w = PadicPowerSeries::zero(exp.p, exp.t_precision);
  for (int i = 0; i < 3; ++i) {
    const auto& c = form.c[static_cast<std::size_t>(i)];
    if (c.is_exact_zero()) continue;
    w = w + exp.omega[static_cast<std::size_t>(i)] * c;
  }
  return w;
}

PadicNumber parameter_of(const LocalExpansion& exp, const CurvePoint& q) {
  const Prime p = exp.p;
  switch (exp.kind) {
    case DiskKind::kInfinity: {
      if (q.infinity) return PadicNumber::zero(p);
      if (q.x.is_zero() || q.x.valuation() >= 0) {
        throw DomainError("parameter_of: point is not in the infinity disk");
      }
      return q.x * q.x * q.x / q.y;
    }
    case DiskKind::kGeneric: {
      if (q.infinity) throw DomainError("parameter_of: point is not in this disk");
      PadicNumber t = q.x - exp.center.x;
      PadicNumber dy = q.y - exp.center.y;
      if ((!t.is_zero() && t.valuation() < 1) || (!dy.is_zero() && dy.valuation() < 1)) {
        throw DomainError("parameter_of: point is not in this residue disk");
      }
      return t;
    }
    case DiskKind::kFiniteWeierstrass: {
      if (q.infinity) throw DomainError("parameter_of: point is not in this disk");
      PadicNumber t = q.y - exp.center.y;
      PadicNumber dx = q.x - exp.center.x;
      if ((!t.is_zero() && t.valuation() < 1) || (!dx.is_zero() && dx.valuation() < 1)) {
        throw DomainError("parameter_of: point is not in this residue disk");
      }
      return t;
    }
  }
  throw DomainError("parameter_of: bad disk kind");
}

CurvePoint point_at(const LocalExpansion& exp, const PadicNumber& t) {
  switch (exp.kind) {
    case DiskKind::kInfinity: {
      if (t.is_zero()) return CurvePoint::at_infinity();
      const PadicNumber z = exp.z.evaluate_in_disk(t);
      const PadicNumber t2 = t * t;
      return CurvePoint::affine(z / t2, z * z * z / (t2 * t2 * t2 * t));
    }
    case DiskKind::kGeneric:
      return CurvePoint::affine(exp.center.x + t, exp.y.evaluate_in_disk(t));
    case DiskKind::kFiniteWeierstrass:
      return CurvePoint::affine(exp.x.evaluate_in_disk(t), exp.center.y + t);
  }
  throw DomainError("point_at: bad disk kind");
}

int tiny_t_precision(Prime p, int n, int s) {
  s = std::max(s, 1);
  for (int M = 1;; ++M) {
    if (tail_valuation_bound(p, M + 1, s, TailBound::antiderivative()) >= n) return M;
  }
}

std::array<PadicNumber, kBasisSize> tiny_integrals(const HyperellipticCurve& curve,
                                                   const CurvePoint& P, const CurvePoint& Q,
                                                   Prime p, int n) {
  std::array<PadicNumber, kBasisSize> out;
  if (P.infinity && Q.infinity) {
    for (auto& v : out) v = PadicNumber::zero(p);
    return out;
  }
  if (Q.infinity) {
    auto r = tiny_integrals(curve, Q, P, p, n);
    for (auto& v : r) v = -v;
    return r;
  }
  if (!P.infinity && reduce(P, p).infinity) {
    // Finite endpoints near infinity: go through infinity, the disk's center.
    const auto a = tiny_integrals(curve, CurvePoint::at_infinity(), P, p, n);
    auto r = tiny_integrals(curve, CurvePoint::at_infinity(), Q, p, n);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= a[i];
    return r;
  }
  // Probe the parameter with a cheap expansion, then size M from it.
  LocalExpansion probe;
  probe.center = P;
  probe.p = p;
  probe.kind = disk_kind(reduce(P, p));
  if (P.infinity) probe.kind = DiskKind::kInfinity;
  const PadicNumber t = parameter_of(probe, Q);
  const int s = t.is_zero() ? n : t.valuation();
  const int M = tiny_t_precision(p, n, s);
  const LocalExpansion e = local_coordinate(curve, P, p, M, n);
  for (int i = 0; i < kBasisSize; ++i) {
    const auto& w = e.omega[static_cast<std::size_t>(i)];
    if (w.t_precision() == 0) {
      out[static_cast<std::size_t>(i)] = PadicNumber::zero(p, 0);
      continue;
    }
    out[static_cast<std::size_t>(i)] =
        w.integral().evaluate_in_disk(t, TailBound::antiderivative()).with_absolute_precision(n);
  }
  return out;
}

PadicNumber tiny_integral(const HyperellipticCurve& curve, const DifferentialForm& form,
                          const CurvePoint& P, const CurvePoint& Q, Prime p, int n) {
  const auto v = tiny_integrals(curve, P, Q, p, n);
  PadicNumber acc = PadicNumber::zero(p);
  for (int i = 0; i < 3; ++i) acc += form.c[static_cast<std::size_t>(i)] * v[static_cast<std::size_t>(i)];
  return acc;
}

CurvePoint canonical_lift(const HyperellipticCurve& curve, const FpPoint& disk, Prime p, int n) {
  if (disk.infinity) return CurvePoint::at_infinity();
  if (disk.y == 0) {
    const PadicNumber x0 =
        hensel_lift_root(curve.F(), PadicNumber::from_integer(p, disk.x, n), n);
    return CurvePoint::affine(x0, PadicNumber::zero(p, n));
  }
  const PadicNumber x0 = disk.x == 0
                             ? PadicNumber::zero(p)
                             : teichmuller(PadicNumber::from_integer(p, disk.x, n), n);
  const PadicNumber fx = qpoly::eval(curve.F_padic(p, n), x0.is_exact_zero() ? PadicNumber::zero(p, n) : x0)
                             .with_absolute_precision(n);
  const PadicNumber y0 = sqrt(fx, PadicNumber::from_integer(p, disk.y, 1));
  return CurvePoint::affine(x0.with_absolute_precision(n), y0);
}

std::array<int, 2> form_orders_mod_p(const HyperellipticCurve& curve, const DifferentialForm& alpha,
                                     const DifferentialForm& beta, const FpPoint& disk, Prime p) {
  // A holomorphic form nonzero mod p vanishes to order at most 2g - 2.
  const int n = 4;
  const int M = 2 * kGenus - 1;
  const CurvePoint lift = canonical_lift(curve, disk, p, n);
  const LocalExpansion e = local_coordinate(curve, lift, p, M, n);
  std::array<int, 2> orders{};
  const DifferentialForm* forms[2] = {&alpha, &beta};
  for (int k = 0; k < 2; ++k) {
    if (!forms[k]->is_unit_normalized()) {
      throw DomainError("form_orders_mod_p: form is not unit-normalized");
    }
    orders[static_cast<std::size_t>(k)] =
        expand_differential(forms[k]->with_absolute_precision(n), e).order_mod_p();
  }
  return orders;
}

int disk_vanishing_order(const HyperellipticCurve& curve, const DifferentialForm& alpha,
                         const DifferentialForm& beta, const FpPoint& disk, Prime p) {
  const auto o = form_orders_mod_p(curve, alpha, beta, disk, p);
  const int m = std::min(o[0], o[1]);
  if (m > 2) {
    throw DomainError("disk_vanishing_order: both forms vanish to order > 2 at " +
                      disk.to_string() + "; alpha and beta are dependent mod p");
  }
  return m;
}

}  // namespace ccz
