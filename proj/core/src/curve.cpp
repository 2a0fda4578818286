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

#include "ccz/curve.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace ccz {

std::string RationalPoint::to_string() const {
  if (infinity) return "inf";
  return "(" + x.get_str() + ", " + y.get_str() + ")";
}

bool operator<(const RationalPoint& a, const RationalPoint& b) {
  if (a.infinity != b.infinity) return a.infinity;
  if (a.infinity) return false;
  if (a.x != b.x) return a.x < b.x;
  return a.y < b.y;
}

int CurvePoint::precision() const {
  if (infinity) return kExactPrecision;
  return std::min(x.absolute_precision(), y.absolute_precision());
}

std::string FpPoint::to_string() const {
  if (infinity) return "inf";
  return "(" + std::to_string(x) + "," + std::to_string(y) + ")";
}

HyperellipticCurve HyperellipticCurve::from_model(const QPoly& g0,
                                                  const std::optional<Scaling>& scaling) {
  QPoly g = g0;
  qpoly::trim(g);
  if (qpoly::degree(g) != 7) {
    throw BadInputError("model must have degree exactly 7, got degree " +
                        std::to_string(qpoly::degree(g)));
  }
  HyperellipticCurve c;
  c.g_ = g;
  const mpq_class lead = g[7];
  if (scaling.has_value()) {
    if (scaling->u == 0 || scaling->v == 0) throw BadInputError("scaling must be nonzero");
    mpq_class u7 = 1;
    for (int i = 0; i < 7; ++i) u7 *= scaling->u;
    if (lead * u7 != scaling->v * scaling->v) {
      throw BadInputError("scaling (u, v) does not make the model monic: need g7*u^7 = v^2");
    }
    c.s_ = *scaling;
  } else {
    c.s_.u = 1 / lead;
    c.s_.v = c.s_.u * c.s_.u * c.s_.u;
  }
  const mpq_class v2 = c.s_.v * c.s_.v;
  mpq_class ui = 1;
  c.f_.resize(8);
  for (int i = 0; i < 8; ++i) {
    c.f_[static_cast<std::size_t>(i)] = g[static_cast<std::size_t>(i)] * ui / v2;
    ui *= c.s_.u;
  }
  c.disc_ = qpoly::discriminant(c.f_);
  if (c.disc_ == 0) throw BadInputError("model is singular (zero discriminant)");
  return c;
}

bool HyperellipticCurve::has_good_reduction(Prime p) const {
  if (p < 3 || p % 2 == 0) return false;
  if (mpz_probab_prime_p(mpz_class(static_cast<long>(p)).get_mpz_t(), 30) == 0) return false;
  for (const auto& c : f_) {
    if (!is_p_integral(c, p)) return false;
  }
  if (rational_valuation(disc_, p) != 0) return false;
  if (rational_valuation(g_[7], p) > 0) return false;
  return true;
}

void HyperellipticCurve::require_good_reduction(Prime p) const {
  if (!has_good_reduction(p)) {
    throw BadReductionError("p = " + std::to_string(p) +
                            " is not a prime of good reduction for this model");
  }
}

bool HyperellipticCurve::contains(const RationalPoint& pt) const {
  if (pt.infinity) return true;
  return pt.y * pt.y == qpoly::eval(f_, pt.x);
}

bool HyperellipticCurve::original_contains(const RationalPoint& pt) const {
  if (pt.infinity) return true;
  return pt.y * pt.y == qpoly::eval(g_, pt.x);
}

RationalPoint HyperellipticCurve::to_original(const RationalPoint& pt) const {
  if (pt.infinity) return pt;
  return RationalPoint::affine(pt.x * s_.u, pt.y * s_.v);
}

RationalPoint HyperellipticCurve::from_original(const RationalPoint& pt) const {
  if (pt.infinity) return pt;
  return RationalPoint::affine(pt.x / s_.u, pt.y / s_.v);
}

std::vector<std::int64_t> HyperellipticCurve::F_mod_p(Prime p) const {
  std::vector<std::int64_t> r;
  for (const auto& c : f_) r.push_back(mod_p(c, p));
  return r;
}

std::vector<PadicNumber> HyperellipticCurve::F_padic(Prime p, int n) const {
  return qpoly::to_padic(f_, p, n);
}

Prime choose_prime(const HyperellipticCurve& curve, Prime lower_bound) {
  for (Prime p = std::max<Prime>(lower_bound, 3);; ++p) {
    if (curve.has_good_reduction(p)) return p;
  }
}

std::vector<FpPoint> fp_points(const HyperellipticCurve& curve, Prime p) {
  curve.require_good_reduction(p);
  const auto f = curve.F_mod_p(p);
  std::vector<std::int64_t> root_of(static_cast<std::size_t>(p), -1);
  for (std::int64_t r = 0; r < p; ++r) {
    auto& slot = root_of[static_cast<std::size_t>(r * r % p)];
    if (slot < 0) slot = r;
  }
  std::vector<FpPoint> pts{FpPoint::at_infinity()};
  for (std::int64_t x = 0; x < p; ++x) {
    std::int64_t v = 0;
    for (int i = 7; i >= 0; --i) v = (v * x + f[static_cast<std::size_t>(i)]) % p;
    const std::int64_t r = root_of[static_cast<std::size_t>(v)];
    if (r < 0) continue;
    if (r == 0) {
      pts.push_back({false, x, 0});
    } else {
      pts.push_back({false, x, std::min(r, p - r)});
      pts.push_back({false, x, std::max(r, p - r)});
    }
  }
  return pts;
}

FpPoint reduce(const CurvePoint& pt, Prime /*p*/) {
  if (pt.infinity) return FpPoint::at_infinity();
  if (!pt.x.is_zero() && pt.x.valuation() < 0) return FpPoint::at_infinity();
  if (pt.x.absolute_precision() < 1 || pt.y.absolute_precision() < 1) {
    throw PrecisionError("reduce: point known to less than one digit");
  }
  return {false, pt.x.residue_mod_p(), pt.y.residue_mod_p()};
}

FpPoint reduce(const RationalPoint& pt, Prime p) {
  if (pt.infinity || !is_p_integral(pt.x, p)) return FpPoint::at_infinity();
  return {false, mod_p(pt.x, p), mod_p(pt.y, p)};
}

CurvePoint involution(const CurvePoint& pt) {
  if (pt.infinity) return pt;
  return CurvePoint::affine(pt.x, -pt.y);
}

RationalPoint involution(const RationalPoint& pt) {
  if (pt.infinity) return pt;
  return RationalPoint::affine(pt.x, -pt.y);
}

FpPoint involution(const FpPoint& pt, Prime p) {
  if (pt.infinity) return pt;
  return {false, pt.x, (p - pt.y) % p};
}

bool is_weierstrass(const CurvePoint& pt) {
  return pt.infinity || pt.y.is_zero();
}

CurvePoint to_padic(const RationalPoint& pt, Prime p, int n) {
  if (pt.infinity) return CurvePoint::at_infinity();
  return CurvePoint::affine(PadicNumber::from_rational(p, pt.x, n),
                            PadicNumber::from_rational(p, pt.y, n));
}

std::vector<WeierstrassPoint> weierstrass_points_qp(const HyperellipticCurve& curve,
                                                    Prime p, int n) {
  curve.require_good_reduction(p);
  const auto f = curve.F_mod_p(p);
  const auto exact_roots = qpoly::rational_roots(curve.F());
  std::vector<WeierstrassPoint> out;
  for (std::int64_t x = 0; x < p; ++x) {
    std::int64_t v = 0;
    for (int i = 7; i >= 0; --i) v = (v * x + f[static_cast<std::size_t>(i)]) % p;
    if (v != 0) continue;
    WeierstrassPoint w;
    for (const auto& r : exact_roots) {
      if (is_p_integral(r, p) && mod_p(r, p) == x) {
        w.rational = true;
        w.exact_x = r;
      }
    }
    PadicNumber x0 = w.rational ? PadicNumber::from_rational(p, *w.exact_x, n)
                                : hensel_lift_root(curve.F(), PadicNumber::from_integer(p, x, n), n);
    w.point = CurvePoint::affine(x0, PadicNumber::zero(p, w.rational ? kExactPrecision : n));
    out.push_back(std::move(w));
  }
  return out;
}

std::vector<RationalPoint> search_rational_points(const HyperellipticCurve& curve,
                                                  std::int64_t height_bound) {
  std::vector<RationalPoint> found{RationalPoint::at_infinity()};
  if (height_bound < 1) return found;
  const QPoly& g = curve.original();
  mpz_class den = 1;
  for (const auto& c : g) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
  // M(a, b) = den^2 * sum g_i a^i b^(8-i) is a square iff G(a/b) is.
  std::vector<mpz_class> gi;
  for (const auto& c : g) gi.push_back(mpz_class(c * den * den));
  constexpr std::uint64_t kMod = 64ULL * 63ULL * 65ULL * 11ULL;
  std::vector<bool> square_mod(kMod, false);
  for (std::uint64_t r = 0; r < kMod; ++r) square_mod[r * r % kMod] = true;
  std::vector<std::uint64_t> gm;
  for (const auto& c : gi) gm.push_back(mpz_fdiv_ui(c.get_mpz_t(), kMod));

  const std::int64_t h = height_bound;
  for (std::int64_t b = 1; b <= h; ++b) {
    for (std::int64_t a = -h; a <= h; ++a) {
      if (std::gcd(a, b) != 1) continue;
      const std::uint64_t am = static_cast<std::uint64_t>((a % static_cast<std::int64_t>(kMod) + static_cast<std::int64_t>(kMod)) % static_cast<std::int64_t>(kMod));
      const std::uint64_t bm = static_cast<std::uint64_t>(b) % kMod;
      std::uint64_t pa[9];
      std::uint64_t pb[9];
      pa[0] = pb[0] = 1;
      for (int i = 1; i <= 8; ++i) {
        pa[i] = pa[i - 1] * am % kMod;
        pb[i] = pb[i - 1] * bm % kMod;
      }
      std::uint64_t m = 0;
      for (int i = 0; i < 8; ++i) m = (m + gm[static_cast<std::size_t>(i)] * (pa[i] * pb[8 - i] % kMod)) % kMod;
      if (!square_mod[m]) continue;
      mpz_class total = 0;
      mpz_class ap = 1;
      mpz_class A(static_cast<long>(a));
      mpz_class B(static_cast<long>(b));
      for (int i = 0; i < 8; ++i) {
        mpz_class bp;
        mpz_pow_ui(bp.get_mpz_t(), B.get_mpz_t(), static_cast<unsigned long>(8 - i));
        total += gi[static_cast<std::size_t>(i)] * ap * bp;
        ap *= A;
      }
      if (total < 0 || !mpz_perfect_square_p(total.get_mpz_t())) continue;
      mpz_class s;
      mpz_sqrt(s.get_mpz_t(), total.get_mpz_t());
      mpz_class b4;
      mpz_pow_ui(b4.get_mpz_t(), B.get_mpz_t(), 4);
      mpq_class x(A, B);
      mpq_class y(s, den * b4);
      x.canonicalize();
      y.canonicalize();
      found.push_back(curve.from_original(RationalPoint::affine(x, y)));
      if (y != 0) found.push_back(curve.from_original(RationalPoint::affine(x, -y)));
    }
  }
  std::sort(found.begin(), found.end());
  return found;
}

}  // namespace ccz
