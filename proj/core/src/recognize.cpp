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

#include "ccz/recognize.hpp"

#include <algorithm>

namespace ccz {

namespace {

// Digits held back from the height bounds, so that a random residue is
// unlikely to produce a short relation.
constexpr int kMarginDigits = 4;

mpz_class isqrt(const mpz_class& n) {
  mpz_class r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

PadicNumber padic_of(const mpq_class& q, Prime p, int n) { return PadicNumber::from_rational(p, q, n); }

bool agrees(const PadicNumber& a, const PadicNumber& b) {
  return (a - b).is_zero();
}

QPoly primitive_integer(QPoly f) {
  qpoly::trim(f);
  mpz_class l = 1;
  for (const auto& c : f) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
  mpz_class g = 0;
  for (auto& c : f) {
    c *= l;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num().get_mpz_t());
  }
  if (g == 0) return f;
  for (auto& c : f) c /= g;
  if (!f.empty() && f.back() < 0) {
    for (auto& c : f) c = -c;
  }
  return f;
}

}  // namespace

std::optional<mpq_class> rational_reconstruction(const PadicNumber& q, int max_digits) {
  const Prime p = q.prime();
  if (q.is_exact()) {
    return mpq_class(q.unit() * prime_power(p, std::max(q.valuation(), 0))) /
           mpq_class(prime_power(p, std::max(-q.valuation(), 0)));
  }
  if (q.is_zero()) {
    if (q.absolute_precision() >= 1) return mpq_class(0);
    return std::nullopt;
  }
  const int s = std::max(0, -q.valuation());
  const PadicNumber w = q.shifted(s);
  int prec = w.absolute_precision();
  if (max_digits > 0) prec = std::min(prec, max_digits);
  if (prec <= kMarginDigits) return std::nullopt;
  const mpz_class m = prime_power(p, prec);
  const mpz_class bound = isqrt(prime_power(p, prec - kMarginDigits) / 2);
  mpz_class r0 = m, r1 = w.residue(prec);
  mpz_class t0 = 0, t1 = 1;
  while (r1 > bound) {
    const mpz_class qq = r0 / r1;
    mpz_class r2 = r0 - qq * r1;
    mpz_class t2 = t0 - qq * t1;
    r0 = r1;
    r1 = r2;
    t0 = t1;
    t1 = t2;
  }
  if (t1 == 0 || abs(t1) > bound) return std::nullopt;
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), t1.get_mpz_t());
  if (g != 1) return std::nullopt;
  mpq_class out(r1, t1);
  out.canonicalize();
  out /= mpq_class(prime_power(p, s));
  return out;
}

void lll_reduce(std::vector<std::vector<mpz_class>>& B) {
  const std::size_t n = B.size();
  if (n == 0) return;
  const std::size_t dim = B[0].size();
  auto dot = [&](const std::vector<mpq_class>& a, const std::vector<mpq_class>& b) {
    mpq_class s = 0;
    for (std::size_t i = 0; i < dim; ++i) s += a[i] * b[i];
    return s;
  };
  auto as_q = [&](const std::vector<mpz_class>& v) {
    std::vector<mpq_class> r(dim);
    for (std::size_t i = 0; i < dim; ++i) r[i] = v[i];
    return r;
  };
  std::vector<std::vector<mpq_class>> Bs(n);
  std::vector<std::vector<mpq_class>> mu(n, std::vector<mpq_class>(n));
  std::vector<mpq_class> norm(n);
  auto gram_schmidt = [&] {
    for (std::size_t i = 0; i < n; ++i) {
      Bs[i] = as_q(B[i]);
      for (std::size_t j = 0; j < i; ++j) {
        mu[i][j] = norm[j] == 0 ? mpq_class(0) : dot(as_q(B[i]), Bs[j]) / norm[j];
        for (std::size_t k = 0; k < dim; ++k) Bs[i][k] -= mu[i][j] * Bs[j][k];
      }
      norm[i] = dot(Bs[i], Bs[i]);
    }
  };
  gram_schmidt();
  const mpq_class delta(3, 4);
  std::size_t k = 1;
  while (k < n) {
    for (std::size_t j = k; j-- > 0;) {
      const mpq_class& m = mu[k][j];
      if (abs(m) > mpq_class(1, 2)) {
        mpz_class rr;
        const mpq_class h = m + mpq_class(1, 2);
        mpz_fdiv_q(rr.get_mpz_t(), h.get_num().get_mpz_t(), h.get_den().get_mpz_t());
        for (std::size_t i = 0; i < dim; ++i) B[k][i] -= rr * B[j][i];
        gram_schmidt();
      }
    }
    if (norm[k] >= (delta - mu[k][k - 1] * mu[k][k - 1]) * norm[k - 1]) {
      ++k;
    } else {
      std::swap(B[k], B[k - 1]);
      gram_schmidt();
      k = std::max<std::size_t>(k - 1, 1);
    }
  }
}

std::optional<QPoly> quadratic_dependency(const PadicNumber& q) {
  const Prime p = q.prime();
  if (q.is_zero()) return std::nullopt;
  const int s = std::max(0, -q.valuation());
  const PadicNumber w = q.shifted(s);
  const int prec = w.absolute_precision();
  if (prec <= kMarginDigits + 2) return std::nullopt;
  const mpz_class m = prime_power(p, prec);
  const mpz_class r = w.residue(prec);
  mpz_class r2 = r * r;
  mpz_fdiv_r(r2.get_mpz_t(), r2.get_mpz_t(), m.get_mpz_t());
  std::vector<std::vector<mpz_class>> B = {
      {m, 0, 0},
      {-r, 1, 0},
      {-r2, 0, 1},
  };
  lll_reduce(B);
  const auto& v = B[0];
  // Height check: |v|^3 well below p^prec.
  mpz_class h = 0;
  for (const auto& c : v) h = std::max<mpz_class>(h, abs(c));
  mpz_class h3 = h * h * h;
  if (h3 * prime_power(p, kMarginDigits) > m) return std::nullopt;
  if (v[2] == 0) return std::nullopt;
  // Relation for w = p^s q; rewrite for q.
  const mpz_class ps = prime_power(p, s);
  QPoly f = {mpq_class(v[0]), mpq_class(v[1] * ps), mpq_class(v[2] * ps * ps)};
  f = primitive_integer(f);
  const mpq_class disc = f[1] * f[1] - 4 * f[0] * f[2];
  if (is_rational_square(disc)) return std::nullopt;
  return f;
}

QuadraticNumber QuadraticNumber::operator+(const QuadraticNumber& o) const {
  return {r + o.r, s + o.s, d};
}

QuadraticNumber QuadraticNumber::operator*(const QuadraticNumber& o) const {
  return {r * o.r + s * o.s * mpq_class(d), r * o.s + s * o.r, d};
}

PadicNumber QuadraticNumber::to_padic(const PadicNumber& sqrt_d, int n) const {
  const Prime p = sqrt_d.prime();
  return padic_of(r, p, n) + padic_of(s, p, n) * sqrt_d;
}

mpz_class squarefree_part(mpz_class n) {
  if (n == 0) throw DomainError("squarefree_part: zero");
  const int sign = n < 0 ? -1 : 1;
  n = abs(n);
  mpz_class out = 1;
  for (mpz_class q = 2; q * q <= n; ++q) {
    int e = 0;
    while (n % q == 0) {
      n /= q;
      ++e;
    }
    if (e % 2 == 1) out *= q;
    if (q > 1000000) break;
  }
  out *= n;  // remaining factor (prime, or large cofactor treated as such)
  return out * sign;
}

QPoly minimal_polynomial(const QuadraticNumber& a) {
  if (a.s == 0) return primitive_integer({-a.r, 1});
  return primitive_integer({a.r * a.r - a.s * a.s * mpq_class(a.d), -2 * a.r, 1});
}

namespace {

// Roots of a0 + a1 X + a2 X^2 in Q(sqrt(d)): (-a1 +/- f sqrt(d)) / (2 a2).
struct QuadraticRoots {
  mpz_class d;
  mpq_class center;
  mpq_class half_width;  // coefficient of sqrt(d)
};

std::optional<QuadraticRoots> split(const QPoly& f) {
  const mpq_class D = f[1] * f[1] - 4 * f[0] * f[2];
  if (D == 0) return std::nullopt;
  mpz_class num = D.get_num() * D.get_den();
  const mpz_class d = squarefree_part(num);
  mpq_class ratio = mpq_class(num) / mpq_class(d);
  mpq_class g;
  if (!is_rational_square(ratio, &g)) return std::nullopt;
  // sqrt(D) = sqrt(num)/den = g sqrt(d) / den
  QuadraticRoots out;
  out.d = d;
  out.center = -f[1] / (2 * f[2]);
  out.half_width = g / mpq_class(D.get_den()) / (2 * f[2]);
  return out;
}

// The element center +/- half_width*sqrt(d) closest to v.
std::optional<QuadraticNumber> pick(const QuadraticRoots& r, const PadicNumber& v,
                                    const PadicNumber& sqrt_d) {
  const int n = v.absolute_precision();
  for (int sign : {1, -1}) {
    QuadraticNumber c{r.center, r.half_width * sign, r.d};
    if (agrees(c.to_padic(sqrt_d, n), v)) return c;
  }
  return std::nullopt;
}

QuadraticNumber eval_quadratic(const QPoly& G, const QuadraticNumber& x) {
  QuadraticNumber acc{0, 0, x.d};
  for (auto it = G.rbegin(); it != G.rend(); ++it) acc = acc * x + QuadraticNumber{*it, 0, x.d};
  return acc;
}

std::optional<PadicNumber> padic_sqrt(const mpz_class& d, Prime p, int n) {
  try {
    const PadicNumber a = PadicNumber::from_integer(p, d, n);
    if (!is_square(a)) return std::nullopt;
    return sqrt(a);
  } catch (const Error&) {
    return std::nullopt;
  }
}

}  // namespace

std::optional<AlgebraicPoint> recognize_point(const QPoly& G, const PadicNumber& x,
                                              const PadicNumber& y) {
  const Prime p = x.prime();
  const int n = std::max(std::min(x.absolute_precision(), y.absolute_precision()), 1);
  if (auto xr = rational_reconstruction(x)) {
    if (!agrees(padic_of(*xr, p, x.absolute_precision()), x)) return std::nullopt;
    const mpq_class gx = qpoly::eval(G, *xr);
    AlgebraicPoint pt;
    pt.x = {*xr, 0, 1};
    pt.x_minpoly = minimal_polynomial(pt.x);
    mpq_class root;
    if (is_rational_square(gx, &root)) {
      for (const mpq_class& c : {root, mpq_class(-root)}) {
        if (agrees(padic_of(c, p, y.absolute_precision()), y)) {
          pt.degree = 1;
          pt.field = 1;
          pt.y = {c, 0, 1};
          pt.y_minpoly = minimal_polynomial(pt.y);
          return pt;
        }
      }
      return std::nullopt;
    }
    // y = c sqrt(d) with c^2 d = gx.
    mpz_class num = gx.get_num() * gx.get_den();
    const mpz_class d = squarefree_part(num);
    mpq_class c2 = mpq_class(num) / mpq_class(d);
    mpq_class c;
    if (!is_rational_square(c2, &c)) return std::nullopt;
    c /= mpq_class(gx.get_den());
    const auto sd = padic_sqrt(d, p, n + 2);
    if (!sd) return std::nullopt;
    pt.degree = 2;
    pt.field = d;
    pt.x.d = d;
    const auto yv = pick({d, 0, c}, y, *sd);
    if (!yv) return std::nullopt;
    pt.y = *yv;
    if (!(pt.y * pt.y == eval_quadratic(G, pt.x))) return std::nullopt;
    pt.y_minpoly = minimal_polynomial(pt.y);
    return pt;
  }
  const auto A = quadratic_dependency(x);
  if (!A) return std::nullopt;
  const auto xs = split(*A);
  if (!xs) return std::nullopt;
  const auto sd = padic_sqrt(xs->d, p, n + 2);
  if (!sd) return std::nullopt;
  const auto xv = pick(*xs, x, *sd);
  if (!xv) return std::nullopt;
  const QuadraticNumber gx = eval_quadratic(G, *xv);
  AlgebraicPoint pt;
  pt.degree = 2;
  pt.field = xs->d;
  pt.x = *xv;
  pt.x_minpoly = minimal_polynomial(pt.x);
  std::optional<QuadraticNumber> yv;
  if (auto yr = rational_reconstruction(y)) {
    QuadraticNumber c{*yr, 0, xs->d};
    if (agrees(padic_of(*yr, p, y.absolute_precision()), y) && c * c == gx) yv = c;
  }
  if (!yv) {
    const auto B = quadratic_dependency(y);
    if (!B) return std::nullopt;
    const auto ys = split(*B);
    if (!ys || ys->d != xs->d) return std::nullopt;
    yv = pick(*ys, y, *sd);
    if (!yv || !(*yv * *yv == gx)) return std::nullopt;
  }
  pt.y = *yv;
  pt.y_minpoly = minimal_polynomial(pt.y);
  return pt;
}

}  // namespace ccz
