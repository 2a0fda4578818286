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

#include "ccz/frobenius.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <optional>

#include "ccz/finite_field.hpp"

namespace ccz {

namespace {

using MPoly = std::vector<mpz_class>;

// Arithmetic in (Z/p^W)[x]. Values are fixed point: an integer r stands for
// r / p^D.
struct Ring {
  Prime p;
  int W;
  mpz_class m;

  void red(mpz_class& x) const { mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t()); }
  void red(MPoly& a) const {
    for (auto& c : a) red(c);
  }
  mpz_class from_q(const mpq_class& q) const {
    mpz_class d = q.get_den();
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), d.get_mpz_t(), m.get_mpz_t());
    mpz_class r = q.get_num() * inv;
    red(r);
    return r;
  }
  mpz_class inv_unit(const mpz_class& u) const {
    mpz_class inv;
    if (mpz_invert(inv.get_mpz_t(), u.get_mpz_t(), m.get_mpz_t()) == 0) {
      throw DomainError("frobenius: non-unit inverse");
    }
    return inv;
  }
};

MPoly mul(const Ring& R, const MPoly& a, const MPoly& b) {
  if (a.empty() || b.empty()) return {};
  MPoly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  R.red(c);
  return c;
}

// a = quo * Q + rem with Q monic of degree dq; rem has size dq.
void divmod_monic(const Ring& R, MPoly a, const MPoly& Q, MPoly& quo, MPoly& rem) {
  const int dq = static_cast<int>(Q.size()) - 1;
  const int da = static_cast<int>(a.size()) - 1;
  quo.assign(static_cast<std::size_t>(std::max(da - dq + 1, 0)), 0);
  for (int d = da; d >= dq; --d) {
    mpz_class c = a[static_cast<std::size_t>(d)];
    R.red(c);
    if (c == 0) continue;
    quo[static_cast<std::size_t>(d - dq)] = c;
    for (int i = 0; i <= dq; ++i) a[static_cast<std::size_t>(d - dq + i)] -= c * Q[static_cast<std::size_t>(i)];
  }
  a.resize(static_cast<std::size_t>(dq), 0);
  R.red(a);
  rem = std::move(a);
}

std::vector<MPoly> qadic_digits(const Ring& R, MPoly a, const MPoly& Q) {
  std::vector<MPoly> digits;
  const std::size_t dq = Q.size() - 1;
  while (true) {
    if (a.size() <= dq) {
      a.resize(dq, 0);
      digits.push_back(std::move(a));
      break;
    }
    MPoly quo;
    MPoly rem;
    divmod_monic(R, std::move(a), Q, quo, rem);
    digits.push_back(std::move(rem));
    a = std::move(quo);
  }
  return digits;
}

int ilog(Prime p, long long n) {
  int e = 0;
  long long v = 1;
  while (v * p <= n) {
    v *= p;
    ++e;
  }
  return e;
}

// Canonical representation: digits[j] (degree < 7) of sum digits[j] * Q^j.
using Canonical = std::vector<MPoly>;

Canonical canonical_times(const Ring& R, const Canonical& a, const std::vector<Canonical>& xa) {
  std::size_t len = 0;
  for (const auto& c : xa) len = std::max(len, c.size());
  Canonical out(a.size() + len, MPoly(7, 0));
  for (std::size_t j = 0; j < a.size(); ++j) {
    for (std::size_t s = 0; s < 7; ++s) {
      const mpz_class& c = a[j][s];
      if (c == 0) continue;
      const Canonical& e = xa[s];
      for (std::size_t l = 0; l < e.size(); ++l) {
        MPoly& dst = out[j + l];
        for (std::size_t t = 0; t < 7; ++t) {
          if (e[l][t] != 0) mpz_addmul(dst[t].get_mpz_t(), c.get_mpz_t(), e[l][t].get_mpz_t());
        }
      }
    }
  }
  for (auto& d : out) R.red(d);
  while (out.size() > 1) {
    bool zero = std::all_of(out.back().begin(), out.back().end(), [](const mpz_class& c) { return c == 0; });
    if (!zero) break;
    out.pop_back();
  }
  return out;
}

std::optional<FrobeniusData> attempt(const HyperellipticCurve& curve, Prime p, int N, int guard) {
  // Series length and scale.
  int L = 1;
  int K = 0;
  long long mmax = 0;
  for (int it = 0; it < 8; ++it) {
    K = N + L + guard;
    mmax = (2LL * K + 1) * p;
    const int L2 = ilog(p, mmax) + 1;
    if (L2 == L) break;
    L = L2;
  }
  const int D = L + 1 + guard / 4;
  int level_loss = 0;
  for (long long m = 1; m <= mmax - 2; m += 2) level_loss += valuation_of(p, static_cast<std::int64_t>(m));
  const long long deg1_max = 6 + 7 * (((5 * p - 2) / 7 + 2) / 2 + 1) + 7;
  int degree_loss = 0;
  for (long long k = 0; k + 6 <= deg1_max; ++k) degree_loss += valuation_of(p, static_cast<std::int64_t>(2 * k + 7));
  const int loss = level_loss + degree_loss;
  const int W = N + D + loss + guard;

  Ring R{p, W, prime_power(p, W)};
  MPoly Q;
  for (const auto& c : curve.F()) Q.push_back(R.from_q(c));
  MPoly dQ;
  for (std::size_t i = 1; i < Q.size(); ++i) {
    mpz_class c = Q[i] * static_cast<long>(i);
    R.red(c);
    dQ.push_back(c);
  }
  // v = Q'^-1 mod Q, computed exactly over Q and reduced.
  MPoly vinv;
  {
    QPoly a = curve.F();
    QPoly b = qpoly::derivative(curve.F());
    // Extended Euclid: track s with s*b == r (mod a).
    QPoly r0 = a, r1 = b, s0 = {}, s1 = {mpq_class(1)};
    while (qpoly::degree(r1) > 0) {
      QPoly q;
      QPoly r = r0;
      const int db = qpoly::degree(r1);
      q.assign(static_cast<std::size_t>(std::max(qpoly::degree(r) - db + 1, 1)), 0);
      while (qpoly::degree(r) >= db) {
        const int d = qpoly::degree(r);
        mpq_class c = r[static_cast<std::size_t>(d)] / r1[static_cast<std::size_t>(db)];
        q[static_cast<std::size_t>(d - db)] = c;
        for (int i = 0; i <= db; ++i) r[static_cast<std::size_t>(d - db + i)] -= c * r1[static_cast<std::size_t>(i)];
        qpoly::trim(r);
      }
      QPoly s = qpoly::add(s0, qpoly::scale(qpoly::mul(q, s1), -1));
      r0 = r1;
      r1 = r;
      s0 = s1;
      s1 = s;
    }
    if (qpoly::degree(r1) != 0) throw BadInputError("frobenius: F is not squarefree");
    QPoly v = qpoly::scale(s1, 1 / r1[0]);
    for (const auto& c : v) {
      if (!is_p_integral(c, p)) throw BadReductionError("frobenius: F' not invertible mod F over Z_p");
      vinv.push_back(R.from_q(c));
    }
    vinv.resize(7, 0);
  }

  // E = Q(x^p) - Q(x)^p.
  MPoly Qp{1};
  for (int i = 0; i < p; ++i) Qp = mul(R, Qp, Q);
  MPoly E(Qp.size(), 0);
  for (std::size_t i = 0; i < Q.size(); ++i) E[i * static_cast<std::size_t>(p)] += Q[i];
  for (std::size_t i = 0; i < Qp.size(); ++i) E[i] -= Qp[i];
  R.red(E);
  while (E.size() > 1 && E.back() == 0) E.pop_back();

  std::vector<Canonical> xE(7);
  std::vector<Canonical> xP(7);
  for (int a = 0; a < 7; ++a) {
    MPoly t(static_cast<std::size_t>(a), 0);
    t.insert(t.end(), E.begin(), E.end());
    xE[static_cast<std::size_t>(a)] = qadic_digits(R, t, Q);
    MPoly u(static_cast<std::size_t>(a + p) + 1, 0);
    u.back() = 1;
    xP[static_cast<std::size_t>(a)] = qadic_digits(R, u, Q);
  }
  MPoly xpm1(static_cast<std::size_t>(p), 0);
  xpm1.back() = 1;
  Canonical Rk = qadic_digits(R, xpm1, Q);

  const std::size_t nlevels = static_cast<std::size_t>((mmax + 1) / 2 + 1);
  // level[i][s]: coefficient of y^-(2s+1) dx for form i; level1[i]: dx/y
  // polynomial of arbitrary degree.
  std::vector<std::vector<MPoly>> level(kBasisSize, std::vector<MPoly>(nlevels, MPoly(7, 0)));
  std::vector<MPoly> level1(kBasisSize, MPoly(1, 0));
  std::vector<MPoly> qpow{MPoly{1}};

  const mpz_class scale = prime_power(p, D);
  const mpz_class inv2 = R.inv_unit(2);
  mpz_class binom_num = 1;  // C(2k, k)
  mpz_class four_k = 1;
  for (int k = 0; k <= K; ++k) {
    if (k > 0) {
      Rk = canonical_times(R, Rk, xE);
      binom_num = binom_num * (2 * k) * (2 * k - 1) / (static_cast<long>(k) * k);
      four_k *= 4;
    }
    // (p/2) * (-1)^k C(2k,k) / 4^k, scaled by p^D.
    mpz_class coef = scale * static_cast<long>(p) * binom_num * inv2 * R.inv_unit(four_k);
    if (k % 2 == 1) coef = -coef;
    R.red(coef);
    Canonical S = Rk;
    for (int i = 0; i < kBasisSize; ++i) {
      if (i > 0) S = canonical_times(R, S, xP);
      for (std::size_t j = 0; j < S.size(); ++j) {
        const long long e = 2LL * static_cast<long long>(j) - (2LL * k + 1) * p;
        MPoly d = S[j];
        bool zero = true;
        for (auto& c : d) {
          c *= coef;
          R.red(c);
          if (c != 0) zero = false;
        }
        if (zero) continue;
        if (e < 0) {
          MPoly& dst = level[static_cast<std::size_t>(i)][static_cast<std::size_t>((-e - 1) / 2)];
          for (std::size_t t = 0; t < 7; ++t) dst[t] += d[t];
          R.red(dst);
        } else {
          const std::size_t h = static_cast<std::size_t>((e + 1) / 2);
          while (qpow.size() <= h) qpow.push_back(mul(R, qpow.back(), Q));
          MPoly add = mul(R, d, qpow[h]);
          MPoly& dst = level1[static_cast<std::size_t>(i)];
          if (dst.size() < add.size()) dst.resize(add.size(), 0);
          for (std::size_t t = 0; t < add.size(); ++t) dst[t] += add[t];
          R.red(dst);
        }
      }
    }
  }

  FrobeniusData fd;
  fd.p = p;
  fd.guard = guard;
  fd.series_terms = K + 1;
  fd.working_precision = W - loss - D;
  const int rel = W - loss;
  auto to_padic = [&](const mpz_class& r) {
    if (r == 0) return PadicNumber::zero(p, fd.working_precision);
    return PadicNumber::from_parts(p, r, -D, rel);
  };

  for (int i = 0; i < kBasisSize; ++i) {
    auto& lv = level[static_cast<std::size_t>(i)];
    FrobeniusPrimitive prim;
    prim.levels.assign(nlevels, std::vector<PadicNumber>());
    {
      MPoly& l1 = level1[static_cast<std::size_t>(i)];
      if (l1.size() < 7) l1.resize(7, 0);
      for (std::size_t t = 0; t < 7; ++t) l1[t] += lv[0][t];
      R.red(l1);
    }
    for (std::size_t s = nlevels - 1; s >= 1; --s) {
      // Level y^-(2s+1); 2s-1 is the divisor.
      MPoly A = lv[s];
      if (std::all_of(A.begin(), A.end(), [](const mpz_class& c) { return c == 0; })) continue;
      MPoly S = mul(R, A, vinv);
      MPoly quo;
      MPoly Sm;
      divmod_monic(R, S, Q, quo, Sm);
      MPoly SQ = mul(R, Sm, dQ);
      MPoly diff(std::max(SQ.size(), A.size()), 0);
      for (std::size_t t = 0; t < A.size(); ++t) diff[t] += A[t];
      for (std::size_t t = 0; t < SQ.size(); ++t) diff[t] -= SQ[t];
      R.red(diff);
      MPoly Rq;
      MPoly rem;
      divmod_monic(R, diff, Q, Rq, rem);
      if (!std::all_of(rem.begin(), rem.end(), [](const mpz_class& c) { return c == 0; })) {
        throw std::logic_error("frobenius: inexact division by Q");
      }
      const long long m2 = 2LL * static_cast<long long>(s) - 1;
      const int e = valuation_of(p, static_cast<std::int64_t>(m2));
      long long u = m2;
      for (int t = 0; t < e; ++t) u /= p;
      const mpz_class cfac = 2 * R.inv_unit(mpz_class(static_cast<long>(u)));
      MPoly T(7, 0);
      for (std::size_t t = 0; t < Sm.size(); ++t) {
        mpz_class c = Sm[t] * cfac;
        R.red(c);
        if (e > 0) {
          if (!mpz_divisible_p(c.get_mpz_t(), prime_power(p, e).get_mpz_t())) return std::nullopt;
          mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), prime_power(p, e).get_mpz_t());
        }
        T[t] = c;
      }
      // primitive: -T * y^-(2s-1)
      std::vector<PadicNumber> pl;
      for (const auto& c : T) {
        mpz_class neg = -c;
        R.red(neg);
        pl.push_back(to_padic(neg));
      }
      prim.levels[s - 1] = std::move(pl);
      MPoly& dst = (s - 1 >= 1) ? lv[s - 1] : level1[static_cast<std::size_t>(i)];
      if (dst.size() < 7) dst.resize(7, 0);
      for (std::size_t t = 0; t < Rq.size(); ++t) dst[t] += Rq[t];
      for (std::size_t t = 1; t < 7; ++t) dst[t - 1] += T[t] * static_cast<long>(t);
      R.red(dst);
    }
    // Degree reduction on dx/y.
    MPoly A = level1[static_cast<std::size_t>(i)];
    prim.positive.clear();
    const int deg = static_cast<int>(A.size()) - 1;
    if (deg > deg1_max) throw std::logic_error("frobenius: level-1 degree exceeds bound");
    std::vector<mpz_class> pos(static_cast<std::size_t>(std::max(deg - 5, 1)), 0);
    for (int d = deg; d >= 6; --d) {
      mpz_class a = A[static_cast<std::size_t>(d)];
      R.red(a);
      if (a == 0) continue;
      const long long k = d - 6;
      const long long den = 2 * k + 7;
      const int e = valuation_of(p, static_cast<std::int64_t>(den));
      long long u = den;
      for (int t = 0; t < e; ++t) u /= p;
      mpz_class ap = a * R.inv_unit(mpz_class(static_cast<long>(u)));
      R.red(ap);
      if (e > 0) {
        if (!mpz_divisible_p(ap.get_mpz_t(), prime_power(p, e).get_mpz_t())) return std::nullopt;
        mpz_divexact(ap.get_mpz_t(), ap.get_mpz_t(), prime_power(p, e).get_mpz_t());
      }
      // A -= ap * (2k x^(k-1) Q + x^k Q')
      for (std::size_t t = 0; t < Q.size(); ++t) {
        if (k >= 1) A[static_cast<std::size_t>(k - 1) + t] -= ap * static_cast<long>(2 * k) * Q[t];
      }
      for (std::size_t t = 0; t < dQ.size(); ++t) A[static_cast<std::size_t>(k) + t] -= ap * dQ[t];
      R.red(A);
      pos[static_cast<std::size_t>(k)] += 2 * ap;
    }
    for (auto& c : pos) {
      R.red(c);
      prim.positive.push_back(to_padic(c));
    }
    A.resize(std::max<std::size_t>(A.size(), 6), 0);
    for (int j = 0; j < kBasisSize; ++j) {
      mpz_class c = 2 * A[static_cast<std::size_t>(j)];
      R.red(c);
      fd.matrix[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = to_padic(c);
    }
    // Trim trailing empty levels.
    while (!prim.levels.empty() && prim.levels.back().empty()) prim.levels.pop_back();
    fd.primitives[static_cast<std::size_t>(i)] = std::move(prim);
  }
  return fd;
}

}  // namespace

PadicNumber FrobeniusPrimitive::evaluate(const PadicNumber& x, const PadicNumber& y) const {
  const Prime p = x.prime();
  PadicNumber acc = PadicNumber::zero(p);
  const PadicNumber yinv = PadicNumber::exact(p, 1).with_absolute_precision(y.absolute_precision()) / y;
  const PadicNumber yinv2 = yinv * yinv;
  PadicNumber ypow = yinv * yinv2;  // y^-3 for levels[1]
  PadicNumber ypow1 = yinv;
  for (std::size_t s = 0; s < levels.size(); ++s) {
    const PadicNumber& yp = (s == 0) ? ypow1 : ypow;
    if (!levels[s].empty()) {
      acc += qpoly::eval(levels[s], x) * yp;
    }
    if (s >= 1) ypow = ypow * yinv2;
  }
  if (!positive.empty()) acc += qpoly::eval(positive, x) * y;
  return acc;
}

FrobeniusData frobenius_data(const HyperellipticCurve& curve, Prime p, int N) {
  curve.require_good_reduction(p);
  if (p < 7) throw DomainError("frobenius_data: p must be at least 7");
  if (N < 1) throw DomainError("frobenius_data: N must be positive");
  for (int guard : {4, 8, 16}) {
    if (auto fd = attempt(curve, p, N, guard)) return *fd;
  }
  throw PrecisionError("frobenius_data: precision audit failed for all guard settings");
}

mpz_class ZetaNumerator::jacobian_order() const {
  mpz_class s = 0;
  for (const auto& c : coefficients) s += c;
  return s;
}

std::int64_t ZetaNumerator::curve_points() const {
  mpz_class n = p + 1 + coefficients[1];
  return n.get_si();
}

bool ZetaNumerator::functional_equation_holds() const {
  if (coefficients[0] != 1) return false;
  for (int i = 0; i <= 3; ++i) {
    mpz_class pp = 1;
    for (int k = 0; k < 3 - i; ++k) pp *= static_cast<long>(p);
    if (coefficients[static_cast<std::size_t>(6 - i)] != pp * coefficients[static_cast<std::size_t>(i)]) {
      return false;
    }
  }
  return true;
}

double ZetaNumerator::weil_deviation() const {
  // Companion matrix of T^6 + a1 T^5 + ... + a6.
  Eigen::Matrix<double, 6, 6> C = Eigen::Matrix<double, 6, 6>::Zero();
  for (int i = 1; i < 6; ++i) C(i, i - 1) = 1.0;
  for (int i = 0; i < 6; ++i) C(i, 5) = -coefficients[static_cast<std::size_t>(6 - i)].get_d();
  Eigen::EigenSolver<Eigen::Matrix<double, 6, 6>> es(C, false);
  const double r = std::sqrt(static_cast<double>(p));
  double worst = 0;
  for (int i = 0; i < 6; ++i) worst = std::max(worst, std::abs(std::abs(es.eigenvalues()(i)) - r));
  return worst;
}

namespace {

// Newton's identities on s_1..s_3, completed by the functional equation.
ZetaNumerator from_power_sums(Prime p, const std::array<mpz_class, 4>& s) {
  ZetaNumerator z;
  z.p = p;
  std::array<mpz_class, 4> e{1, 0, 0, 0};
  for (int j = 1; j <= 3; ++j) {
    mpz_class acc = 0;
    for (int i = 1; i <= j; ++i) {
      mpz_class term = e[static_cast<std::size_t>(j - i)] * s[static_cast<std::size_t>(i)];
      acc += (i % 2 == 1) ? term : mpz_class(-term);
    }
    e[static_cast<std::size_t>(j)] = acc / j;
  }
  for (int j = 0; j <= 3; ++j) {
    z.coefficients[static_cast<std::size_t>(j)] = (j % 2 == 0) ? e[static_cast<std::size_t>(j)]
                                                               : mpz_class(-e[static_cast<std::size_t>(j)]);
  }
  mpz_class pp = p;
  z.coefficients[4] = pp * z.coefficients[2];
  z.coefficients[5] = pp * pp * z.coefficients[1];
  z.coefficients[6] = pp * pp * pp;
  return z;
}

mpz_class binomial(int n, int k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

}  // namespace

ZetaNumerator zeta_numerator(const FrobeniusData& fd) {
  const Prime p = fd.p;
  // Power sums s_k = tr(M^k), then all elementary symmetric functions.
  Matrix6 power = fd.matrix;
  std::array<PadicNumber, 7> s;
  for (int k = 1; k <= 6; ++k) {
    if (k > 1) {
      Matrix6 next;
      for (int i = 0; i < 6; ++i) {
        for (int j = 0; j < 6; ++j) {
          PadicNumber acc = PadicNumber::zero(p);
          for (int l = 0; l < 6; ++l) {
            acc += power[static_cast<std::size_t>(i)][static_cast<std::size_t>(l)] *
                   fd.matrix[static_cast<std::size_t>(l)][static_cast<std::size_t>(j)];
          }
          next[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = acc;
        }
      }
      power = next;
    }
    PadicNumber tr = PadicNumber::zero(p);
    for (int i = 0; i < 6; ++i) tr += power[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)];
    s[static_cast<std::size_t>(k)] = tr;
  }
  std::array<PadicNumber, 7> e;
  e[0] = PadicNumber::exact(p, 1);
  for (int j = 1; j <= 6; ++j) {
    PadicNumber acc = PadicNumber::zero(p);
    for (int i = 1; i <= j; ++i) {
      PadicNumber term = e[static_cast<std::size_t>(j - i)] * s[static_cast<std::size_t>(i)];
      acc += (i % 2 == 1) ? term : -term;
    }
    e[static_cast<std::size_t>(j)] = acc.divided_by(j);
  }
  ZetaNumerator z;
  z.p = p;
  const double sp = std::sqrt(static_cast<double>(p));
  for (int j = 0; j <= 6; ++j) {
    PadicNumber c = (j % 2 == 0) ? e[static_cast<std::size_t>(j)] : -e[static_cast<std::size_t>(j)];
    const int prec = c.absolute_precision();
    if (!c.is_zero() && c.valuation() < 0) {
      throw PrecisionError("zeta_numerator: coefficient " + std::to_string(j) + " is not integral");
    }
    // Weil bound |a_j| <= C(6, j) p^(j/2).
    const mpz_class bound = binomial(6, j) * mpz_class(std::ceil(std::pow(sp, j)));
    if (prec < kExactPrecision && 2 * bound >= prime_power(p, std::min(prec, 1000))) {
      throw PrecisionError("zeta_numerator: precision too low to round coefficient " + std::to_string(j));
    }
    const mpz_class v = c.is_exact() ? mpz_class(c.unit() * prime_power(p, c.valuation()))
                                     : c.balanced_lift(prec);
    if (abs(v) > bound) {
      throw PrecisionError("zeta_numerator: coefficient " + std::to_string(j) + " violates the Weil bound");
    }
    z.coefficients[static_cast<std::size_t>(j)] = v;
  }
  if (!z.functional_equation_holds()) {
    throw PrecisionError("zeta_numerator: functional equation fails; Frobenius data inconsistent");
  }
  return z;
}

mpz_class jacobian_order(const FrobeniusData& fd) { return zeta_numerator(fd).jacobian_order(); }

std::int64_t count_points(const HyperellipticCurve& curve, Prime p, int k) {
  curve.require_good_reduction(p);
  SmallField K(p, k);
  const auto f = curve.F_mod_p(p);
  std::int64_t count = 1;
  for (std::int64_t x = 0; x < K.size(); ++x) {
    std::int64_t v = 0;
    for (int i = 7; i >= 0; --i) v = K.add(K.mul(v, x), K.from_int(f[static_cast<std::size_t>(i)]));
    if (v == 0) {
      count += 1;
    } else if (K.is_square(v)) {
      count += 2;
    }
  }
  return count;
}

ZetaNumerator brute_force_zeta(const HyperellipticCurve& curve, Prime p) {
  std::array<mpz_class, 4> s{0, 0, 0, 0};
  mpz_class q = 1;
  for (int k = 1; k <= 3; ++k) {
    q *= static_cast<long>(p);
    s[static_cast<std::size_t>(k)] = q + 1 - count_points(curve, p, k);
  }
  return from_power_sums(p, s);
}

CurvePoint frobenius_image(const HyperellipticCurve& curve, const CurvePoint& P, Prime p, int n) {
  if (P.infinity) return P;
  if (P.y.is_zero() || P.y.valuation() != 0) {
    throw DomainError("frobenius_image: y must be a unit");
  }
  const auto F = curve.F_padic(p, n);
  const PadicNumber xp = P.x.pow(static_cast<std::uint64_t>(p));
  const PadicNumber E = qpoly::eval(F, xp) - qpoly::eval(F, P.x).pow(static_cast<std::uint64_t>(p));
  const PadicNumber y2p = P.y.pow(static_cast<std::uint64_t>(2 * p));
  const PadicNumber w = PadicNumber::exact(p, 1) + E / y2p;
  const PadicNumber root = sqrt(w.with_absolute_precision(n), PadicNumber::from_integer(p, 1, 1));
  return CurvePoint::affine(xp.with_absolute_precision(n),
                            (P.y.pow(static_cast<std::uint64_t>(p)) * root).with_absolute_precision(n));
}

}  // namespace ccz
