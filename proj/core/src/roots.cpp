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

#include "ccz/roots.hpp"

#include <algorithm>

namespace ccz {

namespace {

// p^p - p, saturated.
std::int64_t upper_limit(Prime p) {
  std::int64_t r = 1;
  for (int i = 0; i < p; ++i) {
    if (r > (std::int64_t{1} << 40)) return std::int64_t{1} << 50;
    r *= p;
  }
  return r - p;
}

using ZPoly = std::vector<mpz_class>;

mpz_class eval_mod(const ZPoly& h, const mpz_class& x, const mpz_class& m) {
  mpz_class acc = 0;
  for (auto it = h.rbegin(); it != h.rend(); ++it) {
    acc = acc * x + *it;
    mpz_fdiv_r(acc.get_mpz_t(), acc.get_mpz_t(), m.get_mpz_t());
  }
  return acc;
}

ZPoly derivative(const ZPoly& h) {
  ZPoly d;
  for (std::size_t i = 1; i < h.size(); ++i) d.push_back(h[i] * static_cast<unsigned long>(i));
  return d;
}

// h(c + p u) mod m.
ZPoly shift_scale(const ZPoly& h, const mpz_class& c, Prime p, const mpz_class& m) {
  // Taylor shift by c, then scale u -> p u.
  ZPoly g = h;
  const std::size_t n = g.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = n - 1; j > i; --j) {
      g[j - 1] += c * g[j];
      mpz_fdiv_r(g[j - 1].get_mpz_t(), g[j - 1].get_mpz_t(), m.get_mpz_t());
    }
  }
  mpz_class pw = 1;
  for (auto& x : g) {
    x *= pw;
    mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    pw *= p;
  }
  return g;
}

struct RawRoot {
  mpz_class value;
  int precision;
  bool simple;
};

void find_roots(const ZPoly& h, Prime p, int prec, std::vector<RawRoot>& out) {
  if (prec <= 0) return;
  const mpz_class m = prime_power(p, prec);
  const mpz_class pp = p;
  const ZPoly dh = derivative(h);
  for (Prime c = 0; c < p; ++c) {
    if (eval_mod(h, c, pp) != 0) continue;
    if (eval_mod(dh, c, pp) != 0) {
      // Newton lift to p^prec.
      mpz_class x = c;
      for (int have = 1; have < prec;) {
        have = std::min(2 * have, prec);
        const mpz_class mm = prime_power(p, have);
        const mpz_class fx = eval_mod(h, x, mm);
        const mpz_class dx = eval_mod(dh, x, mm);
        mpz_class inv;
        mpz_invert(inv.get_mpz_t(), dx.get_mpz_t(), mm.get_mpz_t());
        x -= fx * inv;
        mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), mm.get_mpz_t());
      }
      out.push_back({x, prec, true});
      continue;
    }
    ZPoly g = shift_scale(h, c, p, m);
    int v = prec;
    for (const auto& x : g) {
      if (x != 0) v = std::min(v, valuation_of(p, x));
    }
    if (v >= prec) {
      out.push_back({mpz_class(c), 1, false});
      continue;
    }
    const mpz_class pv = prime_power(p, v);
    for (auto& x : g) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), pv.get_mpz_t());
    std::vector<RawRoot> sub;
    find_roots(g, p, prec - v, sub);
    for (auto& r : sub) out.push_back({c + p * r.value, r.precision + 1, r.simple});
  }
}

}  // namespace

TruncationPolicy truncation_parameters(int N, Prime p, int m_f) {
  if (m_f >= p - 2) throw DomainError("truncation_parameters: m_f >= p - 2");
  if (N < m_f + 2 || N > upper_limit(p)) {
    throw DomainError("truncation_parameters: N = " + std::to_string(N) + " out of range");
  }
  TruncationPolicy pol;
  pol.p = p;
  pol.N = N;
  pol.m_f = m_f;
  const std::int64_t r = (static_cast<std::int64_t>(N) + p - 1) / p * p;
  pol.e = valuation_of(p, r);
  pol.a = r;
  for (int i = 0; i < pol.e; ++i) pol.a /= p;
  pol.M = (r - pol.e < N) ? static_cast<int>(r + 1) : N;
  return pol;
}

int root_count_bound(const PadicPowerSeries& fprime) {
  const int m = fprime.order_mod_p();
  if (m >= fprime.prime() - 2) throw DomainError("root_count_bound: m_f >= p - 2");
  return m + 1;
}

std::vector<PadicRoot> integral_roots(const std::vector<PadicNumber>& h) {
  if (h.empty()) return {};
  const Prime p = h.front().prime();
  int prec = kExactPrecision;
  for (const auto& c : h) {
    if (!c.is_exact()) prec = std::min(prec, c.absolute_precision());
    if (!c.is_zero() && c.valuation() < 0) throw DomainError("integral_roots: coefficient not integral");
  }
  if (prec >= kExactPrecision) prec = 64;
  ZPoly z;
  for (const auto& c : h) z.push_back(c.residue(prec));
  while (!z.empty() && z.back() == 0) z.pop_back();
  if (z.empty()) throw PrecisionError("integral_roots: polynomial vanishes at available precision");
  std::vector<RawRoot> raw;
  find_roots(z, p, prec, raw);
  std::vector<PadicRoot> out;
  for (auto& r : raw) {
    out.push_back({PadicNumber::from_integer(p, r.value, r.precision), r.precision, r.simple});
  }
  return out;
}

PadicPowerSeries strip_zero_root(const PadicPowerSeries& f, int* removed) {
  int j = 0;
  while (j < f.t_precision() && f[j].is_exact_zero()) ++j;
  if (removed) *removed = j;
  std::vector<PadicNumber> c(f.coefficients().begin() + j, f.coefficients().end());
  return PadicPowerSeries(f.prime(), std::move(c), f.t_precision() - j);
}

RootReport roots_in_pZp(const PadicPowerSeries& f, TruncationPolicy& policy) {
  const Prime p = f.prime();
  RootReport rep;
  rep.bound = policy.m_f + 1;
  const int M = std::min(policy.M, f.t_precision());
  std::vector<PadicNumber> b;
  int k = kExactPrecision;
  for (int i = 0; i < M; ++i) {
    PadicNumber bi = f[i].with_absolute_precision(policy.N).shifted(i);
    if (!bi.is_zero()) {
      k = std::min(k, bi.valuation());
      if (i >= 1 && bi.valuation() < i - valuation_of(p, static_cast<std::int64_t>(i))) {
        rep.valuation_lemma_holds = false;
      }
    }
    b.push_back(bi);
  }
  if (k >= kExactPrecision) throw PrecisionError("roots_in_pZp: series vanishes at available precision");
  policy.k = k;
  rep.k = k;
  // Coefficients past M are divisible by p^N; so is the error of each b_i.
  const int prec = policy.N - k;
  if (prec <= 0) throw PrecisionError("roots_in_pZp: no digits left after dividing by p^k");
  std::vector<PadicNumber> h;
  for (auto& bi : b) h.push_back(bi.shifted(-k).with_absolute_precision(prec));
  for (int i = static_cast<int>(h.size()) - 1; i >= 0; --i) {
    const auto& c = h[static_cast<std::size_t>(i)];
    if (!c.is_zero() && c.valuation() == 0) {
      rep.newton_count = i;
      break;
    }
  }
  rep.all_simple_certified = true;
  for (auto& r : integral_roots(h)) {
    rep.roots.push_back({r.t.shifted(1), r.precision + 1, r.simple});
    if (!r.simple) rep.all_simple_certified = false;
  }
  return rep;
}

PadicNumber discriminant(const std::vector<PadicNumber>& f0) {
  std::vector<PadicNumber> f = f0;
  while (!f.empty() && f.back().is_exact_zero()) f.pop_back();
  const int n = static_cast<int>(f.size()) - 1;
  if (n < 1) throw DomainError("discriminant: degree < 1");
  const Prime p = f.front().prime();
  std::vector<PadicNumber> df;
  for (int i = 1; i <= n; ++i) df.push_back(f[static_cast<std::size_t>(i)] * i);
  // Sylvester matrix of f (degree n) and f' (degree n - 1), size 2n - 1.
  const int s = 2 * n - 1;
  std::vector<std::vector<PadicNumber>> A(static_cast<std::size_t>(s),
                                          std::vector<PadicNumber>(static_cast<std::size_t>(s), PadicNumber::zero(p)));
  for (int r = 0; r < n - 1; ++r) {
    for (int i = 0; i <= n; ++i) A[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + n - i)] = f[static_cast<std::size_t>(i)];
  }
  for (int r = 0; r < n; ++r) {
    for (int i = 0; i <= n - 1; ++i) {
      A[static_cast<std::size_t>(n - 1 + r)][static_cast<std::size_t>(r + n - 1 - i)] = df[static_cast<std::size_t>(i)];
    }
  }
  PadicNumber det = PadicNumber::exact(p, 1);
  for (int c = 0; c < s; ++c) {
    int best = -1;
    for (int r = c; r < s; ++r) {
      const auto& e = A[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
      if (e.is_zero()) continue;
      if (best < 0 || e.valuation() < A[static_cast<std::size_t>(best)][static_cast<std::size_t>(c)].valuation()) best = r;
    }
    if (best < 0) {
      // Column vanishes to precision: the determinant is zero to the
      // precision of the column.
      int prec = kExactPrecision;
      for (int r = c; r < s; ++r) prec = std::min(prec, A[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)].absolute_precision());
      return PadicNumber::zero(p, prec == kExactPrecision ? kExactPrecision : (det.is_zero() ? 0 : det.valuation() + prec));
    }
    if (best != c) {
      std::swap(A[static_cast<std::size_t>(best)], A[static_cast<std::size_t>(c)]);
      det = -det;
    }
    const PadicNumber piv = A[static_cast<std::size_t>(c)][static_cast<std::size_t>(c)];
    det *= piv;
    for (int r = c + 1; r < s; ++r) {
      auto& row = A[static_cast<std::size_t>(r)];
      if (row[static_cast<std::size_t>(c)].is_zero()) continue;
      const PadicNumber q = row[static_cast<std::size_t>(c)] / piv;
      for (int k = c; k < s; ++k) row[static_cast<std::size_t>(k)] -= q * A[static_cast<std::size_t>(c)][static_cast<std::size_t>(k)];
    }
  }
  // disc = (-1)^(n(n-1)/2) res(f, f') / lead(f)
  PadicNumber d = det / f.back();
  if ((n * (n - 1) / 2) % 2 == 1) d = -d;
  return d;
}

bool simplicity_check(const std::vector<PadicNumber>& f) {
  return !discriminant(f).is_zero();
}

}  // namespace ccz
