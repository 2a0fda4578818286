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

#include "ccz/jacobian.hpp"

#include <sstream>

#include "ccz/local.hpp"

namespace ccz {

namespace fp {

namespace {
std::int64_t norm(std::int64_t a, std::int64_t p) {
  a %= p;
  return a < 0 ? a + p : a;
}
}  // namespace

void trim(FpPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int degree(const FpPoly& a) {
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i) {
    if (a[static_cast<std::size_t>(i)] != 0) return i;
  }
  return -1;
}

FpPoly add(const FpPoly& a, const FpPoly& b, std::int64_t p) {
  FpPoly c(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) c[i] = norm(c[i] + b[i], p);
  trim(c);
  return c;
}

FpPoly sub(const FpPoly& a, const FpPoly& b, std::int64_t p) {
  FpPoly c(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) c[i] = norm(c[i] - b[i], p);
  trim(c);
  return c;
}

FpPoly mul(const FpPoly& a, const FpPoly& b, std::int64_t p) {
  if (a.empty() || b.empty()) return {};
  FpPoly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  }
  trim(c);
  return c;
}

FpPoly scale(const FpPoly& a, std::int64_t c, std::int64_t p) {
  FpPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = norm(a[i] * norm(c, p), p);
  trim(r);
  return r;
}

std::int64_t inverse(std::int64_t a, std::int64_t p) {
  a = norm(a, p);
  if (a == 0) throw DomainError("fp::inverse: zero");
  std::int64_t r = 1;
  std::int64_t b = a;
  for (std::int64_t e = p - 2; e > 0; e >>= 1) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
  }
  return r;
}

void divmod(const FpPoly& a, const FpPoly& b, std::int64_t p, FpPoly& q, FpPoly& r) {
  const int db = degree(b);
  if (db < 0) throw DomainError("fp::divmod: division by zero");
  r = a;
  trim(r);
  const int da = degree(r);
  q.assign(static_cast<std::size_t>(std::max(da - db + 1, 0)), 0);
  const std::int64_t lead_inv = inverse(b[static_cast<std::size_t>(db)], p);
  for (int d = da; d >= db; --d) {
    const std::int64_t c = r[static_cast<std::size_t>(d)] * lead_inv % p;
    if (c == 0) continue;
    q[static_cast<std::size_t>(d - db)] = c;
    for (int i = 0; i <= db; ++i) {
      auto& t = r[static_cast<std::size_t>(d - db + i)];
      t = norm(t - c * b[static_cast<std::size_t>(i)], p);
    }
  }
  trim(q);
  trim(r);
}

FpPoly mod(const FpPoly& a, const FpPoly& b, std::int64_t p) {
  FpPoly q;
  FpPoly r;
  divmod(a, b, p, q, r);
  return r;
}

FpPoly make_monic(const FpPoly& a, std::int64_t p) {
  const int d = degree(a);
  if (d < 0) return {};
  return scale(a, inverse(a[static_cast<std::size_t>(d)], p), p);
}

FpPoly xgcd(const FpPoly& a, const FpPoly& b, std::int64_t p, FpPoly& s, FpPoly& t) {
  FpPoly r0 = a, r1 = b;
  FpPoly s0{1}, s1{};
  FpPoly t0{}, t1{1};
  trim(r0);
  trim(r1);
  while (degree(r1) >= 0) {
    FpPoly q;
    FpPoly r;
    divmod(r0, r1, p, q, r);
    FpPoly s2 = sub(s0, mul(q, s1, p), p);
    FpPoly t2 = sub(t0, mul(q, t1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  const int d = degree(r0);
  if (d < 0) {
    s = {};
    t = {};
    return {};
  }
  const std::int64_t inv = inverse(r0[static_cast<std::size_t>(d)], p);
  s = scale(s0, inv, p);
  t = scale(t0, inv, p);
  return scale(r0, inv, p);
}

std::string to_string(const FpPoly& a) {
  if (degree(a) < 0) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(a); i >= 0; --i) {
    const std::int64_t c = a[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0 || c != 1) os << c;
    if (i > 0) os << (c != 1 ? "*" : "") << "x";
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

}  // namespace fp

std::string MumfordDivisor::to_string() const {
  return "(" + fp::to_string(u) + ", " + fp::to_string(v) + ")";
}

JacobianFp::JacobianFp(const HyperellipticCurve& curve, Prime p) : p_(p) {
  curve.require_good_reduction(p);
  f_ = curve.F_mod_p(p);
  fp::trim(f_);
}

bool JacobianFp::is_valid(const MumfordDivisor& d) const {
  const int du = fp::degree(d.u);
  if (du < 0 || du > kGenus || d.u[static_cast<std::size_t>(du)] != 1) return false;
  if (fp::degree(d.v) >= du) return false;
  return fp::degree(fp::mod(fp::sub(fp::mul(d.v, d.v, p_), f_, p_), d.u, p_)) < 0;
}

MumfordDivisor JacobianFp::point_class(const FpPoint& P) const {
  if (P.infinity) return identity();
  MumfordDivisor d;
  d.u = {(p_ - P.x % p_) % p_, 1};
  d.v = {P.y % p_};
  fp::trim(d.v);
  if (!is_valid(d)) throw DomainError("point_class: " + P.to_string() + " is not on the curve");
  return d;
}

MumfordDivisor JacobianFp::reduce(FpPoly u, FpPoly v) const {
  v = fp::mod(v, u, p_);
  while (fp::degree(u) > kGenus) {
    FpPoly q;
    FpPoly r;
    fp::divmod(fp::sub(f_, fp::mul(v, v, p_), p_), u, p_, q, r);
    u = fp::make_monic(q, p_);
    v = fp::mod(fp::scale(v, p_ - 1, p_), u, p_);
  }
  MumfordDivisor d;
  d.u = fp::make_monic(u, p_);
  d.v = fp::mod(v, d.u, p_);
  return d;
}

MumfordDivisor JacobianFp::add(const MumfordDivisor& a, const MumfordDivisor& b) const {
  FpPoly e1;
  FpPoly e2;
  const FpPoly d0 = fp::xgcd(a.u, b.u, p_, e1, e2);
  FpPoly c1;
  FpPoly c2;
  const FpPoly d = fp::xgcd(d0, fp::add(a.v, b.v, p_), p_, c1, c2);
  const FpPoly s1 = fp::mul(c1, e1, p_);
  const FpPoly s2 = fp::mul(c1, e2, p_);
  const FpPoly& s3 = c2;
  FpPoly q;
  FpPoly r;
  fp::divmod(fp::mul(a.u, b.u, p_), fp::mul(d, d, p_), p_, q, r);
  const FpPoly u = q;
  FpPoly num = fp::add(fp::mul(fp::mul(s1, a.u, p_), b.v, p_), fp::mul(fp::mul(s2, b.u, p_), a.v, p_), p_);
  num = fp::add(num, fp::mul(s3, fp::add(fp::mul(a.v, b.v, p_), f_, p_), p_), p_);
  fp::divmod(num, d, p_, q, r);
  return reduce(u, q);
}

MumfordDivisor JacobianFp::negate(const MumfordDivisor& a) const {
  return {a.u, fp::scale(a.v, p_ - 1, p_)};
}

MumfordDivisor JacobianFp::multiply(const MumfordDivisor& a, const mpz_class& k) const {
  if (k < 0) return multiply(negate(a), -k);
  MumfordDivisor acc;
  MumfordDivisor base = a;
  mpz_class e = k;
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) acc = add(acc, base);
    e >>= 1;
    if (e > 0) base = add(base, base);
  }
  return acc;
}

std::vector<std::pair<mpz_class, int>> factor_small(mpz_class n) {
  std::vector<std::pair<mpz_class, int>> out;
  if (n < 0) n = -n;
  for (mpz_class q = 2; q * q <= n; ++q) {
    int e = 0;
    while (n % q == 0) {
      n /= q;
      ++e;
    }
    if (e > 0) out.emplace_back(q, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

mpz_class JacobianFp::element_order(const MumfordDivisor& d, const mpz_class& group_order) const {
  if (!multiply(d, group_order).is_identity()) {
    throw DomainError("element_order: " + d.to_string() + " is not killed by " + group_order.get_str());
  }
  mpz_class order = group_order;
  for (const auto& [q, e] : factor_small(group_order)) {
    for (int i = 0; i < e; ++i) {
      if (order % q != 0) break;
      if (!multiply(d, order / q).is_identity()) break;
      order /= q;
    }
  }
  return order;
}

std::vector<MumfordDivisor> JacobianFp::enumerate() const {
  std::vector<MumfordDivisor> out;
  out.push_back(identity());
  for (int du = 1; du <= kGenus; ++du) {
    std::int64_t count_u = 1;
    for (int i = 0; i < du; ++i) count_u *= p_;
    for (std::int64_t cu = 0; cu < count_u; ++cu) {
      FpPoly u(static_cast<std::size_t>(du) + 1, 0);
      std::int64_t c = cu;
      for (int i = 0; i < du; ++i) {
        u[static_cast<std::size_t>(i)] = c % p_;
        c /= p_;
      }
      u[static_cast<std::size_t>(du)] = 1;
      const FpPoly fu = fp::mod(f_, u, p_);
      for (std::int64_t cv = 0; cv < count_u; ++cv) {
        FpPoly v(static_cast<std::size_t>(du), 0);
        std::int64_t c2 = cv;
        for (int i = 0; i < du; ++i) {
          v[static_cast<std::size_t>(i)] = c2 % p_;
          c2 /= p_;
        }
        fp::trim(v);
        if (fp::mod(fp::mul(v, v, p_), u, p_) == fu) out.push_back({u, v});
      }
    }
  }
  return out;
}

mpz_class JacobianFp::order_by_enumeration() const {
  return mpz_class(static_cast<unsigned long>(enumerate().size()));
}

AnomalyFlags is_nonanomalous(const JacobianFp& jac, const MumfordDivisor& d,
                             const mpz_class& group_order) {
  AnomalyFlags f;
  const mpz_class p = jac.prime();
  f.order_prime_to_p = jac.element_order(d, group_order) % p != 0;
  f.p_squared_free = group_order % (p * p) != 0;
  return f;
}

}  // namespace ccz
