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

#include "ccz/padic.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <unordered_map>
#include <vector>

namespace ccz {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kBadInput: return "bad_input";
    case ErrorKind::kBadReduction: return "bad_reduction";
    case ErrorKind::kPrecision: return "precision";
    case ErrorKind::kDomain: return "domain";
    case ErrorKind::kSimplicity: return "simplicity";
    case ErrorKind::kRecognition: return "recognition";
  }
  return "unknown";
}

const mpz_class& prime_power(Prime p, int n) {
  if (n < 0 || n > 100000) {
    throw PrecisionError("prime_power: exponent out of range: " +
                         std::to_string(n));
  }
  thread_local std::unordered_map<Prime, std::deque<mpz_class>> table;
  auto& powers = table[p];
  if (powers.empty()) powers.emplace_back(1);
  while (static_cast<int>(powers.size()) <= n) {
    powers.push_back(powers.back() * static_cast<long>(p));
  }
  return powers[static_cast<std::size_t>(n)];
}

int valuation_of(Prime p, const mpz_class& n) {
  if (n == 0) return kExactPrecision;
  mpz_class m = n;
  int v = 0;
  while (mpz_divisible_ui_p(m.get_mpz_t(), static_cast<unsigned long>(p))) {
    mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), static_cast<unsigned long>(p));
    ++v;
  }
  return v;
}

int valuation_of(Prime p, std::int64_t n) {
  if (n == 0) return kExactPrecision;
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

mpz_class inverse_mod_prime_power(const mpz_class& n, Prime p, int k) {
  const mpz_class& m = prime_power(p, k);
  mpz_class r;
  if (mpz_invert(r.get_mpz_t(), n.get_mpz_t(), m.get_mpz_t()) == 0) {
    throw DomainError("inverse_mod_prime_power: not a unit");
  }
  return r;
}

namespace {

mpz_class mod_power(const mpz_class& x, Prime p, int k) {
  if (k >= kExactRelative) return x;
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), prime_power(p, k).get_mpz_t());
  return r;
}

void require_same_prime(const PadicNumber& a, const PadicNumber& b) {
  if (a.prime() != b.prime()) {
    throw DomainError("p-adic operands have different primes");
  }
}

}  // namespace

PadicNumber PadicNumber::zero(Prime p, int absolute_precision) {
  return PadicNumber(p, 0, std::min(absolute_precision, kExactPrecision), 0);
}

PadicNumber PadicNumber::from_parts(Prime p, mpz_class unit, int valuation,
                                    int relative_precision) {
  if (p < 3 || p % 2 == 0) throw DomainError("prime must be odd");
  if (relative_precision <= 0) {
    return zero(p, valuation + std::max(relative_precision, 0));
  }
  unit = mod_power(unit, p, relative_precision);
  if (unit == 0) return zero(p, valuation + relative_precision);
  int w = 0;
  while (mpz_divisible_ui_p(unit.get_mpz_t(), static_cast<unsigned long>(p))) {
    mpz_divexact_ui(unit.get_mpz_t(), unit.get_mpz_t(),
                    static_cast<unsigned long>(p));
    ++w;
  }
  return PadicNumber(p, std::move(unit), valuation + w, relative_precision - w);
}

PadicNumber PadicNumber::from_integer(Prime p, const mpz_class& n,
                                      int absolute_precision) {
  if (n == 0) return zero(p, absolute_precision);
  int v = valuation_of(p, n);
  if (v >= absolute_precision) return zero(p, absolute_precision);
  mpz_class u = n;
  mpz_divexact(u.get_mpz_t(), u.get_mpz_t(), prime_power(p, v).get_mpz_t());
  return from_parts(p, std::move(u), v, absolute_precision - v);
}

PadicNumber PadicNumber::exact(Prime p, const mpz_class& n) {
  return from_integer(p, n, kExactPrecision);
}

PadicNumber PadicNumber::from_integer(Prime p, std::int64_t n,
                                      int absolute_precision) {
  return from_integer(p, mpz_class(static_cast<long>(n)), absolute_precision);
}

PadicNumber PadicNumber::from_rational(Prime p, const mpq_class& q,
                                       int absolute_precision) {
  if (q == 0) return zero(p, absolute_precision);
  mpz_class num = q.get_num();
  mpz_class den = q.get_den();
  int vn = valuation_of(p, num);
  int vd = valuation_of(p, den);
  mpz_divexact(num.get_mpz_t(), num.get_mpz_t(), prime_power(p, vn).get_mpz_t());
  mpz_divexact(den.get_mpz_t(), den.get_mpz_t(), prime_power(p, vd).get_mpz_t());
  int v = vn - vd;
  int rel = absolute_precision - v;
  if (rel <= 0) return zero(p, absolute_precision);
  if (rel >= kExactRelative) {
    if (den != 1) throw PrecisionError("from_rational: non-integral exact value");
    return from_parts(p, std::move(num), v, rel);
  }
  mpz_class u = num * inverse_mod_prime_power(den, p, rel);
  return from_parts(p, std::move(u), v, rel);
}

PadicNumber PadicNumber::operator-() const {
  if (is_zero()) return *this;
  if (rel_ >= kExactRelative) return PadicNumber(p_, -unit_, val_, rel_);
  return PadicNumber(p_, prime_power(p_, rel_) - unit_, val_, rel_);
}

PadicNumber operator+(const PadicNumber& a, const PadicNumber& b) {
  require_same_prime(a, b);
  const Prime p = a.p_;
  const int abs = std::min(a.absolute_precision(), b.absolute_precision());
  if (a.is_zero() && b.is_zero()) return PadicNumber::zero(p, abs);
  if (a.is_zero()) return b.with_absolute_precision(abs);
  if (b.is_zero()) return a.with_absolute_precision(abs);
  const int v = std::min(a.val_, b.val_);
  const int rel = abs - v;
  if (rel <= 0) return PadicNumber::zero(p, abs);
  mpz_class s = 0;
  if (a.val_ - v < rel) s += a.unit_ * prime_power(p, a.val_ - v);
  if (b.val_ - v < rel) s += b.unit_ * prime_power(p, b.val_ - v);
  return PadicNumber::from_parts(p, std::move(s), v, rel);
}

PadicNumber operator-(const PadicNumber& a, const PadicNumber& b) {
  return a + (-b);
}

PadicNumber operator*(const PadicNumber& a, const PadicNumber& b) {
  require_same_prime(a, b);
  const Prime p = a.p_;
  if (a.is_zero() || b.is_zero()) {
    return PadicNumber::zero(p, std::min(a.val_ + b.val_, kExactPrecision));
  }
  const int rel = std::min(a.rel_, b.rel_);
  mpz_class u = a.unit_ * b.unit_;
  return PadicNumber(p, mod_power(u, p, rel), a.val_ + b.val_, rel);
}

PadicNumber operator/(const PadicNumber& a, const PadicNumber& b) {
  require_same_prime(a, b);
  const Prime p = a.p_;
  if (b.is_zero()) throw DomainError("p-adic division by zero");
  if (a.is_zero()) {
    if (a.is_exact_zero()) return a;
    return PadicNumber::zero(p, a.val_ - b.val_);
  }
  const int rel = std::min(a.rel_, b.rel_);
  if (rel >= kExactRelative &&
      mpz_divisible_p(a.unit_.get_mpz_t(), b.unit_.get_mpz_t())) {
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), a.unit_.get_mpz_t(), b.unit_.get_mpz_t());
    return PadicNumber(p, std::move(q), a.val_ - b.val_, rel);
  }
  if (rel >= kExactRelative) {
    const int digits = kExactQuotientDigits;
    mpz_class u = a.unit_ * inverse_mod_prime_power(b.unit_, p, digits);
    return PadicNumber::from_parts(p, std::move(u), a.val_ - b.val_, digits);
  }
  mpz_class u = a.unit_ * inverse_mod_prime_power(b.unit_, p, rel);
  return PadicNumber(p, mod_power(u, p, rel), a.val_ - b.val_, rel);
}

PadicNumber PadicNumber::operator*(std::int64_t k) const {
  if (k == 0) return zero(p_);
  return *this * PadicNumber::from_parts(p_, mpz_class(static_cast<long>(k)), 0,
                                         kExactRelative);
}

PadicNumber PadicNumber::divided_by(std::int64_t k) const {
  if (k == 0) throw DomainError("division by zero integer");
  const int v = valuation_of(p_, k);
  std::int64_t unit = k;
  for (int i = 0; i < v; ++i) unit /= p_;
  if (is_zero()) {
    if (is_exact_zero()) return *this;
    return zero(p_, val_ - v);
  }
  return *this / PadicNumber(p_, mpz_class(static_cast<long>(unit)), v,
                             kExactRelative);
}

PadicNumber PadicNumber::shifted(int k) const {
  if (is_zero()) {
    if (is_exact_zero()) return *this;
    return zero(p_, val_ + k);
  }
  return PadicNumber(p_, unit_, val_ + k, rel_);
}

PadicNumber PadicNumber::pow(std::uint64_t e) const {
  if (e == 0) {
    int rel = is_zero() ? kExactRelative : rel_;
    return PadicNumber(p_, 1, 0, rel);
  }
  if (is_zero()) {
    long long v = static_cast<long long>(val_) * static_cast<long long>(e);
    return zero(p_, static_cast<int>(std::min<long long>(v, kExactPrecision)));
  }
  mpz_class u;
  mpz_class ee(static_cast<unsigned long>(e));
  if (rel_ >= kExactRelative) {
    mpz_pow_ui(u.get_mpz_t(), unit_.get_mpz_t(), static_cast<unsigned long>(e));
    return PadicNumber(p_, std::move(u), val_ * static_cast<int>(e), rel_);
  }
  mpz_powm(u.get_mpz_t(), unit_.get_mpz_t(), ee.get_mpz_t(),
           prime_power(p_, rel_).get_mpz_t());
  return PadicNumber(p_, std::move(u), val_ * static_cast<int>(e), rel_);
}

PadicNumber PadicNumber::with_absolute_precision(int absolute_precision) const {
  if (is_zero()) return zero(p_, std::min(val_, absolute_precision));
  if (absolute_precision <= val_) return zero(p_, absolute_precision);
  const int rel = std::min(rel_, absolute_precision - val_);
  if (rel == rel_) return *this;
  return PadicNumber(p_, mod_power(unit_, p_, rel), val_, rel);
}

PadicNumber PadicNumber::with_relative_precision(int relative_precision) const {
  if (is_zero()) return *this;
  return with_absolute_precision(val_ + relative_precision);
}

mpz_class PadicNumber::residue(int n) const {
  if (n <= 0) return 0;
  if (absolute_precision() < n) {
    throw PrecisionError("residue: value known only mod p^" +
                         std::to_string(absolute_precision()) + ", need p^" +
                         std::to_string(n));
  }
  if (is_zero() || val_ >= n) return 0;
  if (val_ < 0) throw DomainError("residue: value is not integral");
  return mod_power(unit_ * prime_power(p_, val_), p_, n);
}

std::int64_t PadicNumber::residue_mod_p() const {
  return residue(1).get_si();
}

mpz_class PadicNumber::balanced_lift(int n) const {
  mpz_class r = residue(n);
  const mpz_class& m = prime_power(p_, n);
  if (2 * r > m) r -= m;
  return r;
}

bool PadicNumber::congruent(const PadicNumber& b, int n) const {
  const int m = std::min({n, absolute_precision(), b.absolute_precision()});
  PadicNumber d = *this - b;
  return d.valuation() >= m;
}

bool operator==(const PadicNumber& a, const PadicNumber& b) {
  return a.p_ == b.p_ && a.val_ == b.val_ && a.rel_ == b.rel_ &&
         a.unit_ == b.unit_;
}

std::string PadicNumber::to_digits() const {
  std::ostringstream out;
  auto power = [&](int e) {
    std::ostringstream s;
    if (e == 1) {
      s << p_;
    } else {
      s << p_ << "^" << e;
    }
    return s.str();
  };
  bool first = true;
  if (!is_zero() && rel_ >= kExactRelative) {
    mpz_class value = unit_;
    if (val_ >= 0) {
      value *= prime_power(p_, val_);
      return value.get_str();
    }
    return value.get_str() + "/" + prime_power(p_, -val_).get_str();
  }
  if (!is_zero()) {
    mpz_class u = unit_;
    for (int i = 0; i < rel_; ++i) {
      mpz_class d;
      mpz_fdiv_qr_ui(u.get_mpz_t(), d.get_mpz_t(), u.get_mpz_t(),
                     static_cast<unsigned long>(p_));
      if (d == 0) continue;
      const int e = val_ + i;
      if (!first) out << " + ";
      first = false;
      if (e == 0) {
        out << d.get_str();
      } else if (d == 1) {
        out << power(e);
      } else {
        out << d.get_str() << "*" << power(e);
      }
    }
  }
  if (absolute_precision() >= kExactPrecision) {
    if (first) out << "0";
    return out.str();
  }
  if (!first) out << " + ";
  out << "O(" << p_ << "^" << absolute_precision() << ")";
  return out.str();
}

PadicNumber teichmuller(const PadicNumber& a, int target_precision) {
  if (!a.is_unit()) throw DomainError("teichmuller: input is not a unit");
  const Prime p = a.prime();
  const mpz_class& m = prime_power(p, target_precision);
  mpz_class x = a.residue(1);
  mpz_class e(static_cast<long>(p));
  for (int i = 0; i <= target_precision + 1; ++i) {
    mpz_class next;
    mpz_powm(next.get_mpz_t(), x.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
    if (next == x) break;
    x = next;
  }
  return PadicNumber::from_parts(p, x, 0, target_precision);
}

bool is_square(const PadicNumber& a) {
  if (a.is_zero()) return true;
  if (a.valuation() % 2 != 0) return false;
  const Prime p = a.prime();
  mpz_class u = mpz_fdiv_ui(a.unit().get_mpz_t(), static_cast<unsigned long>(p));
  return mpz_legendre(u.get_mpz_t(), mpz_class(static_cast<long>(p)).get_mpz_t()) == 1;
}

PadicNumber sqrt(const PadicNumber& a, const std::optional<PadicNumber>& branch) {
  const Prime p = a.prime();
  if (a.is_zero()) return PadicNumber::zero(p, (a.valuation() + 1) / 2);
  if (a.valuation() % 2 != 0) throw DomainError("sqrt: odd valuation");
  if (a.is_exact()) throw PrecisionError("sqrt: needs a finite precision");
  const std::int64_t u = mpz_class(a.unit() % static_cast<long>(p)).get_si();
  std::int64_t r = -1;
  for (std::int64_t c = 1; c <= (p - 1) / 2; ++c) {
    if ((c * c) % p == u) {
      r = c;
      break;
    }
  }
  if (r < 0) throw DomainError("sqrt: unit part is not a square mod p");
  if (branch.has_value()) {
    if (branch->is_zero()) throw DomainError("sqrt: zero branch hint");
    const std::int64_t h = static_cast<std::int64_t>(
        mpz_fdiv_ui(branch->unit().get_mpz_t(), static_cast<unsigned long>(p)));
    if (h == p - r) {
      r = p - r;
    } else if (h != r) {
      throw DomainError("sqrt: branch hint is not a root mod p");
    }
  }
  const int rel = a.relative_precision();
  const mpz_class& m = prime_power(p, rel);
  const mpz_class inv2 = inverse_mod_prime_power(2, p, rel);
  mpz_class x = r;
  for (int prec = 1; prec < 2 * rel + 2; prec *= 2) {
    mpz_class xinv = inverse_mod_prime_power(x, p, rel);
    x = ((x + a.unit() * xinv) * inv2) % m;
    if (x < 0) x += m;
  }
  return PadicNumber::from_parts(p, x, a.valuation() / 2, rel);
}

PadicNumber hensel_lift_root(std::span<const mpq_class> coefficients,
                             const PadicNumber& x0, int target_precision) {
  const Prime p = x0.prime();
  if (coefficients.empty()) throw DomainError("hensel_lift_root: empty polynomial");
  const int work = target_precision + 2;
  std::vector<PadicNumber> f;
  std::vector<PadicNumber> df;
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    f.push_back(PadicNumber::from_rational(p, coefficients[i], work));
    if (i > 0) {
      df.push_back(PadicNumber::from_rational(
          p, coefficients[i] * static_cast<long>(i), work));
    }
  }
  auto eval = [](const std::vector<PadicNumber>& c, const PadicNumber& x) {
    PadicNumber acc = PadicNumber::zero(x.prime());
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
  };
  PadicNumber x = PadicNumber::from_integer(p, x0.residue(1), work);
  if (eval(f, x).valuation() < 1) {
    throw DomainError("hensel_lift_root: x0 is not a root mod p");
  }
  if (df.empty() || eval(df, x).valuation() != 0) {
    throw DomainError("hensel_lift_root: root is not simple mod p");
  }
  for (int prec = 1; prec < 2 * work; prec *= 2) {
    PadicNumber fx = eval(f, x);
    if (fx.is_zero()) break;
    x = x - fx / eval(df, x);
    x = x.with_absolute_precision(work);
  }
  return x.with_absolute_precision(target_precision);
}

PadicRecord to_record(const PadicNumber& x) {
  PadicRecord r;
  r.prime = x.prime();
  r.valuation = x.valuation();
  r.unit = x.unit().get_str();
  r.absolute_precision = x.absolute_precision();
  return r;
}

PadicNumber from_record(const PadicRecord& r) {
  mpz_class u(r.unit);
  if (u == 0) return PadicNumber::zero(r.prime, r.absolute_precision);
  return PadicNumber::from_parts(r.prime, u, r.valuation,
                                 r.absolute_precision - r.valuation);
}

}  // namespace ccz
