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

#include "ccz/series.hpp"

#include <algorithm>
#include <sstream>

namespace ccz {

PadicPowerSeries::PadicPowerSeries(Prime p, std::vector<PadicNumber> coefficients,
                                   int t_precision)
    : p_(p), c_(std::move(coefficients)) {
  if (t_precision < 0) throw DomainError("negative t-precision");
  c_.resize(static_cast<std::size_t>(t_precision), PadicNumber::zero(p));
  for (auto& c : c_) {
    if (c.prime() == 0) c = PadicNumber::zero(p);
    if (c.prime() != p) throw DomainError("series coefficient has wrong prime");
  }
}

PadicPowerSeries PadicPowerSeries::zero(Prime p, int t_precision) {
  return PadicPowerSeries(p, {}, t_precision);
}

PadicPowerSeries PadicPowerSeries::constant(const PadicNumber& c, int t_precision) {
  return PadicPowerSeries(c.prime(), {c}, t_precision);
}

PadicPowerSeries PadicPowerSeries::variable(Prime p, int t_precision) {
  return PadicPowerSeries(p, {PadicNumber::zero(p), PadicNumber::exact(p, 1)},
                          t_precision);
}

int PadicPowerSeries::min_valuation() const {
  int v = kExactPrecision;
  for (const auto& c : c_) {
    if (!c.is_zero()) v = std::min(v, c.valuation());
  }
  return v;
}

int PadicPowerSeries::min_absolute_precision() const {
  int v = kExactPrecision;
  for (const auto& c : c_) v = std::min(v, c.absolute_precision());
  return v;
}

int PadicPowerSeries::order_mod_p() const {
  for (int i = 0; i < t_precision(); ++i) {
    const auto& c = c_[static_cast<std::size_t>(i)];
    if (c.is_zero()) {
      if (c.absolute_precision() < 1) {
        throw PrecisionError("order_mod_p: coefficient unknown mod p");
      }
      continue;
    }
    if (c.valuation() < 0) throw DomainError("order_mod_p: series not integral");
    if (c.valuation() == 0) return i;
  }
  return t_precision();
}

PadicPowerSeries PadicPowerSeries::truncated(int t_precision) const {
  std::vector<PadicNumber> c(c_.begin(),
                             c_.begin() + std::min<std::ptrdiff_t>(t_precision, this->t_precision()));
  return PadicPowerSeries(p_, std::move(c), std::min(t_precision, this->t_precision()));
}

PadicPowerSeries PadicPowerSeries::with_absolute_precision(int n) const {
  PadicPowerSeries r = *this;
  for (auto& c : r.c_) c = c.with_absolute_precision(n);
  return r;
}

PadicPowerSeries operator+(const PadicPowerSeries& a, const PadicPowerSeries& b) {
  const int m = std::min(a.t_precision(), b.t_precision());
  std::vector<PadicNumber> c;
  c.reserve(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) c.push_back(a[i] + b[i]);
  return PadicPowerSeries(a.p_, std::move(c), m);
}

PadicPowerSeries operator-(const PadicPowerSeries& a, const PadicPowerSeries& b) {
  return a + (-b);
}

PadicPowerSeries PadicPowerSeries::operator-() const {
  PadicPowerSeries r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

PadicPowerSeries PadicPowerSeries::operator*(const PadicNumber& k) const {
  PadicPowerSeries r = *this;
  for (auto& c : r.c_) c = c * k;
  return r;
}

PadicPowerSeries operator*(const PadicPowerSeries& a, const PadicPowerSeries& b) {
  const int m = std::min(a.t_precision(), b.t_precision());
  std::vector<PadicNumber> c(static_cast<std::size_t>(m), PadicNumber::zero(a.p_));
  for (int i = 0; i < m; ++i) {
    if (a[i].is_exact_zero()) continue;
    for (int j = 0; i + j < m; ++j) {
      if (b[j].is_exact_zero()) continue;
      c[static_cast<std::size_t>(i + j)] += a[i] * b[j];
    }
  }
  return PadicPowerSeries(a.p_, std::move(c), m);
}

PadicPowerSeries PadicPowerSeries::compose(const PadicPowerSeries& b) const {
  if (b.t_precision() > 0 && !b[0].is_zero()) {
    throw DomainError("compose: inner series has nonzero constant term");
  }
  const int m = std::min(t_precision(), b.t_precision());
  PadicPowerSeries acc = zero(p_, m);
  for (int i = t_precision() - 1; i >= 0; --i) {
    acc = acc * b + constant(c_[static_cast<std::size_t>(i)], m);
  }
  return acc;
}

PadicPowerSeries PadicPowerSeries::inverse() const {
  if (t_precision() == 0) return *this;
  const PadicNumber& a0 = c_[0];
  if (a0.is_zero() || a0.valuation() != 0) {
    throw DomainError("inverse: constant term is not a unit");
  }
  const int m = t_precision();
  std::vector<PadicNumber> r;
  r.reserve(static_cast<std::size_t>(m));
  r.push_back(a0.is_exact() ? PadicNumber::exact(p_, 1) / a0
                            : PadicNumber::exact(p_, 1).with_absolute_precision(
                                  a0.absolute_precision()) / a0);
  for (int k = 1; k < m; ++k) {
    PadicNumber s = PadicNumber::zero(p_);
    for (int i = 1; i <= k; ++i) {
      if (c_[static_cast<std::size_t>(i)].is_exact_zero()) continue;
      s += c_[static_cast<std::size_t>(i)] * r[static_cast<std::size_t>(k - i)];
    }
    r.push_back(-(s * r[0]));
  }
  return PadicPowerSeries(p_, std::move(r), m);
}

PadicPowerSeries PadicPowerSeries::derivative() const {
  const int m = std::max(t_precision() - 1, 0);
  std::vector<PadicNumber> c;
  c.reserve(static_cast<std::size_t>(m));
  for (int i = 1; i < t_precision(); ++i) c.push_back(c_[static_cast<std::size_t>(i)] * i);
  return PadicPowerSeries(p_, std::move(c), m);
}

PadicPowerSeries PadicPowerSeries::integral() const {
  const int m = t_precision() + 1;
  std::vector<PadicNumber> c;
  c.reserve(static_cast<std::size_t>(m));
  c.push_back(PadicNumber::zero(p_));
  for (int i = 0; i < t_precision(); ++i) {
    c.push_back(c_[static_cast<std::size_t>(i)].divided_by(i + 1));
  }
  return PadicPowerSeries(p_, std::move(c), m);
}

PadicPowerSeries PadicPowerSeries::scaled_by_p() const {
  PadicPowerSeries r = *this;
  for (int i = 0; i < t_precision(); ++i) {
    r.c_[static_cast<std::size_t>(i)] = r.c_[static_cast<std::size_t>(i)].shifted(i);
  }
  return r;
}

PadicPowerSeries PadicPowerSeries::shifted(int k) const {
  std::vector<PadicNumber> c(static_cast<std::size_t>(k), PadicNumber::zero(p_));
  c.insert(c.end(), c_.begin(), c_.end());
  return PadicPowerSeries(p_, std::move(c), t_precision() + k);
}

int tail_valuation_bound(Prime p, int t_precision, int t0_valuation,
                         TailBound tail) {
  if (tail.min_valuation >= kExactPrecision) return kExactPrecision;
  long long best = kExactPrecision;
  // i*s - ord_p(i) is eventually increasing; a window of a few multiples of
  // M plus p^2 covers every local minimum that can matter.
  const int hi = 4 * t_precision + static_cast<int>(p * p) + 16;
  for (int i = std::max(t_precision, 1); i <= hi; ++i) {
    long long v = static_cast<long long>(i) * t0_valuation + tail.min_valuation;
    if (tail.integrated) v -= valuation_of(p, static_cast<std::int64_t>(i));
    best = std::min(best, v);
  }
  return static_cast<int>(best);
}

PadicNumber PadicPowerSeries::evaluate_polynomial(const PadicNumber& t0) const {
  PadicNumber acc = PadicNumber::zero(p_);
  for (int i = t_precision() - 1; i >= 0; --i) {
    acc = acc * t0 + c_[static_cast<std::size_t>(i)];
  }
  return acc;
}

PadicNumber PadicPowerSeries::evaluate_in_disk(const PadicNumber& t0,
                                               TailBound tail) const {
  if (t0.prime() != p_) throw DomainError("evaluate_in_disk: prime mismatch");
  if (!t0.is_zero() && t0.valuation() < 1) {
    throw DomainError("evaluate_in_disk: point is not in pZ_p");
  }
  const int s = t0.is_zero() ? std::max(t0.valuation(), 1) : t0.valuation();
  const int bound = tail_valuation_bound(p_, t_precision(), s, tail);
  return evaluate_polynomial(t0).with_absolute_precision(bound);
}

std::string PadicPowerSeries::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (int i = 0; i < t_precision(); ++i) {
    const auto& c = c_[static_cast<std::size_t>(i)];
    if (c.is_exact_zero()) continue;
    if (!first) out << " + ";
    first = false;
    out << "(" << c.to_digits() << ")";
    if (i == 1) out << "*t";
    if (i > 1) out << "*t^" << i;
  }
  if (!first) out << " + ";
  out << "O(t^" << t_precision() << ")";
  return out.str();
}

PadicPowerSeries sqrt_series(const PadicPowerSeries& s, const PadicNumber& branch) {
  const Prime p = s.prime();
  if (s.t_precision() == 0) return s;
  if (s[0].is_zero() || s[0].valuation() != 0) {
    throw DomainError("sqrt_series: constant term is not a unit");
  }
  if (!(branch * branch).congruent(s[0], s[0].absolute_precision())) {
    throw DomainError("sqrt_series: branch does not square to s(0)");
  }
  const int m = s.t_precision();
  const PadicNumber y0 = s[0].is_exact() ? sqrt(s[0].with_absolute_precision(branch.absolute_precision()), branch)
                                         : sqrt(s[0], branch);
  PadicPowerSeries y = PadicPowerSeries::constant(y0, 1);
  for (int prec = 1; prec < m;) {
    prec = std::min(2 * prec, m);
    PadicPowerSeries yy(p, y.coefficients(), prec);
    PadicPowerSeries st = s.truncated(prec);
    PadicPowerSeries next = yy + st * yy.inverse();
    std::vector<PadicNumber> c;
    for (const auto& a : next.coefficients()) c.push_back(a.divided_by(2));
    y = PadicPowerSeries(p, std::move(c), prec);
  }
  return y;
}

}  // namespace ccz
