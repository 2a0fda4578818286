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

#include "ccz/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace ccz {
namespace qpoly {

void trim(QPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int degree(const QPoly& f) {
  for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i) {
    if (f[static_cast<std::size_t>(i)] != 0) return i;
  }
  return -1;
}

mpq_class eval(const QPoly& f, const mpq_class& x) {
  mpq_class acc = 0;
  for (auto it = f.rbegin(); it != f.rend(); ++it) acc = acc * x + *it;
  return acc;
}

QPoly derivative(const QPoly& f) {
  QPoly d;
  for (std::size_t i = 1; i < f.size(); ++i) d.push_back(f[i] * static_cast<long>(i));
  trim(d);
  return d;
}

QPoly mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly c(a.size() + b.size() - 1, mpq_class(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  trim(c);
  return c;
}

QPoly add(const QPoly& a, const QPoly& b) {
  QPoly c(std::max(a.size(), b.size()), mpq_class(0));
  for (std::size_t i = 0; i < a.size(); ++i) c[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) c[i] += b[i];
  trim(c);
  return c;
}

QPoly scale(const QPoly& a, const mpq_class& k) {
  QPoly c = a;
  for (auto& x : c) x *= k;
  trim(c);
  return c;
}

mpq_class determinant(std::vector<std::vector<mpq_class>> m) {
  const std::size_t n = m.size();
  mpq_class det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      mpq_class factor = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= factor * m[col][c];
    }
  }
  return det;
}

mpq_class resultant(const QPoly& a, const QPoly& b) {
  const int da = degree(a);
  const int db = degree(b);
  if (da < 0 || db < 0) return 0;
  const int n = da + db;
  if (n == 0) return 1;
  std::vector<std::vector<mpq_class>> s(static_cast<std::size_t>(n),
                                        std::vector<mpq_class>(static_cast<std::size_t>(n), 0));
  for (int r = 0; r < db; ++r) {
    for (int i = 0; i <= da; ++i) {
      s[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + i)] =
          a[static_cast<std::size_t>(da - i)];
    }
  }
  for (int r = 0; r < da; ++r) {
    for (int i = 0; i <= db; ++i) {
      s[static_cast<std::size_t>(db + r)][static_cast<std::size_t>(r + i)] =
          b[static_cast<std::size_t>(db - i)];
    }
  }
  return determinant(std::move(s));
}

mpq_class discriminant(const QPoly& f) {
  const int n = degree(f);
  if (n < 1) return 0;
  mpq_class r = resultant(f, derivative(f)) / f[static_cast<std::size_t>(n)];
  if ((n * (n - 1) / 2) % 2 == 1) r = -r;
  return r;
}

namespace {

std::vector<mpz_class> divisors(mpz_class n) {
  if (n < 0) n = -n;
  std::vector<mpz_class> small;
  std::vector<mpz_class> large;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace

std::vector<mpq_class> rational_roots(const QPoly& f0) {
  QPoly f = f0;
  trim(f);
  std::vector<mpq_class> roots;
  if (degree(f) < 1) return roots;
  // Zero as a root, then deflate by x.
  std::size_t shift = 0;
  while (shift < f.size() && f[shift] == 0) ++shift;
  if (shift > 0) roots.push_back(0);
  QPoly g(f.begin() + static_cast<std::ptrdiff_t>(shift), f.end());
  if (degree(g) < 1) return roots;
  mpz_class lcm = 1;
  for (const auto& c : g) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
  std::vector<mpz_class> ig;
  for (const auto& c : g) ig.push_back(mpz_class(c * lcm));
  // Candidates a/b with a | ig[0], b | ig[n]; divisor enumeration is fine for
  // the coefficient sizes seen in practice (|c| up to ~10^12).
  const mpz_class c0 = abs(ig.front());
  const mpz_class cn = abs(ig.back());
  if (c0 > mpz_class("1000000000000") || cn > mpz_class("1000000000000")) {
    throw DomainError("rational_roots: coefficients too large for divisor search");
  }
  for (const auto& a : divisors(c0)) {
    for (const auto& b : divisors(cn)) {
      for (int sign : {1, -1}) {
        mpq_class x(a * sign, b);
        x.canonicalize();
        if (eval(g, x) == 0 &&
            std::find(roots.begin(), roots.end(), x) == roots.end()) {
          roots.push_back(x);
        }
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::string to_string(const QPoly& f0, const std::string& var) {
  QPoly f = f0;
  trim(f);
  if (f.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i) {
    mpq_class c = f[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    const bool neg = c < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) out << "-";
    } else {
      out << (neg ? " - " : " + ");
    }
    first = false;
    if (i == 0 || c != 1) {
      out << c.get_str();
      if (i > 0) out << "*";
    }
    if (i >= 1) out << var;
    if (i >= 2) out << "^" << i;
  }
  return out.str();
}

std::vector<PadicNumber> to_padic(const QPoly& f, Prime p, int n) {
  std::vector<PadicNumber> r;
  r.reserve(f.size());
  for (const auto& c : f) r.push_back(PadicNumber::from_rational(p, c, n));
  return r;
}

PadicNumber eval(const std::vector<PadicNumber>& f, const PadicNumber& x) {
  PadicNumber acc = PadicNumber::zero(x.prime());
  for (auto it = f.rbegin(); it != f.rend(); ++it) acc = acc * x + *it;
  return acc;
}

}  // namespace qpoly

std::int64_t mod_p(const mpq_class& q, Prime p) {
  if (!is_p_integral(q, p)) throw DomainError("mod_p: denominator divisible by p");
  mpz_class m(static_cast<long>(p));
  mpz_class inv;
  mpz_class den = q.get_den();
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t());
  mpz_class r = q.get_num() * inv;
  return static_cast<std::int64_t>(mpz_fdiv_ui(r.get_mpz_t(), static_cast<unsigned long>(p)));
}

bool is_p_integral(const mpq_class& q, Prime p) {
  return !mpz_divisible_ui_p(q.get_den().get_mpz_t(), static_cast<unsigned long>(p));
}

int rational_valuation(const mpq_class& q, Prime p) {
  if (q == 0) return kExactPrecision;
  return valuation_of(p, mpz_class(q.get_num())) - valuation_of(p, mpz_class(q.get_den()));
}

mpq_class parse_rational(const std::string& s0) {
  std::string s;
  for (char c : s0) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw BadInputError("empty rational number");
  const auto slash = s.find('/');
  auto check_int = [&](const std::string& t) {
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i >= t.size()) throw BadInputError("malformed rational: " + s0);
    for (; i < t.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) {
        throw BadInputError("malformed rational: " + s0);
      }
    }
  };
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  check_int(num);
  check_int(den);
  if (!num.empty() && num[0] == '+') num = num.substr(1);
  if (!den.empty() && den[0] == '+') den = den.substr(1);
  mpz_class n(num);
  mpz_class d(den);
  if (d == 0) throw BadInputError("zero denominator: " + s0);
  mpq_class q(n, d);
  q.canonicalize();
  return q;
}

std::string format_rational(const mpq_class& q) { return q.get_str(); }

bool is_rational_square(const mpq_class& q, mpq_class* root) {
  if (q < 0) return false;
  if (q == 0) {
    if (root) *root = 0;
    return true;
  }
  if (!mpz_perfect_square_p(q.get_num().get_mpz_t()) ||
      !mpz_perfect_square_p(q.get_den().get_mpz_t())) {
    return false;
  }
  if (root) {
    mpz_class a;
    mpz_class b;
    mpz_sqrt(a.get_mpz_t(), q.get_num().get_mpz_t());
    mpz_sqrt(b.get_mpz_t(), q.get_den().get_mpz_t());
    *root = mpq_class(a, b);
  }
  return true;
}

}  // namespace ccz
