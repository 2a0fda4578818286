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

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "ccz/curve.hpp"

namespace ccz {

/// Dense polynomial over F_p, constant first, no trailing zeros.
using FpPoly = std::vector<std::int64_t>;

namespace fp {
void trim(FpPoly& a);
int degree(const FpPoly& a);  // -1 for zero
FpPoly add(const FpPoly& a, const FpPoly& b, std::int64_t p);
FpPoly sub(const FpPoly& a, const FpPoly& b, std::int64_t p);
FpPoly mul(const FpPoly& a, const FpPoly& b, std::int64_t p);
FpPoly scale(const FpPoly& a, std::int64_t c, std::int64_t p);
void divmod(const FpPoly& a, const FpPoly& b, std::int64_t p, FpPoly& q, FpPoly& r);
FpPoly mod(const FpPoly& a, const FpPoly& b, std::int64_t p);
FpPoly make_monic(const FpPoly& a, std::int64_t p);
/// Monic gcd g = s*a + t*b.
FpPoly xgcd(const FpPoly& a, const FpPoly& b, std::int64_t p, FpPoly& s, FpPoly& t);
std::int64_t inverse(std::int64_t a, std::int64_t p);
std::string to_string(const FpPoly& a);
}  // namespace fp

/// Reduced divisor (u, v): u monic of degree <= 3, deg v < deg u, and
/// v^2 = F mod u. The identity is (1, 0).
struct MumfordDivisor {
  FpPoly u{1};
  FpPoly v;

  bool is_identity() const { return u.size() == 1; }
  friend bool operator==(const MumfordDivisor&, const MumfordDivisor&) = default;
  friend auto operator<=>(const MumfordDivisor&, const MumfordDivisor&) = default;
  std::string to_string() const;
};

/// J(F_p) of the reduction of y^2 = F(x).
class JacobianFp {
 public:
  JacobianFp(const HyperellipticCurve& curve, Prime p);

  Prime prime() const { return p_; }
  const FpPoly& f() const { return f_; }

  MumfordDivisor identity() const { return {}; }
  bool is_valid(const MumfordDivisor& d) const;
  /// [P - infinity].
  MumfordDivisor point_class(const FpPoint& P) const;

  MumfordDivisor add(const MumfordDivisor& a, const MumfordDivisor& b) const;
  MumfordDivisor negate(const MumfordDivisor& a) const;
  MumfordDivisor multiply(const MumfordDivisor& a, const mpz_class& k) const;

  /// Exact order given a multiple of it (normally #J(F_p)). Throws
  /// DomainError if group_order does not annihilate d.
  mpz_class element_order(const MumfordDivisor& d, const mpz_class& group_order) const;

  /// Every reduced divisor, by enumeration (small p only).
  std::vector<MumfordDivisor> enumerate() const;
  /// #J(F_p) by enumeration.
  mpz_class order_by_enumeration() const;

  /// A uniformly random element from a seeded generator.
  template <class Rng>
  MumfordDivisor random_element(Rng& rng) const;

 private:
  MumfordDivisor reduce(FpPoly u, FpPoly v) const;

  Prime p_;
  FpPoly f_;
};

struct AnomalyFlags {
  /// Order of the class is prime to p.
  bool order_prime_to_p = false;
  /// p^2 does not divide #J(F_p).
  bool p_squared_free = false;
};
AnomalyFlags is_nonanomalous(const JacobianFp& jac, const MumfordDivisor& d,
                             const mpz_class& group_order);

/// Prime factorization by trial division, ascending.
std::vector<std::pair<mpz_class, int>> factor_small(mpz_class n);

template <class Rng>
MumfordDivisor JacobianFp::random_element(Rng& rng) const {
  // Sum of three random affine point classes. Not uniform, but enough to
  // exercise the group law.
  MumfordDivisor acc;
  int added = 0;
  while (added < 3) {
    const auto x = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(p_));
    std::int64_t fx = 0;
    for (auto it = f_.rbegin(); it != f_.rend(); ++it) fx = (fx * x + *it) % p_;
    for (std::int64_t y = 0; y < p_; ++y) {
      if ((y * y) % p_ != fx) continue;
      const std::int64_t yy = (rng() & 1) ? y : (p_ - y) % p_;
      acc = add(acc, point_class(FpPoint{false, x, yy}));
      ++added;
      break;
    }
  }
  return acc;
}

}  // namespace ccz
