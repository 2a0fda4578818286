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

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <span>
#include <string>

#include "ccz/errors.hpp"

namespace ccz {

using Prime = std::int64_t;

/// Absolute precision carried by exact zeros (e.g. the constant term of a
/// formal antiderivative). Large enough never to be the minimum in practice.
inline constexpr int kExactPrecision = 1 << 28;
/// Relative precision at or above which a nonzero value is exact: its unit
/// is kept unreduced (and may be negative).
inline constexpr int kExactRelative = 1 << 26;
/// Relative precision given to the quotient of two exact values when it is
/// not itself an integer.
inline constexpr int kExactQuotientDigits = 256;

/// p^n as a big integer. Served from a small per-thread table.
const mpz_class& prime_power(Prime p, int n);

/// ord_p(n) for a nonzero integer; returns kExactPrecision for 0.
int valuation_of(Prime p, const mpz_class& n);
int valuation_of(Prime p, std::int64_t n);

/// An element of Q_p known modulo p^(valuation + relative_precision).
///
/// Nonzero values are stored as unit * p^valuation with 0 < unit < p^rel and
/// p not dividing unit. A value that is zero to its stated precision keeps
/// only its absolute precision (stored in the valuation slot). Values are
/// immutable; every operation returns a new number.
class PadicNumber {
 public:
  PadicNumber() = default;

  static PadicNumber zero(Prime p, int absolute_precision = kExactPrecision);
  static PadicNumber from_integer(Prime p, const mpz_class& n,
                                  int absolute_precision);
  static PadicNumber from_integer(Prime p, std::int64_t n,
                                  int absolute_precision);
  /// An exact integer (no truncation).
  static PadicNumber exact(Prime p, const mpz_class& n);
  bool is_exact() const { return rel_ >= kExactRelative; }
  /// Coerces an exact rational; throws DomainError only if p divides the
  /// denominator so deeply that nothing is known (never for sane inputs).
  static PadicNumber from_rational(Prime p, const mpq_class& q,
                                   int absolute_precision);
  /// unit need not be reduced or coprime to p; it is normalized here.
  static PadicNumber from_parts(Prime p, mpz_class unit, int valuation,
                                int relative_precision);

  Prime prime() const { return p_; }
  bool is_zero() const { return rel_ == 0; }
  bool is_exact_zero() const { return rel_ == 0 && val_ >= kExactPrecision; }
  /// For zero-to-precision values this is the absolute precision.
  int valuation() const { return val_; }
  int relative_precision() const { return rel_; }
  int absolute_precision() const { return val_ + rel_; }
  const mpz_class& unit() const { return unit_; }
  bool is_unit() const { return rel_ > 0 && val_ == 0; }
  bool is_integral() const { return val_ >= 0; }

  PadicNumber operator-() const;
  friend PadicNumber operator+(const PadicNumber& a, const PadicNumber& b);
  friend PadicNumber operator-(const PadicNumber& a, const PadicNumber& b);
  friend PadicNumber operator*(const PadicNumber& a, const PadicNumber& b);
  friend PadicNumber operator/(const PadicNumber& a, const PadicNumber& b);
  PadicNumber& operator+=(const PadicNumber& b) { return *this = *this + b; }
  PadicNumber& operator-=(const PadicNumber& b) { return *this = *this - b; }
  PadicNumber& operator*=(const PadicNumber& b) { return *this = *this * b; }
  PadicNumber& operator/=(const PadicNumber& b) { return *this = *this / b; }

  PadicNumber operator*(std::int64_t k) const;
  /// Division by a small exact integer (loses ord_p(k) digits).
  PadicNumber divided_by(std::int64_t k) const;
  /// Multiplication by p^k (k may be negative); exact, no precision change.
  PadicNumber shifted(int k) const;
  PadicNumber pow(std::uint64_t e) const;
  /// Lowers the absolute precision to at most `absolute_precision`.
  PadicNumber with_absolute_precision(int absolute_precision) const;
  /// Caps relative precision (used when lifting from residues).
  PadicNumber with_relative_precision(int relative_precision) const;

  /// The integer in [0, p^n) congruent to this value. Requires valuation >= 0
  /// and absolute precision >= n.
  mpz_class residue(int n) const;
  /// The residue mod p as a machine integer (valuation must be >= 0).
  std::int64_t residue_mod_p() const;
  /// Balanced lift in (-p^n/2, p^n/2] of an integral value known mod p^n.
  mpz_class balanced_lift(int n) const;

  /// a == b to absolute precision min(n, both precisions).
  bool congruent(const PadicNumber& b, int n) const;
  /// Structural equality: same prime, valuation, precision and unit.
  friend bool operator==(const PadicNumber& a, const PadicNumber& b);

  /// "a0 + a1*p + a2*p^2 + O(p^N)".
  std::string to_digits() const;

 private:
  PadicNumber(Prime p, mpz_class unit, int val, int rel)
      : p_(p), unit_(std::move(unit)), val_(val), rel_(rel) {}

  Prime p_ = 0;
  mpz_class unit_ = 0;
  int val_ = kExactPrecision;
  int rel_ = 0;
};

/// Teichmüller representative of the residue class of a unit, computed by
/// iterating x -> x^p until it stabilizes modulo p^target_precision.
PadicNumber teichmuller(const PadicNumber& a, int target_precision);

/// A square root of a. Without a hint the root whose unit residue lies in
/// {1, ..., (p-1)/2} is returned; with a hint, the root congruent to the
/// hint's unit part modulo p.
PadicNumber sqrt(const PadicNumber& a,
                 const std::optional<PadicNumber>& branch = std::nullopt);
bool is_square(const PadicNumber& a);

/// Newton lift of a simple root x0 (mod p) of an integer-coefficient
/// polynomial (constant term first) to precision p^target_precision.
PadicNumber hensel_lift_root(std::span<const mpq_class> coefficients,
                             const PadicNumber& x0, int target_precision);

/// Serialized form {prime, valuation, unit, precision} as used in reports.
struct PadicRecord {
  Prime prime = 0;
  int valuation = 0;
  std::string unit;  // decimal
  int absolute_precision = 0;
  friend bool operator==(const PadicRecord&, const PadicRecord&) = default;
};
PadicRecord to_record(const PadicNumber& x);
PadicNumber from_record(const PadicRecord& r);

/// Exact inverse of n modulo p^k (n coprime to p).
mpz_class inverse_mod_prime_power(const mpz_class& n, Prime p, int k);

}  // namespace ccz
