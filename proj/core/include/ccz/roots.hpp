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
#include <vector>

#include "ccz/padic.hpp"
#include "ccz/series.hpp"

namespace ccz {

/// Where to truncate an antiderivative f so that the simple roots of the
/// truncation f_M(pt) mod p^(N-k) are approximations of roots of f(pt).
struct TruncationPolicy {
  Prime p = 0;
  int N = 0;    // p-adic precision of the coefficients
  int M = 0;    // t-adic truncation
  int m_f = 0;  // order of f' mod p at t = 0
  /// Smallest a*p^e >= N with p not dividing a and e >= 1.
  std::int64_t a = 0;
  int e = 0;
  /// Minimal coefficient valuation of f(pt); set by roots_in_pZp.
  int k = 0;
};

/// Requires m_f + 2 <= N <= p^p - p and m_f < p - 2.
TruncationPolicy truncation_parameters(int N, Prime p, int m_f);

/// m_f + 1 for m_f = order of fprime mod p; throws DomainError if
/// m_f >= p - 2.
int root_count_bound(const PadicPowerSeries& fprime);

struct PadicRoot {
  PadicNumber t;      // in pZ_p
  int precision = 0;  // absolute precision of t
  bool simple = false;
};

struct RootReport {
  std::vector<PadicRoot> roots;
  int bound = 0;          // m_f + 1
  int newton_count = 0;   // roots of valuation >= 1 counted with multiplicity
  int k = 0;
  bool all_simple_certified = false;
  /// ord_p(b_i) >= i - ord_p(i) for every known b_i, i >= 1.
  bool valuation_lemma_holds = true;
};

/// Roots in pZ_p of f truncated per the policy. The returned t values are
/// known modulo p^(N-k+1) (one digit from the factor p).
RootReport roots_in_pZp(const PadicPowerSeries& f, TruncationPolicy& policy);

/// Roots in Z_p of a polynomial with integral coefficients known modulo p^n,
/// by residue scanning, Hensel lifting, and recursion on multiple residues.
std::vector<PadicRoot> integral_roots(const std::vector<PadicNumber>& h);

/// Discriminant of a polynomial with p-adic coefficients.
PadicNumber discriminant(const std::vector<PadicNumber>& f);
/// True iff the discriminant is nonzero at the available precision.
bool simplicity_check(const std::vector<PadicNumber>& f);

/// f / t^j where t^j exactly divides f (exact-zero leading coefficients),
/// so that t = 0 is not a root; j is returned in removed.
PadicPowerSeries strip_zero_root(const PadicPowerSeries& f, int* removed = nullptr);

}  // namespace ccz
