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

// Exhaustive-search oracle for roots of integrals in pZ_p.

#pragma once

#include <random>
#include <set>
#include <string>
#include <vector>

#include "ccz/polynomial.hpp"
#include "ccz/roots.hpp"

namespace ccz::testing {

struct RootOracleTally {
  int series = 0;      // compared against the oracle
  int skipped = 0;     // oracle inconclusive (a root with ord f' >= 2)
  int mismatches = 0;
  int over_bound = 0;  // more roots than m_f + 1
  int lemma_failures = 0;
  std::vector<std::string> notes;
  bool ok() const { return series > 0 && mismatches == 0 && over_bound == 0 && lemma_failures == 0; }
};

/// f = c + integral of g, with g an integral polynomial having a unit
/// coefficient and c in pZ. Such f satisfy the valuation lemma by design.
inline QPoly random_integral_series(std::mt19937_64& rng, Prime p) {
  std::uniform_int_distribution<long> coef(-3 * p * p, 3 * p * p);
  std::uniform_int_distribution<int> deg(1, 6);
  std::uniform_int_distribution<int> unit_at(0, 2);
  const int d = deg(rng);
  QPoly g(static_cast<std::size_t>(d + 1));
  for (auto& c : g) c = coef(rng) * (rng() % 2 ? 1 : p);
  const auto u = static_cast<std::size_t>(std::min(unit_at(rng), d));
  if (mod_p(g[u], p) == 0) g[u] += 1;
  QPoly f(static_cast<std::size_t>(d + 2));
  f[0] = coef(rng) * p;
  for (int i = 0; i <= d; ++i) f[static_cast<std::size_t>(i + 1)] = g[static_cast<std::size_t>(i)] / (i + 1);
  return f;
}

inline RootOracleTally root_oracle_suite(Prime p, int count, std::uint64_t seed) {
  RootOracleTally tally;
  std::mt19937_64 rng(seed);
  const int N = 10;
  const mpz_class p3 = prime_power(p, 3);
  const mpz_class p4 = prime_power(p, 4);
  // Inconclusive draws are replaced, up to a cap.
  for (int draws = 0; tally.series < count && draws < 10 * count; ++draws) {
    const QPoly f = random_integral_series(rng, p);
    const QPoly df = qpoly::derivative(f);
    // Oracle: all t in pZ/p^4 with f(t) = 0 mod p^4.
    std::set<mpz_class> oracle;
    bool conclusive = true;
    for (mpz_class u = 0; u < p3; ++u) {
      const mpq_class t(u * p);
      const mpq_class v = qpoly::eval(f, t);
      if (v != 0 && rational_valuation(v, p) < 4) continue;
      const mpq_class dv = qpoly::eval(df, t);
      if (dv == 0 || rational_valuation(dv, p) >= 2) {
        conclusive = false;
        break;
      }
      oracle.insert(mpz_class(u * p) % p3);
    }
    if (!conclusive) {
      ++tally.skipped;
      continue;
    }
    const PadicPowerSeries series(p, qpoly::to_padic(f, p, N), static_cast<int>(f.size()));
    const int m_f = series.derivative().order_mod_p();
    TruncationPolicy pol = truncation_parameters(N, p, m_f);
    const RootReport rep = roots_in_pZp(series, pol);
    ++tally.series;
    if (!rep.valuation_lemma_holds) ++tally.lemma_failures;
    if (static_cast<int>(rep.roots.size()) > m_f + 1) ++tally.over_bound;
    std::set<mpz_class> got;
    bool short_root = false;
    for (const auto& r : rep.roots) {
      if (r.precision < 3) short_root = true;
      else got.insert(r.t.residue(3));
    }
    if (short_root || got != oracle) {
      ++tally.mismatches;
      if (tally.notes.size() < 5) {
        tally.notes.push_back("p=" + std::to_string(p) + " f=" + qpoly::to_string(f, "t") + " oracle " +
                              std::to_string(oracle.size()) + " roots, solver " + std::to_string(rep.roots.size()));
      }
    }
  }
  return tally;
}

}  // namespace ccz::testing
