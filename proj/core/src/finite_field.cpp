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

#include "ccz/finite_field.hpp"

#include <stdexcept>

namespace ccz {

namespace {

// A monic polynomial of degree <= 3 is irreducible iff it has no root.
bool has_root(const std::vector<std::int64_t>& m, std::int64_t p) {
  for (std::int64_t x = 0; x < p; ++x) {
    std::int64_t v = 0;
    for (auto it = m.rbegin(); it != m.rend(); ++it) v = (v * x + *it) % p;
    if (v == 0) return true;
  }
  return false;
}

}  // namespace

SmallField::SmallField(std::int64_t p, int k) : p_(p), k_(k), q_(1) {
  if (k < 1 || k > 3) throw std::invalid_argument("SmallField: degree must be 1..3");
  for (int i = 0; i < k; ++i) q_ *= p;
  if (q_ > 50'000'000) throw std::invalid_argument("SmallField: field too large");
  m_.assign(static_cast<std::size_t>(k + 1), 0);
  m_[static_cast<std::size_t>(k)] = 1;
  if (k == 1) {
    m_[0] = 0;
  } else {
    // Lexicographically first monic irreducible.
    bool found = false;
    const std::int64_t tail = q_;
    for (std::int64_t code = 0; code < tail && !found; ++code) {
      std::int64_t c = code;
      for (int i = 0; i < k; ++i) {
        m_[static_cast<std::size_t>(i)] = c % p;
        c /= p;
      }
      if (m_[0] != 0 && !has_root(m_, p)) found = true;
    }
    if (!found) throw std::logic_error("SmallField: no irreducible found");
  }
  square_.assign(static_cast<std::size_t>(q_), false);
  for (std::int64_t a = 0; a < q_; ++a) square_[static_cast<std::size_t>(mul(a, a))] = true;
}

std::vector<std::int64_t> SmallField::decode(std::int64_t a) const {
  std::vector<std::int64_t> c(static_cast<std::size_t>(k_));
  for (int i = 0; i < k_; ++i) {
    c[static_cast<std::size_t>(i)] = a % p_;
    a /= p_;
  }
  return c;
}

std::int64_t SmallField::encode(const std::vector<std::int64_t>& c) const {
  std::int64_t a = 0;
  for (int i = k_ - 1; i >= 0; --i) a = a * p_ + c[static_cast<std::size_t>(i)];
  return a;
}

std::int64_t SmallField::add(std::int64_t a, std::int64_t b) const {
  auto x = decode(a);
  auto y = decode(b);
  for (int i = 0; i < k_; ++i) {
    x[static_cast<std::size_t>(i)] = (x[static_cast<std::size_t>(i)] + y[static_cast<std::size_t>(i)]) % p_;
  }
  return encode(x);
}

std::int64_t SmallField::mul(std::int64_t a, std::int64_t b) const {
  const auto x = decode(a);
  const auto y = decode(b);
  std::vector<std::int64_t> z(static_cast<std::size_t>(2 * k_ - 1), 0);
  for (int i = 0; i < k_; ++i) {
    for (int j = 0; j < k_; ++j) {
      auto& t = z[static_cast<std::size_t>(i + j)];
      t = (t + x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(j)]) % p_;
    }
  }
  for (int d = 2 * k_ - 2; d >= k_; --d) {
    const std::int64_t c = z[static_cast<std::size_t>(d)];
    if (c == 0) continue;
    for (int i = 0; i <= k_; ++i) {
      auto& t = z[static_cast<std::size_t>(d - k_ + i)];
      t = ((t - c * m_[static_cast<std::size_t>(i)]) % p_ + p_) % p_;
    }
  }
  z.resize(static_cast<std::size_t>(k_));
  return encode(z);
}

std::int64_t SmallField::from_int(std::int64_t c) const {
  return ((c % p_) + p_) % p_;
}

}  // namespace ccz
