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

namespace ccz {

/// F_{p^k} for small p^k, elements encoded as integers sum c_i p^i over the
/// basis 1, a, ..., a^(k-1) of F_p[a]/(m(a)) with m monic irreducible.
class SmallField {
 public:
  SmallField(std::int64_t p, int k);

  std::int64_t prime() const { return p_; }
  int degree() const { return k_; }
  std::int64_t size() const { return q_; }
  const std::vector<std::int64_t>& modulus() const { return m_; }

  std::int64_t add(std::int64_t a, std::int64_t b) const;
  std::int64_t mul(std::int64_t a, std::int64_t b) const;
  std::int64_t from_int(std::int64_t c) const;  // image of an integer
  bool is_square(std::int64_t a) const { return square_[static_cast<std::size_t>(a)]; }

 private:
  std::vector<std::int64_t> decode(std::int64_t a) const;
  std::int64_t encode(const std::vector<std::int64_t>& c) const;

  std::int64_t p_;
  int k_;
  std::int64_t q_;
  std::vector<std::int64_t> m_;  // monic, constant first, length k+1
  std::vector<bool> square_;
};

}  // namespace ccz
