// Copyright 2026 The ellspread Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <vector>

#include "ellspread/field.hpp"

namespace ellspread {

/// A chain of subfields F = F_0 > F_1 > ... > F_n = GF(q) inside F^(2),
/// described by the relative degrees m = m_0 > m_1 > ... > m_n = 1 over GF(q).
class TowerSpec {
 public:
  /// Throws ParameterError unless the chain starts at m, strictly
  /// decreases, ends at 1, has n >= 1 and each term divides the previous.
  TowerSpec(FieldPtr ctx, std::vector<unsigned> chain);

  [[nodiscard]] const FieldCtx& ctx() const noexcept { return *ctx_; }
  [[nodiscard]] const FieldPtr& ctx_ptr() const noexcept { return ctx_; }
  [[nodiscard]] const std::vector<unsigned>& chain() const noexcept { return chain_; }
  [[nodiscard]] unsigned n() const noexcept { return static_cast<unsigned>(chain_.size() - 1); }
  [[nodiscard]] unsigned m_at(unsigned i) const { return chain_.at(i); }

  /// Degree of F_i over GF(2).
  [[nodiscard]] unsigned field_degree(unsigned i) const { return ctx_->e() * m_at(i); }
  /// Degree of F_i^(2) over GF(2).
  [[nodiscard]] unsigned quad_degree(unsigned i) const { return 2 * field_degree(i); }
  /// q^{m_i} + 1, the order of C intersected with F_i^(2).
  [[nodiscard]] std::uint64_t circle_order(unsigned i) const {
    return (std::uint64_t{1} << field_degree(i)) + 1;
  }

  friend bool operator==(const TowerSpec& a, const TowerSpec& b) noexcept {
    return *a.ctx_ == *b.ctx_ && a.chain_ == b.chain_;
  }

 private:
  FieldPtr ctx_;
  std::vector<unsigned> chain_;
};

/// Validates a divisor chain for odd m without needing a context.
void check_chain(unsigned m, const std::vector<unsigned>& chain);

/// theta_0^(k * (q^m+1)/(q^{m_i}+1)), an element of C in F_i^(2). It equals 1
/// exactly when q^{m_i}+1 divides k. Throws ParameterError unless 1 <= i <= n.
FieldElement zeta_element(const TowerSpec& tower, unsigned i, std::uint64_t k);

}  // namespace ellspread
