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

// Arithmetic in GF(2^D), D = 2*e*m, viewed as the top of the tower
// GF(q^{2m}) > GF(q^m) > GF(q) with q = 2^e and m odd.

#include <compare>
#include <cstdint>
#include <memory>
#include <vector>

#include "ellspread/gf2.hpp"

namespace ellspread {

inline constexpr unsigned kDefaultMaxDegree = 40;
/// Hard ceiling: elements and the modulus must fit in one 64-bit word and
/// 2^D - 1 must stay cheap to factor by trial division.
inline constexpr unsigned kHardMaxDegree = 48;

/// Element of GF(2^D) in the polynomial basis; bit j is the coefficient of x^j.
struct FieldElement {
  std::uint64_t bits = 0;

  friend constexpr FieldElement operator+(FieldElement a, FieldElement b) noexcept {
    return {a.bits ^ b.bits};
  }
  constexpr FieldElement& operator+=(FieldElement o) noexcept {
    bits ^= o.bits;
    return *this;
  }
  [[nodiscard]] constexpr bool is_zero() const noexcept { return bits == 0; }
  friend constexpr auto operator<=>(FieldElement, FieldElement) = default;
};

class FieldCtx {
 public:
  /// Builds the context for q = 2^e and odd m > 1. The modulus is the
  /// lexicographically smallest primitive polynomial of degree D, comparing
  /// coefficients from the constant term upward.
  static std::shared_ptr<const FieldCtx> make(unsigned e, unsigned m,
                                              unsigned max_degree = kDefaultMaxDegree);

  /// Builds a context around a caller-supplied modulus (used when loading
  /// files). The modulus must be primitive of degree 2*e*m.
  static std::shared_ptr<const FieldCtx> with_modulus(unsigned e, unsigned m, std::uint64_t modulus,
                                                      unsigned max_degree = kDefaultMaxDegree);

  [[nodiscard]] unsigned e() const noexcept { return e_; }
  [[nodiscard]] unsigned m() const noexcept { return m_; }
  [[nodiscard]] unsigned degree() const noexcept { return degree_; }
  [[nodiscard]] std::uint64_t modulus() const noexcept { return modulus_; }
  [[nodiscard]] std::uint64_t q() const noexcept { return std::uint64_t{1} << e_; }
  /// q^m, the size of the middle field F.
  [[nodiscard]] std::uint64_t qm() const noexcept { return std::uint64_t{1} << (e_ * m_); }
  /// 2^D - 1, the order of the multiplicative group.
  [[nodiscard]] std::uint64_t group_order() const noexcept { return (std::uint64_t{1} << degree_) - 1; }
  [[nodiscard]] std::uint64_t size() const noexcept { return std::uint64_t{1} << degree_; }

  [[nodiscard]] static constexpr FieldElement zero() noexcept { return {0}; }
  [[nodiscard]] static constexpr FieldElement one() noexcept { return {1}; }
  /// Residue of the indeterminate; primitive by choice of modulus.
  [[nodiscard]] static constexpr FieldElement generator() noexcept { return {2}; }

  [[nodiscard]] bool contains(FieldElement x) const noexcept { return (x.bits >> degree_) == 0; }

  [[nodiscard]] FieldElement add(FieldElement a, FieldElement b) const noexcept { return a + b; }
  [[nodiscard]] FieldElement mul(FieldElement a, FieldElement b) const noexcept;
  [[nodiscard]] FieldElement square(FieldElement a) const noexcept { return mul(a, a); }
  [[nodiscard]] FieldElement pow(FieldElement a, std::uint64_t k) const noexcept;
  /// Throws DomainError on zero.
  [[nodiscard]] FieldElement inv(FieldElement a) const;

  /// x^(2^k).
  [[nodiscard]] FieldElement frobenius(FieldElement x, std::uint64_t k) const noexcept;
  /// x^(q^m): the involution of GF(q^{2m}) fixing F.
  [[nodiscard]] FieldElement conjugate(FieldElement x) const noexcept {
    return {conjugate_.apply(x.bits)};
  }
  /// Sum of x^(2^(to_deg*j)) for j < from_deg/to_deg. Both degrees must
  /// divide D, to_deg must divide from_deg, and x must lie in the subfield
  /// of degree from_deg.
  [[nodiscard]] FieldElement rel_trace(FieldElement x, unsigned from_deg, unsigned to_deg) const;
  /// The trace F -> GF(q), as a precomputed linear map. Only meaningful on F.
  [[nodiscard]] FieldElement trace_to_base(FieldElement x) const noexcept {
    return {trace_to_base_.apply(x.bits)};
  }
  /// True iff x^(2^deg) = x. `deg` must divide D.
  [[nodiscard]] bool in_subfield(FieldElement x, unsigned deg) const;

  /// theta_0 = g^(q^m - 1), a generator of the norm-1 group C of order q^m + 1.
  [[nodiscard]] FieldElement circle_generator() const noexcept { return circle_generator_; }

  /// Multiplicative order of a nonzero element.
  [[nodiscard]] std::uint64_t order(FieldElement a) const;

  /// Prime divisors of 2^D - 1.
  [[nodiscard]] const std::vector<std::uint64_t>& group_order_primes() const noexcept {
    return group_primes_;
  }

  friend bool operator==(const FieldCtx& a, const FieldCtx& b) noexcept {
    return a.e_ == b.e_ && a.m_ == b.m_ && a.modulus_ == b.modulus_;
  }

 private:
  FieldCtx(unsigned e, unsigned m, std::uint64_t modulus, std::vector<std::uint64_t> primes);

  unsigned e_;
  unsigned m_;
  unsigned degree_;
  std::uint64_t modulus_;
  std::vector<std::uint64_t> group_primes_;
  gf2::LinearMap conjugate_;
  gf2::LinearMap trace_to_base_;
  FieldElement circle_generator_;
};

using FieldPtr = std::shared_ptr<const FieldCtx>;

/// Validates (e, m, max_degree) and returns D = 2*e*m.
unsigned checked_degree(unsigned e, unsigned m, unsigned max_degree);

/// True iff `poly` (bit D set) is primitive over GF(2).
bool is_primitive_polynomial(std::uint64_t poly, unsigned degree,
                             const std::vector<std::uint64_t>& group_order_primes);

/// Lexicographically smallest primitive polynomial of the given degree,
/// comparing coefficients from the constant term upward.
std::uint64_t smallest_primitive_polynomial(unsigned degree);

}  // namespace ellspread
