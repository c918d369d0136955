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

#include "ellspread/field.hpp"

#include <string>

#include "ellspread/errors.hpp"
#include "ellspread/numtheory.hpp"

namespace ellspread {

namespace {

// Product modulo a degree-`degree` polynomial; both inputs already reduced.
std::uint64_t mulmod_poly(std::uint64_t a, std::uint64_t b, std::uint64_t poly, unsigned degree) noexcept {
  const std::uint64_t top = std::uint64_t{1} << (degree - 1);
  std::uint64_t r = 0;
  while (b != 0) {
    if (b & 1U) r ^= a;
    b >>= 1;
    a = (a & top) ? ((a << 1) ^ poly) : (a << 1);
  }
  return r;
}

std::uint64_t powmod_poly(std::uint64_t a, std::uint64_t k, std::uint64_t poly, unsigned degree) noexcept {
  std::uint64_t r = 1;
  while (k != 0) {
    if (k & 1U) r = mulmod_poly(r, a, poly, degree);
    a = mulmod_poly(a, a, poly, degree);
    k >>= 1;
  }
  return r;
}

}  // namespace

unsigned checked_degree(unsigned e, unsigned m, unsigned max_degree) {
  if (e < 1) throw ParameterError("e must be at least 1");
  if (m <= 1 || m % 2 == 0) throw ParameterError("m must be odd and greater than 1, got " + std::to_string(m));
  const unsigned long long degree = 2ULL * e * m;
  const unsigned cap = max_degree < kHardMaxDegree ? max_degree : kHardMaxDegree;
  if (degree > cap) {
    throw ResourceError("field degree D = " + std::to_string(degree) + " exceeds the maximum " +
                        std::to_string(cap));
  }
  return static_cast<unsigned>(degree);
}

bool is_primitive_polynomial(std::uint64_t poly, unsigned degree,
                             const std::vector<std::uint64_t>& group_order_primes) {
  if (degree == 0 || (poly >> degree) != 1 || (poly & 1U) == 0) return false;
  const std::uint64_t order = (std::uint64_t{1} << degree) - 1;
  const std::uint64_t x = degree == 1 ? (2 ^ poly) : 2;
  // x has order exactly 2^D - 1 only if the quotient ring is a field, since
  // otherwise its unit group is strictly smaller.
  if (powmod_poly(x, order, poly, degree) != 1) return false;
  for (auto p : group_order_primes) {
    if (powmod_poly(x, order / p, poly, degree) == 1) return false;
  }
  return true;
}

std::uint64_t smallest_primitive_polynomial(unsigned degree) {
  if (degree < 2 || degree > kHardMaxDegree) throw ParameterError("unsupported polynomial degree");
  const auto primes = prime_factors((std::uint64_t{1} << degree) - 1);
  const unsigned middle = degree - 1;  // coefficients c_1 .. c_{D-1}
  for (std::uint64_t t = 0; t < (std::uint64_t{1} << middle); ++t) {
    // c_1 is the most significant bit of t, so increasing t walks the
    // candidates in lexicographic order from the constant term upward.
    std::uint64_t poly = (std::uint64_t{1} << degree) | 1U;
    for (unsigned j = 1; j < degree; ++j) {
      if ((t >> (middle - j)) & 1U) poly |= std::uint64_t{1} << j;
    }
    if (is_primitive_polynomial(poly, degree, primes)) return poly;
  }
  throw ConstructionError("no primitive polynomial found");
}

std::shared_ptr<const FieldCtx> FieldCtx::make(unsigned e, unsigned m, unsigned max_degree) {
  const unsigned degree = checked_degree(e, m, max_degree);
  const auto poly = smallest_primitive_polynomial(degree);
  return std::shared_ptr<const FieldCtx>(
      new FieldCtx(e, m, poly, prime_factors((std::uint64_t{1} << degree) - 1)));
}

std::shared_ptr<const FieldCtx> FieldCtx::with_modulus(unsigned e, unsigned m, std::uint64_t modulus,
                                                       unsigned max_degree) {
  const unsigned degree = checked_degree(e, m, max_degree);
  auto primes = prime_factors((std::uint64_t{1} << degree) - 1);
  if (!is_primitive_polynomial(modulus, degree, primes)) {
    throw ParameterError("modulus is not a primitive polynomial of degree " + std::to_string(degree));
  }
  return std::shared_ptr<const FieldCtx>(new FieldCtx(e, m, modulus, std::move(primes)));
}

FieldCtx::FieldCtx(unsigned e, unsigned m, std::uint64_t modulus, std::vector<std::uint64_t> primes)
    : e_(e), m_(m), degree_(2 * e * m), modulus_(modulus), group_primes_(std::move(primes)) {
  std::vector<std::uint64_t> conj(degree_);
  std::vector<std::uint64_t> trace(degree_);
  for (unsigned b = 0; b < degree_; ++b) {
    const FieldElement unit{std::uint64_t{1} << b};
    conj[b] = frobenius(unit, std::uint64_t{e_} * m_).bits;
    FieldElement acc = unit;
    FieldElement y = unit;
    for (unsigned j = 1; j < m_; ++j) {
      y = frobenius(y, e_);
      acc += y;
    }
    trace[b] = acc.bits;
  }
  conjugate_ = gf2::LinearMap(std::move(conj));
  trace_to_base_ = gf2::LinearMap(std::move(trace));
  circle_generator_ = pow(generator(), qm() - 1);
}

FieldElement FieldCtx::mul(FieldElement a, FieldElement b) const noexcept {
  return {mulmod_poly(a.bits, b.bits, modulus_, degree_)};
}

FieldElement FieldCtx::pow(FieldElement a, std::uint64_t k) const noexcept {
  return {powmod_poly(a.bits, k, modulus_, degree_)};
}

FieldElement FieldCtx::inv(FieldElement a) const {
  if (a.is_zero()) throw DomainError("inverse of zero");
  return pow(a, group_order() - 1);
}

FieldElement FieldCtx::frobenius(FieldElement x, std::uint64_t k) const noexcept {
  k %= degree_;
  for (std::uint64_t i = 0; i < k; ++i) x = square(x);
  return x;
}

FieldElement FieldCtx::rel_trace(FieldElement x, unsigned from_deg, unsigned to_deg) const {
  if (from_deg == 0 || to_deg == 0 || degree_ % from_deg != 0 || from_deg % to_deg != 0) {
    throw ParameterError("rel_trace: degrees " + std::to_string(from_deg) + " -> " + std::to_string(to_deg) +
                         " do not form a subfield pair of GF(2^" + std::to_string(degree_) + ")");
  }
  if (frobenius(x, from_deg) != x) throw DomainError("rel_trace: argument outside the source subfield");
  const unsigned r = from_deg / to_deg;
  FieldElement acc = x;
  FieldElement y = x;
  for (unsigned j = 1; j < r; ++j) {
    y = frobenius(y, to_deg);
    acc += y;
  }
  return acc;
}

bool FieldCtx::in_subfield(FieldElement x, unsigned deg) const {
  if (deg == 0 || degree_ % deg != 0) {
    throw ParameterError("in_subfield: " + std::to_string(deg) + " does not divide " + std::to_string(degree_));
  }
  return frobenius(x, deg) == x;
}

std::uint64_t FieldCtx::order(FieldElement a) const {
  if (a.is_zero()) throw DomainError("order of zero");
  std::uint64_t n = group_order();
  for (auto p : group_primes_) {
    while (n % p == 0 && pow(a, n / p) == one()) n /= p;
  }
  return n;
}

}  // namespace ellspread
