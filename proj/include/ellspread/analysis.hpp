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
#include <optional>
#include <string_view>
#include <vector>

#include "ellspread/forms.hpp"
#include "ellspread/spreads.hpp"

namespace ellspread {

enum class VerifyMode { counting, exhaustive };

std::string_view to_string(VerifyMode m) noexcept;
VerifyMode parse_verify_mode(std::string_view s);

inline constexpr unsigned kDefaultExhaustiveMaxDegree = 24;

struct VerificationReport {
  std::uint64_t member_count = 0;
  std::uint64_t expected_members = 0;
  bool dims_ok = false;
  bool all_ts_or_ti = false;
  bool pairwise_trivial = false;
  /// Sum over members of (q^dim - 1).
  std::uint64_t covered = 0;
  /// Nonzero singular vectors (elliptic) or all nonzero vectors (symplectic).
  std::uint64_t expected = 0;
  /// Set in exhaustive mode: every target vector lies in exactly one member
  /// and no other nonzero vector lies in any.
  std::optional<bool> exhaustive_ok;
  bool pass = false;
  VerifyMode mode = VerifyMode::counting;
};

/// Checks the spread axioms. With pairwise-trivial members, equal counts
/// certify the partition; exhaustive mode additionally tallies every vector.
/// The elliptic target count comes from a census when D fits the census
/// budget and from the closed formula otherwise. Failures are reported,
/// not thrown; exhaustive mode beyond `exhaustive_max_degree` throws
/// ResourceError.
VerificationReport verify_spread(const FormCtx& fc, const Spread& s, VerifyMode mode = VerifyMode::counting,
                                 unsigned exhaustive_max_degree = kDefaultExhaustiveMaxDegree);

/// True iff multiplication by theta permutes the members in a single
/// cycle of length q^m + 1. Members must be in canonical order.
bool verify_transitive(const Spread& s, FieldElement theta);

struct EquivalenceResult {
  bool equivalent = false;
  /// Least k with zeta'_i = zeta_i^(2^k) for all i.
  std::optional<unsigned> witness;
  /// Set when q^m <= 8, where parameter equivalence is not known to be exact.
  bool advisory = false;
};

/// Parameter criterion for equivalence of elliptic spreads: equal chains and
/// one field automorphism carrying every zeta_i to zeta'_i.
EquivalenceResult params_equivalent(const SpreadParams& p, const SpreadParams& p2);

/// Nonnegative rational in lowest terms.
struct Rational {
  std::uint64_t num = 0;
  std::uint64_t den = 1;
  friend bool operator==(const Rational&, const Rational&) = default;
};

/// prod_{i=1}^{n-1} (q^{m_i} + 1) / (2 * m_1 * e), with m_1 read as m when n = 1.
Rational theorem_bound(const TowerSpec& tower);

struct AutOrder {
  std::uint64_t order = 0;
  /// Number of field automorphisms fixing every zeta_i.
  std::uint64_t stabilizer = 0;
  bool advisory = false;
};

/// (q^m + 1)(q - 1) * |stabilizer of the zetas in Aut F^(2)|.
AutOrder aut_order(const SpreadParams& params);

struct ClassInfo {
  std::vector<std::uint64_t> rep_exponents;
  std::uint64_t orbit_size = 0;
  std::uint64_t aut_order = 0;
};

struct ClassificationResult {
  std::vector<unsigned> chain;
  unsigned e = 0;
  std::uint64_t tuple_count = 0;
  std::uint64_t class_count = 0;
  std::vector<ClassInfo> classes;
  Rational bound;
  bool bound_satisfied = false;
  bool advisory = false;
};

/// Enumerates all admissible zeta tuples (k_1..k_{n-1}) and splits them into
/// orbits under simultaneous Frobenius powers. Throws ResourceError when the
/// tuple count exceeds max_tuples.
ClassificationResult classify_tower(const TowerSpec& tower, std::uint64_t max_tuples = std::uint64_t{1} << 24);

/// Memberwise Frobenius^k, re-canonicalized. Parameters (if any) follow
/// zeta_i -> zeta_i^(2^k).
Spread galois_image_spread(const Spread& s, std::uint64_t k);

/// Exponent of zeta_i^(2^k) given the exponent of zeta_i.
std::uint64_t galois_exponent(const TowerSpec& tower, unsigned i, std::uint64_t k_i, std::uint64_t k);

}  // namespace ellspread
