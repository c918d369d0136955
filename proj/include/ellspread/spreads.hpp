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
#include <string>
#include <string_view>
#include <vector>

#include "ellspread/forms.hpp"
#include "ellspread/linalg.hpp"
#include "ellspread/tower.hpp"

namespace ellspread {

enum class SpreadKind { elliptic, symplectic };

std::string_view to_string(SpreadKind k) noexcept;
/// Throws ParameterError on anything but "elliptic" or "symplectic".
SpreadKind parse_spread_kind(std::string_view s);

/// A tower plus the exponents k_i selecting zeta_i = zeta_element(tower, i, k_i).
/// zeta_0 = 1 is implicit. Elliptic parameters carry k_1..k_{n-1},
/// symplectic ones k_1..k_n.
class SpreadParams {
 public:
  /// Validates eagerly: the exponent count must match the kind, each
  /// k_i must lie in 1..q^{m_i}, and each zeta_i must be a nontrivial
  /// element of C inside F_i^(2).
  SpreadParams(TowerSpec tower, std::vector<std::uint64_t> zeta_exponents, SpreadKind kind);

  [[nodiscard]] const TowerSpec& tower() const noexcept { return tower_; }
  [[nodiscard]] const std::vector<std::uint64_t>& zeta_exponents() const noexcept { return zetas_; }
  [[nodiscard]] SpreadKind kind() const noexcept { return kind_; }
  /// q^m > 8, the hypothesis under which distinct parameter orbits give
  /// inequivalent spreads. Construction is allowed either way.
  [[nodiscard]] bool theorem_conditions() const noexcept { return tower_.ctx().qm() > 8; }
  /// zeta_1, zeta_2, ... as field elements.
  [[nodiscard]] std::vector<FieldElement> zetas() const;

  friend bool operator==(const SpreadParams&, const SpreadParams&) = default;

 private:
  TowerSpec tower_;
  std::vector<std::uint64_t> zetas_;
  SpreadKind kind_;
};

enum class Verified { unverified, pass, fail };

std::string_view to_string(Verified v) noexcept;

struct Spread {
  FramePtr frame;
  SpreadKind kind = SpreadKind::elliptic;
  /// Members in canonical order, no duplicates once built by this library.
  std::vector<Subspace> members;
  /// Present for spreads built from (or restricted from) tower parameters.
  std::optional<SpreadParams> params;
  /// "orbit", "desarguesian", "restricted", "galois_image" or "loaded".
  std::string provenance;
  Verified verified = Verified::unverified;
};

/// Sorts members by canonical key. Duplicates are kept.
void canonicalize(Spread& s);

/// W_i = ker(T_{i+1} restricted to F_i), for 0 <= i < n.
Subspace kernel_space(const FramePtr& frame, const TowerSpec& tower, unsigned i);
/// The middle field F as a GF(q)-subspace.
Subspace middle_field(const FramePtr& frame);

/// gamma_0 = 1, gamma_i = gamma_{i-1} * zeta_i.
std::vector<FieldElement> gammas(const SpreadParams& params);

/// Sum of W_i gamma_i for i < n, plus GF(q) gamma_n for the symplectic kind.
/// Throws ConstructionError if the sum is not direct.
Subspace base_subspace(const FramePtr& frame, const SpreadParams& params);

/// base * theta_0^t.
Subspace orbit_member(const FramePtr& frame, const SpreadParams& params, std::uint64_t t);

/// The C-orbit of the base subspace. Throws ConstructionError unless it
/// has exactly q^m + 1 distinct members.
Spread orbit_spread(const FramePtr& frame, const SpreadParams& params);

/// The orbit of F under C, the desarguesian symplectic spread.
Spread desarguesian_spread(const FramePtr& frame);

/// The singular vectors of a totally isotropic m-space, which form an
/// (m-1)-space because Q is additive and semilinear there.
Subspace restrict_singular(const FormCtx& fc, const Subspace& x);

/// Memberwise restrict_singular of a verified symplectic spread.
Spread restrict_spread(const FormCtx& fc, const Spread& s);

/// m_i = product of the primes after the i-th in the nondecreasing
/// factorization of m, ending at 1.
std::vector<unsigned> default_chain(unsigned m);

}  // namespace ellspread
