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

// GF(q)-linear algebra on F^(2), viewed as a 2m-dimensional space over
// GF(q) with basis 1, g, ..., g^{2m-1}.

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "ellspread/field.hpp"
#include "ellspread/gf2.hpp"

namespace ellspread {

/// GF(q) as the subfield of degree e, with elements stored compactly as
/// e-bit words over the GF(2)-basis 1, b, ..., b^{e-1} where
/// b = g^((2^D-1)/(q-1)). Products use log tables derived from the
/// ambient arithmetic.
class Scalars {
 public:
  explicit Scalars(const FieldCtx& ctx);

  using Value = std::uint8_t;

  [[nodiscard]] unsigned e() const noexcept { return e_; }
  [[nodiscard]] unsigned size() const noexcept { return 1U << e_; }
  [[nodiscard]] static Value add(Value a, Value b) noexcept { return static_cast<Value>(a ^ b); }
  [[nodiscard]] Value mul(Value a, Value b) const noexcept {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  /// Throws DomainError on zero.
  [[nodiscard]] Value inv(Value a) const;

  [[nodiscard]] FieldElement embed(Value a) const noexcept { return embed_[a]; }
  /// Inverse of embed; throws DomainError if x is not in GF(q).
  [[nodiscard]] Value compact(FieldElement x) const;
  /// The GF(2)-basis 1, b, ..., b^{e-1} of GF(q) inside the ambient field.
  [[nodiscard]] std::span<const FieldElement> basis() const noexcept { return {embed_basis_}; }

 private:
  unsigned e_;
  std::vector<FieldElement> embed_;
  std::vector<FieldElement> embed_basis_;
  std::vector<std::pair<std::uint64_t, Value>> lookup_;  // sorted by field bits
  std::vector<Value> exp_;                               // doubled to skip a modulo
  std::vector<unsigned> log_;
};

using CoordVec = std::vector<Scalars::Value>;

/// Coordinates of F^(2) over GF(q) in the power basis of g.
class CoordFrame {
 public:
  static std::shared_ptr<const CoordFrame> make(FieldPtr ctx);

  [[nodiscard]] const FieldCtx& ctx() const noexcept { return *ctx_; }
  [[nodiscard]] const FieldPtr& ctx_ptr() const noexcept { return ctx_; }
  [[nodiscard]] const Scalars& scalars() const noexcept { return scalars_; }
  /// 2m, the GF(q)-dimension of F^(2).
  [[nodiscard]] unsigned dim() const noexcept { return dim_; }

  [[nodiscard]] CoordVec coords(FieldElement x) const;
  [[nodiscard]] FieldElement uncoords(std::span<const Scalars::Value> c) const;

  friend bool operator==(const CoordFrame& a, const CoordFrame& b) noexcept { return *a.ctx_ == *b.ctx_; }

 private:
  explicit CoordFrame(FieldPtr ctx);

  FieldPtr ctx_;
  Scalars scalars_;
  unsigned dim_;
  gf2::LinearMap to_bits_;    // field element -> packed coordinates
  gf2::LinearMap from_bits_;  // packed coordinates -> field element
};

using FramePtr = std::shared_ptr<const CoordFrame>;

/// A GF(q)-subspace of F^(2) stored as its reduced row-echelon basis, so two
/// subspaces are equal iff their row lists are identical.
class Subspace {
 public:
  /// The zero subspace.
  explicit Subspace(FramePtr frame);
  /// Row-reduces `rows` (any spanning set) into canonical form.
  Subspace(FramePtr frame, std::vector<CoordVec> rows);

  [[nodiscard]] const CoordFrame& frame() const noexcept { return *frame_; }
  [[nodiscard]] const FramePtr& frame_ptr() const noexcept { return frame_; }
  [[nodiscard]] unsigned dim() const noexcept { return static_cast<unsigned>(rows_.size()); }
  [[nodiscard]] const std::vector<CoordVec>& rows() const noexcept { return rows_; }

  /// The canonical basis rows as field elements.
  [[nodiscard]] std::vector<FieldElement> basis() const;
  /// A GF(2)-basis: every canonical row times every GF(q) basis scalar.
  [[nodiscard]] std::vector<FieldElement> binary_basis() const;
  /// Sort key: the canonical basis as raw field bits.
  [[nodiscard]] std::vector<std::uint64_t> key() const;

  friend bool operator==(const Subspace& a, const Subspace& b) noexcept { return a.rows_ == b.rows_; }
  friend bool operator<(const Subspace& a, const Subspace& b) { return a.key() < b.key(); }

 private:
  FramePtr frame_;
  std::vector<CoordVec> rows_;
};

/// Reduced row-echelon form over GF(q) in place; zero rows are dropped.
/// Returns the rank.
std::size_t row_reduce(std::vector<CoordVec>& rows, const Scalars& scalars);

Subspace span(const FramePtr& frame, std::span<const FieldElement> gens);
bool member(const Subspace& x, FieldElement v);
Subspace intersect(const Subspace& x, const Subspace& y);
Subspace subspace_sum(const Subspace& x, const Subspace& y);
/// {v * theta : v in X}. Throws ParameterError when theta = 0.
Subspace scale_subspace(const Subspace& x, FieldElement theta);
/// {v^(2^k) : v in X}.
Subspace apply_galois(const Subspace& x, std::uint64_t k);

/// True iff X and Y meet only in 0. Works on binary bases, so it is much
/// cheaper than forming the intersection.
bool meets_trivially(const Subspace& x, const Subspace& y);

/// Every vector of X, zero first. Throws ResourceError when
/// q^dim exceeds 2^max_log2.
std::vector<FieldElement> enumerate(const Subspace& x, unsigned max_log2 = 24);

}  // namespace ellspread
