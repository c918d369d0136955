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

#include "ellspread/linalg.hpp"

namespace ellspread {

inline constexpr unsigned kDefaultCensusMaxDegree = 24;

/// The quadratic form Q(x) = T(x * conj(x)) + B(x, c)^2 on F^(2), where T is
/// the trace F -> GF(q) and B(x, y) = T(x * conj(y) + conj(x) * y) is its
/// polarization. The standard form has c = 0.
class FormCtx {
 public:
  explicit FormCtx(FramePtr frame);

  [[nodiscard]] const CoordFrame& frame() const noexcept { return *frame_; }
  [[nodiscard]] const FramePtr& frame_ptr() const noexcept { return frame_; }
  [[nodiscard]] const FieldCtx& ctx() const noexcept { return frame_->ctx(); }
  /// Degree of the scalar field GF(q) over GF(2).
  [[nodiscard]] unsigned n_deg() const noexcept { return frame_->ctx().e(); }
  /// Accumulated twist c (zero for the standard form).
  [[nodiscard]] FieldElement twist() const noexcept { return twist_; }
  [[nodiscard]] bool is_standard() const noexcept { return twist_.is_zero(); }

  [[nodiscard]] FieldElement quad(FieldElement x) const noexcept;
  [[nodiscard]] FieldElement bilinear(FieldElement x, FieldElement y) const noexcept;

 private:
  friend FormCtx variant_form(const FormCtx& fc, FieldElement c);

  FramePtr frame_;
  FieldElement twist_{};
};

inline FieldElement quad_form(const FormCtx& fc, FieldElement x) noexcept { return fc.quad(x); }
inline FieldElement bilinear_form(const FormCtx& fc, FieldElement x, FieldElement y) noexcept {
  return fc.bilinear(x, y);
}

/// Q + B(., c)^2. Since B(., c)^2 + B(., c')^2 = B(., c + c')^2 repeated
/// twisting just adds the twists.
FormCtx variant_form(const FormCtx& fc, FieldElement c);

bool is_totally_isotropic(const FormCtx& fc, const Subspace& x);
bool is_totally_singular(const FormCtx& fc, const Subspace& x);

/// Number of nonzero singular vectors, by scanning all of F^(2).
/// Throws ResourceError when D > max_degree.
std::uint64_t singular_census(const FormCtx& fc, unsigned max_degree = kDefaultCensusMaxDegree);

/// (q^m + 1)(q^{m-1} - 1): nonzero singular vectors of an elliptic quadric.
std::uint64_t elliptic_singular_count(const FieldCtx& ctx);
/// (q^m - 1)(q^{m-1} + 1): the hyperbolic counterpart.
std::uint64_t hyperbolic_singular_count(const FieldCtx& ctx);

/// Rank over GF(q) of the Gram matrix of B on the basis 1, g, ..., g^{2m-1}.
unsigned gram_rank(const FormCtx& fc);

enum class QuadricType { elliptic, hyperbolic, degenerate, unknown };

std::string_view to_string(QuadricType t) noexcept;

struct CensusReport {
  std::uint64_t nonzero_singular = 0;
  std::uint64_t expected_elliptic = 0;
  QuadricType type = QuadricType::unknown;
};

CensusReport census_report(const FormCtx& fc, unsigned max_degree = kDefaultCensusMaxDegree);

}  // namespace ellspread
