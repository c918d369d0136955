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

#include "ellspread/forms.hpp"

#include <string>

#include "ellspread/errors.hpp"

namespace ellspread {

FormCtx::FormCtx(FramePtr frame) : frame_(std::move(frame)) {
  if (!frame_) throw ParameterError("form requires a coordinate frame");
}

FieldElement FormCtx::bilinear(FieldElement x, FieldElement y) const noexcept {
  const auto& ctx = frame_->ctx();
  return ctx.trace_to_base(ctx.mul(x, ctx.conjugate(y)) + ctx.mul(ctx.conjugate(x), y));
}

FieldElement FormCtx::quad(FieldElement x) const noexcept {
  const auto& ctx = frame_->ctx();
  FieldElement v = ctx.trace_to_base(ctx.mul(x, ctx.conjugate(x)));
  if (!twist_.is_zero()) v += ctx.square(bilinear(x, twist_));
  return v;
}

FormCtx variant_form(const FormCtx& fc, FieldElement c) {
  FormCtx out = fc;
  out.twist_ += c;
  return out;
}

bool is_totally_isotropic(const FormCtx& fc, const Subspace& x) {
  const auto basis = x.basis();
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      if (!fc.bilinear(basis[i], basis[j]).is_zero()) return false;
    }
  }
  return true;
}

bool is_totally_singular(const FormCtx& fc, const Subspace& x) {
  if (!is_totally_isotropic(fc, x)) return false;
  for (const auto& b : x.basis()) {
    if (!fc.quad(b).is_zero()) return false;
  }
  return true;
}

std::uint64_t singular_census(const FormCtx& fc, unsigned max_degree) {
  const auto& ctx = fc.ctx();
  if (ctx.degree() > max_degree) {
    throw ResourceError("singular census over 2^" + std::to_string(ctx.degree()) +
                        " vectors exceeds the scan budget 2^" + std::to_string(max_degree));
  }
  std::uint64_t count = 0;
  for (std::uint64_t v = 1; v < ctx.size(); ++v) {
    if (fc.quad(FieldElement{v}).is_zero()) ++count;
  }
  return count;
}

std::uint64_t elliptic_singular_count(const FieldCtx& ctx) {
  const std::uint64_t qm = ctx.qm();
  return (qm + 1) * (qm / ctx.q() - 1);
}

std::uint64_t hyperbolic_singular_count(const FieldCtx& ctx) {
  const std::uint64_t qm = ctx.qm();
  return (qm - 1) * (qm / ctx.q() + 1);
}

unsigned gram_rank(const FormCtx& fc) {
  const auto& frame = fc.frame();
  const auto& ctx = fc.ctx();
  std::vector<FieldElement> basis;
  FieldElement p = FieldCtx::one();
  for (unsigned j = 0; j < frame.dim(); ++j) {
    basis.push_back(p);
    p = ctx.mul(p, FieldCtx::generator());
  }
  std::vector<CoordVec> gram(frame.dim(), CoordVec(frame.dim()));
  for (unsigned i = 0; i < frame.dim(); ++i) {
    for (unsigned j = 0; j < frame.dim(); ++j) {
      gram[i][j] = frame.scalars().compact(fc.bilinear(basis[i], basis[j]));
    }
  }
  return static_cast<unsigned>(row_reduce(gram, frame.scalars()));
}

std::string_view to_string(QuadricType t) noexcept {
  switch (t) {
    case QuadricType::elliptic:
      return "elliptic";
    case QuadricType::hyperbolic:
      return "hyperbolic";
    case QuadricType::degenerate:
      return "degenerate";
    case QuadricType::unknown:
      break;
  }
  return "unknown";
}

CensusReport census_report(const FormCtx& fc, unsigned max_degree) {
  CensusReport r;
  r.nonzero_singular = singular_census(fc, max_degree);
  r.expected_elliptic = elliptic_singular_count(fc.ctx());
  if (r.nonzero_singular == r.expected_elliptic) {
    r.type = QuadricType::elliptic;
  } else if (r.nonzero_singular == hyperbolic_singular_count(fc.ctx())) {
    r.type = QuadricType::hyperbolic;
  } else if (gram_rank(fc) < fc.frame().dim()) {
    r.type = QuadricType::degenerate;
  } else {
    r.type = QuadricType::unknown;
  }
  return r;
}

}  // namespace ellspread
