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

#include "ellspread/linalg.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "ellspread/errors.hpp"

namespace ellspread {

Scalars::Scalars(const FieldCtx& ctx) : e_(ctx.e()) {
  const unsigned q = 1U << e_;
  const FieldElement beta = ctx.pow(FieldCtx::generator(), ctx.group_order() / (q - 1));
  FieldElement power = FieldCtx::one();
  for (unsigned a = 0; a < e_; ++a) {
    embed_basis_.push_back(power);
    power = ctx.mul(power, beta);
  }
  embed_.resize(q);
  lookup_.reserve(q);
  for (unsigned c = 0; c < q; ++c) {
    FieldElement x{};
    for (unsigned a = 0; a < e_; ++a) {
      if ((c >> a) & 1U) x += embed_basis_[a];
    }
    embed_[c] = x;
    lookup_.emplace_back(x.bits, static_cast<Value>(c));
  }
  std::sort(lookup_.begin(), lookup_.end());

  exp_.resize(2 * (q - 1));
  log_.assign(q, 0);
  FieldElement y = FieldCtx::one();
  for (unsigned i = 0; i < q - 1; ++i) {
    const Value v = compact(y);
    exp_[i] = v;
    exp_[i + q - 1] = v;
    log_[v] = i;
    y = ctx.mul(y, beta);
  }
}

Scalars::Value Scalars::inv(Value a) const {
  if (a == 0) throw DomainError("inverse of zero scalar");
  const unsigned order = size() - 1;
  return exp_[(order - log_[a]) % order];
}

Scalars::Value Scalars::compact(FieldElement x) const {
  const auto it = std::lower_bound(lookup_.begin(), lookup_.end(), std::pair<std::uint64_t, Value>{x.bits, 0});
  if (it == lookup_.end() || it->first != x.bits) throw DomainError("element is not in GF(q)");
  return it->second;
}

std::shared_ptr<const CoordFrame> CoordFrame::make(FieldPtr ctx) {
  if (!ctx) throw ParameterError("coordinate frame requires a field context");
  return std::shared_ptr<const CoordFrame>(new CoordFrame(std::move(ctx)));
}

CoordFrame::CoordFrame(FieldPtr ctx) : ctx_(std::move(ctx)), scalars_(*ctx_), dim_(2 * ctx_->m()) {
  const unsigned e = ctx_->e();
  std::vector<std::uint64_t> columns(ctx_->degree());
  FieldElement g_power = FieldCtx::one();
  for (unsigned j = 0; j < dim_; ++j) {
    for (unsigned a = 0; a < e; ++a) {
      columns[j * e + a] = ctx_->mul(scalars_.basis()[a], g_power).bits;
    }
    g_power = ctx_->mul(g_power, FieldCtx::generator());
  }
  to_bits_ = gf2::invert(columns);
  if (to_bits_.columns().empty()) throw ConstructionError("powers of g are not independent over GF(q)");
  from_bits_ = gf2::LinearMap(std::move(columns));
}

CoordVec CoordFrame::coords(FieldElement x) const {
  const unsigned e = scalars_.e();
  const std::uint64_t mask = (std::uint64_t{1} << e) - 1;
  const std::uint64_t packed = to_bits_.apply(x.bits);
  CoordVec c(dim_);
  for (unsigned j = 0; j < dim_; ++j) c[j] = static_cast<Scalars::Value>((packed >> (j * e)) & mask);
  return c;
}

FieldElement CoordFrame::uncoords(std::span<const Scalars::Value> c) const {
  const unsigned e = scalars_.e();
  std::uint64_t packed = 0;
  for (unsigned j = 0; j < dim_ && j < c.size(); ++j) packed |= std::uint64_t{c[j]} << (j * e);
  return {from_bits_.apply(packed)};
}

std::size_t row_reduce(std::vector<CoordVec>& rows, const Scalars& scalars) {
  if (rows.empty()) return 0;
  const std::size_t width = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < width && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    auto& prow = rows[rank];
    const auto s = scalars.inv(prow[col]);
    for (auto& v : prow) v = scalars.mul(v, s);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      const auto f = rows[r][col];
      for (std::size_t c = col; c < width; ++c) rows[r][c] = Scalars::add(rows[r][c], scalars.mul(f, prow[c]));
    }
    ++rank;
  }
  rows.resize(rank);
  return rank;
}

Subspace::Subspace(FramePtr frame) : frame_(std::move(frame)) {
  if (!frame_) throw ParameterError("subspace requires a coordinate frame");
}

Subspace::Subspace(FramePtr frame, std::vector<CoordVec> rows) : frame_(std::move(frame)), rows_(std::move(rows)) {
  if (!frame_) throw ParameterError("subspace requires a coordinate frame");
  for (const auto& r : rows_) {
    if (r.size() != frame_->dim()) throw ParameterError("coordinate vector has the wrong length");
  }
  row_reduce(rows_, frame_->scalars());
}

std::vector<FieldElement> Subspace::basis() const {
  std::vector<FieldElement> out;
  out.reserve(rows_.size());
  for (const auto& r : rows_) out.push_back(frame_->uncoords(r));
  return out;
}

std::vector<FieldElement> Subspace::binary_basis() const {
  const auto& ctx = frame_->ctx();
  const auto scal = frame_->scalars().basis();
  std::vector<FieldElement> out;
  out.reserve(rows_.size() * scal.size());
  for (const auto& b : basis()) {
    for (const auto& s : scal) out.push_back(ctx.mul(s, b));
  }
  return out;
}

std::vector<std::uint64_t> Subspace::key() const {
  std::vector<std::uint64_t> out;
  out.reserve(rows_.size());
  for (const auto& r : rows_) out.push_back(frame_->uncoords(r).bits);
  return out;
}

namespace {

void require_same_frame(const Subspace& x, const Subspace& y) {
  if (x.frame_ptr() != y.frame_ptr() && !(x.frame() == y.frame())) {
    throw ParameterError("subspaces live in different coordinate frames");
  }
}

std::size_t pivot_of(const CoordVec& row) {
  return static_cast<std::size_t>(std::find_if(row.begin(), row.end(), [](auto v) { return v != 0; }) - row.begin());
}

}  // namespace

Subspace span(const FramePtr& frame, std::span<const FieldElement> gens) {
  std::vector<CoordVec> rows;
  rows.reserve(gens.size());
  for (const auto& g : gens) rows.push_back(frame->coords(g));
  return Subspace(frame, std::move(rows));
}

bool member(const Subspace& x, FieldElement v) {
  const auto& scal = x.frame().scalars();
  auto c = x.frame().coords(v);
  for (const auto& row : x.rows()) {
    const auto p = pivot_of(row);
    const auto f = c[p];
    if (f == 0) continue;
    for (std::size_t j = p; j < c.size(); ++j) c[j] = Scalars::add(c[j], scal.mul(f, row[j]));
  }
  return std::all_of(c.begin(), c.end(), [](auto s) { return s == 0; });
}

Subspace intersect(const Subspace& x, const Subspace& y) {
  require_same_frame(x, y);
  // Zassenhaus: reduce [x | x] over [y | 0]; rows with a zero left half
  // carry the intersection on the right.
  const unsigned w = x.frame().dim();
  std::vector<CoordVec> rows;
  for (const auto& r : x.rows()) {
    CoordVec v(2 * w);
    std::copy(r.begin(), r.end(), v.begin());
    std::copy(r.begin(), r.end(), v.begin() + w);
    rows.push_back(std::move(v));
  }
  for (const auto& r : y.rows()) {
    CoordVec v(2 * w, 0);
    std::copy(r.begin(), r.end(), v.begin());
    rows.push_back(std::move(v));
  }
  row_reduce(rows, x.frame().scalars());
  std::vector<CoordVec> meet;
  for (const auto& r : rows) {
    if (std::all_of(r.begin(), r.begin() + w, [](auto s) { return s == 0; })) {
      meet.emplace_back(r.begin() + w, r.end());
    }
  }
  return Subspace(x.frame_ptr(), std::move(meet));
}

Subspace subspace_sum(const Subspace& x, const Subspace& y) {
  require_same_frame(x, y);
  std::vector<CoordVec> rows = x.rows();
  rows.insert(rows.end(), y.rows().begin(), y.rows().end());
  return Subspace(x.frame_ptr(), std::move(rows));
}

Subspace scale_subspace(const Subspace& x, FieldElement theta) {
  if (theta.is_zero()) throw ParameterError("scale_subspace: scalar must be nonzero");
  const auto& ctx = x.frame().ctx();
  auto gens = x.basis();
  for (auto& g : gens) g = ctx.mul(g, theta);
  return span(x.frame_ptr(), gens);
}

Subspace apply_galois(const Subspace& x, std::uint64_t k) {
  const auto& ctx = x.frame().ctx();
  auto gens = x.basis();
  for (auto& g : gens) g = ctx.frobenius(g, k);
  return span(x.frame_ptr(), gens);
}

bool meets_trivially(const Subspace& x, const Subspace& y) {
  require_same_frame(x, y);
  gf2::Echelon ech;
  for (const auto& v : x.binary_basis()) ech.insert(v.bits);
  for (const auto& v : y.binary_basis()) {
    if (!ech.insert(v.bits)) return false;
  }
  return true;
}

std::vector<FieldElement> enumerate(const Subspace& x, unsigned max_log2) {
  const auto basis = x.binary_basis();
  if (basis.size() > max_log2) {
    throw ResourceError("subspace has 2^" + std::to_string(basis.size()) + " vectors, over the enumeration budget 2^" +
                        std::to_string(max_log2));
  }
  const std::uint64_t count = std::uint64_t{1} << basis.size();
  std::vector<FieldElement> out;
  out.reserve(count);
  FieldElement v{};
  out.push_back(v);
  for (std::uint64_t i = 1; i < count; ++i) {
    // Gray code: step i flips the basis vector at the lowest set bit of i.
    v += basis[static_cast<unsigned>(std::countr_zero(i))];
    out.push_back(v);
  }
  return out;
}

}  // namespace ellspread
