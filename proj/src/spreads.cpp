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

#include "ellspread/spreads.hpp"

#include <algorithm>
#include <string>

#include "ellspread/errors.hpp"
#include "ellspread/numtheory.hpp"

namespace ellspread {

std::string_view to_string(SpreadKind k) noexcept {
  return k == SpreadKind::elliptic ? "elliptic" : "symplectic";
}

SpreadKind parse_spread_kind(std::string_view s) {
  if (s == "elliptic") return SpreadKind::elliptic;
  if (s == "symplectic") return SpreadKind::symplectic;
  throw ParameterError("unknown spread kind '" + std::string(s) + "'");
}

std::string_view to_string(Verified v) noexcept {
  switch (v) {
    case Verified::pass:
      return "pass";
    case Verified::fail:
      return "fail";
    case Verified::unverified:
      break;
  }
  return "unverified";
}

SpreadParams::SpreadParams(TowerSpec tower, std::vector<std::uint64_t> zeta_exponents, SpreadKind kind)
    : tower_(std::move(tower)), zetas_(std::move(zeta_exponents)), kind_(kind) {
  const unsigned n = tower_.n();
  const std::size_t want = kind_ == SpreadKind::elliptic ? n - 1 : n;
  if (zetas_.size() != want) {
    throw ParameterError(std::string(to_string(kind_)) + " parameters over a chain with n = " + std::to_string(n) +
                         " need " + std::to_string(want) + " zeta exponents, got " + std::to_string(zetas_.size()));
  }
  const auto& ctx = tower_.ctx();
  for (unsigned i = 1; i <= zetas_.size(); ++i) {
    const auto k = zetas_[i - 1];
    const auto limit = tower_.circle_order(i) - 1;
    if (k < 1 || k > limit) {
      throw ParameterError("zeta exponent k_" + std::to_string(i) + " = " + std::to_string(k) + " outside 1.." +
                           std::to_string(limit));
    }
    const auto z = zeta_element(tower_, i, k);
    if (z == FieldCtx::one() || ctx.mul(z, ctx.conjugate(z)) != FieldCtx::one() ||
        !ctx.in_subfield(z, tower_.quad_degree(i))) {
      throw ParameterError("zeta_" + std::to_string(i) + " is not a nontrivial norm-1 element of F_" +
                           std::to_string(i) + "^(2)");
    }
  }
}

std::vector<FieldElement> SpreadParams::zetas() const {
  std::vector<FieldElement> out;
  for (unsigned i = 1; i <= zetas_.size(); ++i) out.push_back(zeta_element(tower_, i, zetas_[i - 1]));
  return out;
}

void canonicalize(Spread& s) {
  std::vector<std::pair<std::vector<std::uint64_t>, std::size_t>> keyed;
  keyed.reserve(s.members.size());
  for (std::size_t i = 0; i < s.members.size(); ++i) keyed.emplace_back(s.members[i].key(), i);
  std::sort(keyed.begin(), keyed.end());
  std::vector<Subspace> sorted;
  sorted.reserve(keyed.size());
  for (const auto& [key, i] : keyed) sorted.push_back(std::move(s.members[i]));
  s.members = std::move(sorted);
}

namespace {

void require_frame(const FramePtr& frame, const FieldCtx& ctx) {
  if (!frame) throw ParameterError("missing coordinate frame");
  if (!(frame->ctx() == ctx)) throw ParameterError("coordinate frame and tower use different fields");
}

// GF(2)-basis of the subfield of the given degree.
std::vector<FieldElement> subfield_basis(const FieldCtx& ctx, unsigned deg) {
  std::vector<std::uint64_t> images(ctx.degree());
  for (unsigned b = 0; b < ctx.degree(); ++b) {
    const FieldElement u{std::uint64_t{1} << b};
    images[b] = (ctx.frobenius(u, deg) + u).bits;
  }
  std::vector<FieldElement> out;
  for (auto mask : gf2::kernel(images)) out.push_back({mask});
  return out;
}

std::size_t distinct_count(const std::vector<Subspace>& sorted) {
  if (sorted.empty()) return 0;
  std::size_t n = 1;
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (!(sorted[i] == sorted[i - 1])) ++n;
  }
  return n;
}

Spread orbit_of(const FramePtr& frame, const Subspace& base, SpreadKind kind) {
  const auto& ctx = frame->ctx();
  const auto theta = ctx.circle_generator();
  Spread s;
  s.frame = frame;
  s.kind = kind;
  s.members.reserve(ctx.qm() + 1);
  Subspace current = base;
  for (std::uint64_t t = 0; t <= ctx.qm(); ++t) {
    s.members.push_back(current);
    current = scale_subspace(current, theta);
  }
  canonicalize(s);
  const auto distinct = distinct_count(s.members);
  if (distinct != ctx.qm() + 1) {
    throw ConstructionError("C-orbit of the base subspace has " + std::to_string(distinct) + " members, expected " +
                            std::to_string(ctx.qm() + 1));
  }
  return s;
}

}  // namespace

Subspace kernel_space(const FramePtr& frame, const TowerSpec& tower, unsigned i) {
  require_frame(frame, tower.ctx());
  if (i >= tower.n()) {
    throw ParameterError("kernel index " + std::to_string(i) + " outside 0.." + std::to_string(tower.n() - 1));
  }
  const auto& ctx = tower.ctx();
  const auto from = tower.field_degree(i);
  const auto to = tower.field_degree(i + 1);
  const auto fi = subfield_basis(ctx, from);
  std::vector<std::uint64_t> images;
  images.reserve(fi.size());
  for (const auto& x : fi) images.push_back(ctx.rel_trace(x, from, to).bits);
  std::vector<FieldElement> gens;
  std::vector<std::uint64_t> fi_bits;
  for (const auto& x : fi) fi_bits.push_back(x.bits);
  for (auto mask : gf2::kernel(images)) gens.push_back({gf2::combine(fi_bits, mask)});
  auto w = span(frame, gens);
  if (w.dim() != tower.m_at(i) - tower.m_at(i + 1)) {
    throw ConstructionError("trace kernel W_" + std::to_string(i) + " has unexpected dimension " +
                            std::to_string(w.dim()));
  }
  return w;
}

Subspace middle_field(const FramePtr& frame) {
  const auto& ctx = frame->ctx();
  const auto basis = subfield_basis(ctx, ctx.e() * ctx.m());
  return span(frame, basis);
}

std::vector<FieldElement> gammas(const SpreadParams& params) {
  const auto& ctx = params.tower().ctx();
  std::vector<FieldElement> out{FieldCtx::one()};
  for (const auto& z : params.zetas()) out.push_back(ctx.mul(out.back(), z));
  return out;
}

Subspace base_subspace(const FramePtr& frame, const SpreadParams& params) {
  const auto& tower = params.tower();
  require_frame(frame, tower.ctx());
  const auto gamma = gammas(params);
  Subspace sum(frame);
  for (unsigned i = 0; i < tower.n(); ++i) {
    sum = subspace_sum(sum, scale_subspace(kernel_space(frame, tower, i), gamma[i]));
  }
  const unsigned m = tower.ctx().m();
  unsigned want = m - 1;
  if (params.kind() == SpreadKind::symplectic) {
    const FieldElement top = gamma[tower.n()];
    sum = subspace_sum(sum, span(frame, std::span<const FieldElement>(&top, 1)));
    want = m;
  }
  if (sum.dim() != want) {
    throw ConstructionError("base subspace has dimension " + std::to_string(sum.dim()) + ", expected " +
                            std::to_string(want) + "; the summands are not independent");
  }
  return sum;
}

Subspace orbit_member(const FramePtr& frame, const SpreadParams& params, std::uint64_t t) {
  const auto& ctx = params.tower().ctx();
  return scale_subspace(base_subspace(frame, params), ctx.pow(ctx.circle_generator(), t % (ctx.qm() + 1)));
}

Spread orbit_spread(const FramePtr& frame, const SpreadParams& params) {
  auto s = orbit_of(frame, base_subspace(frame, params), params.kind());
  s.params = params;
  s.provenance = "orbit";
  return s;
}

Spread desarguesian_spread(const FramePtr& frame) {
  auto s = orbit_of(frame, middle_field(frame), SpreadKind::symplectic);
  s.provenance = "desarguesian";
  return s;
}

Subspace restrict_singular(const FormCtx& fc, const Subspace& x) {
  if (!(x.frame() == fc.frame())) throw ParameterError("subspace and form use different fields");
  const unsigned m = fc.ctx().m();
  if (x.dim() != m) {
    throw PreconditionError("restrict_singular needs an m-dimensional subspace, got dimension " +
                            std::to_string(x.dim()));
  }
  if (!is_totally_isotropic(fc, x)) throw PreconditionError("restrict_singular needs a totally isotropic subspace");
  // On a totally isotropic subspace Q is additive, so its zeros are the
  // kernel of a GF(2)-linear map.
  const auto basis = x.binary_basis();
  std::vector<std::uint64_t> images;
  std::vector<std::uint64_t> bits;
  for (const auto& b : basis) {
    images.push_back(fc.quad(b).bits);
    bits.push_back(b.bits);
  }
  std::vector<FieldElement> gens;
  for (auto mask : gf2::kernel(images)) gens.push_back({gf2::combine(bits, mask)});
  auto out = span(x.frame_ptr(), gens);
  if (out.dim() != m - 1) {
    throw ConstructionError("singular vectors of the subspace span dimension " + std::to_string(out.dim()) +
                            ", expected " + std::to_string(m - 1) + "; Q is degenerate on it");
  }
  return out;
}

Spread restrict_spread(const FormCtx& fc, const Spread& s) {
  if (s.kind != SpreadKind::symplectic) throw PreconditionError("restrict_spread needs a symplectic spread");
  if (s.verified != Verified::pass) throw PreconditionError("restrict_spread needs a verified spread");
  Spread out;
  out.frame = s.frame;
  out.kind = SpreadKind::elliptic;
  out.provenance = "restricted";
  out.members.reserve(s.members.size());
  for (const auto& x : s.members) out.members.push_back(restrict_singular(fc, x));
  canonicalize(out);
  if (distinct_count(out.members) != s.members.size()) {
    throw ConstructionError("restriction merged distinct members");
  }
  if (s.params) {
    auto zetas = s.params->zeta_exponents();
    zetas.pop_back();
    out.params = SpreadParams(s.params->tower(), std::move(zetas), SpreadKind::elliptic);
  }
  return out;
}

std::vector<unsigned> default_chain(unsigned m) {
  if (m <= 1 || m % 2 == 0) throw ParameterError("default_chain needs an odd m > 1, got " + std::to_string(m));
  const auto primes = factorize(m);
  std::vector<unsigned> chain{m};
  unsigned rest = m;
  for (auto p : primes) {
    rest /= static_cast<unsigned>(p);
    chain.push_back(rest);
  }
  return chain;
}

}  // namespace ellspread
