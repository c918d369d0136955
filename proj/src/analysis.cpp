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

#include "ellspread/analysis.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_map>

#include "ellspread/errors.hpp"
#include "ellspread/numtheory.hpp"

namespace ellspread {

std::string_view to_string(VerifyMode m) noexcept {
  return m == VerifyMode::exhaustive ? "exhaustive" : "counting";
}

VerifyMode parse_verify_mode(std::string_view s) {
  if (s == "counting") return VerifyMode::counting;
  if (s == "exhaustive") return VerifyMode::exhaustive;
  throw ParameterError("unknown verification mode '" + std::string(s) + "'");
}

namespace {

bool pairwise_trivial(const std::vector<Subspace>& members) {
  std::vector<gf2::Echelon> echelons(members.size());
  std::vector<std::vector<std::uint64_t>> bases(members.size());
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (const auto& v : members[i].binary_basis()) {
      echelons[i].insert(v.bits);
      bases[i].push_back(v.bits);
    }
  }
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      gf2::Echelon ech = echelons[i];
      for (auto v : bases[j]) {
        if (!ech.insert(v)) return false;
      }
    }
  }
  return true;
}

bool exhaustive_scan(const FormCtx& fc, const Spread& s) {
  const auto& ctx = fc.ctx();
  std::vector<std::uint8_t> hits(ctx.size(), 0);
  for (const auto& x : s.members) {
    for (const auto& v : enumerate(x, ctx.degree())) {
      auto& h = hits[v.bits];
      if (h < 255) ++h;
    }
  }
  const bool elliptic = s.kind == SpreadKind::elliptic;
  for (std::uint64_t v = 1; v < ctx.size(); ++v) {
    const bool target = !elliptic || fc.quad(FieldElement{v}).is_zero();
    if (hits[v] != (target ? 1 : 0)) return false;
  }
  return true;
}

}  // namespace

VerificationReport verify_spread(const FormCtx& fc, const Spread& s, VerifyMode mode, unsigned exhaustive_max_degree) {
  const auto& ctx = fc.ctx();
  for (const auto& x : s.members) {
    if (!(x.frame() == fc.frame())) throw ParameterError("spread member and form use different fields");
  }
  if (mode == VerifyMode::exhaustive && ctx.degree() > exhaustive_max_degree) {
    throw ResourceError("exhaustive verification over 2^" + std::to_string(ctx.degree()) +
                        " vectors exceeds the budget 2^" + std::to_string(exhaustive_max_degree));
  }
  const bool elliptic = s.kind == SpreadKind::elliptic;
  const unsigned want_dim = elliptic ? ctx.m() - 1 : ctx.m();

  VerificationReport r;
  r.mode = mode;
  r.member_count = s.members.size();
  r.expected_members = ctx.qm() + 1;
  r.dims_ok = std::all_of(s.members.begin(), s.members.end(), [&](const Subspace& x) { return x.dim() == want_dim; });
  r.all_ts_or_ti = std::all_of(s.members.begin(), s.members.end(), [&](const Subspace& x) {
    return elliptic ? is_totally_singular(fc, x) : is_totally_isotropic(fc, x);
  });
  r.pairwise_trivial = pairwise_trivial(s.members);
  for (const auto& x : s.members) r.covered += (std::uint64_t{1} << (ctx.e() * x.dim())) - 1;
  if (!elliptic) {
    r.expected = ctx.size() - 1;
  } else if (ctx.degree() <= kDefaultCensusMaxDegree) {
    r.expected = singular_census(fc);
  } else {
    r.expected = elliptic_singular_count(ctx);
  }
  if (mode == VerifyMode::exhaustive) r.exhaustive_ok = exhaustive_scan(fc, s);
  r.pass = r.member_count == r.expected_members && r.dims_ok && r.all_ts_or_ti && r.pairwise_trivial &&
           r.covered == r.expected && r.exhaustive_ok.value_or(true);
  return r;
}

bool verify_transitive(const Spread& s, FieldElement theta) {
  if (s.members.empty()) return false;
  const auto& ctx = s.members.front().frame().ctx();
  const std::size_t count = s.members.size();
  if (count != ctx.qm() + 1 || theta.is_zero()) return false;
  std::vector<std::vector<std::uint64_t>> keys;
  keys.reserve(count);
  for (const auto& x : s.members) keys.push_back(x.key());
  if (!std::is_sorted(keys.begin(), keys.end())) return false;

  std::vector<std::size_t> image(count);
  std::vector<bool> hit(count, false);
  for (std::size_t i = 0; i < count; ++i) {
    const auto key = scale_subspace(s.members[i], theta).key();
    const auto it = std::lower_bound(keys.begin(), keys.end(), key);
    if (it == keys.end() || *it != key) return false;
    const auto j = static_cast<std::size_t>(it - keys.begin());
    if (hit[j]) return false;
    hit[j] = true;
    image[i] = j;
  }
  std::size_t length = 1;
  for (std::size_t i = image[0]; i != 0; i = image[i]) ++length;
  return length == count;
}

EquivalenceResult params_equivalent(const SpreadParams& p, const SpreadParams& p2) {
  if (p.kind() != SpreadKind::elliptic || p2.kind() != SpreadKind::elliptic) {
    throw ParameterError("params_equivalent compares elliptic parameters only");
  }
  EquivalenceResult r;
  r.advisory = !p.theorem_conditions() || !p2.theorem_conditions();
  if (!(p.tower() == p2.tower())) return r;
  const auto& ctx = p.tower().ctx();
  const auto a = p.zetas();
  const auto b = p2.zetas();
  for (unsigned k = 0; k < ctx.degree(); ++k) {
    bool all = true;
    for (std::size_t i = 0; i < a.size() && all; ++i) all = ctx.frobenius(a[i], k) == b[i];
    if (all) {
      r.equivalent = true;
      r.witness = k;
      return r;
    }
  }
  return r;
}

Rational theorem_bound(const TowerSpec& tower) {
  const auto& ctx = tower.ctx();
  std::uint64_t num = 1;
  for (unsigned i = 1; i < tower.n(); ++i) num *= tower.circle_order(i);
  const std::uint64_t m1 = tower.n() == 1 ? ctx.m() : tower.m_at(1);
  std::uint64_t den = 2 * m1 * ctx.e();
  const auto g = std::gcd(num, den);
  return {num / g, den / g};
}

AutOrder aut_order(const SpreadParams& params) {
  if (params.kind() != SpreadKind::elliptic) throw ParameterError("aut_order is defined for elliptic parameters");
  const auto& ctx = params.tower().ctx();
  const auto z = params.zetas();
  AutOrder r;
  for (unsigned k = 0; k < ctx.degree(); ++k) {
    if (std::all_of(z.begin(), z.end(), [&](FieldElement x) { return ctx.frobenius(x, k) == x; })) ++r.stabilizer;
  }
  r.order = (ctx.qm() + 1) * (ctx.q() - 1) * r.stabilizer;
  r.advisory = !params.theorem_conditions();
  return r;
}

ClassificationResult classify_tower(const TowerSpec& tower, std::uint64_t max_tuples) {
  const auto& ctx = tower.ctx();
  const unsigned slots = tower.n() - 1;
  ClassificationResult res;
  res.chain = tower.chain();
  res.e = ctx.e();
  res.bound = theorem_bound(tower);
  res.advisory = ctx.qm() <= 8;

  // Slot s holds k_{s+1} in 1..radix[s]; tuples are indexed in mixed radix
  // with k_1 most significant, so increasing index is lexicographic order.
  std::vector<std::uint64_t> radix(slots);
  std::uint64_t total = 1;
  for (unsigned s = 0; s < slots; ++s) {
    radix[s] = tower.circle_order(s + 1) - 1;
    if (total > max_tuples / radix[s]) {
      throw ResourceError("classification needs more than " + std::to_string(max_tuples) + " parameter tuples");
    }
    total *= radix[s];
  }
  res.tuple_count = total;

  // perm[s][k][j]: digit of zeta^(2^j) for the zeta with digit j, computed
  // on field elements.
  const unsigned degree = ctx.degree();
  std::vector<std::vector<std::vector<std::uint32_t>>> perm(slots);
  for (unsigned s = 0; s < slots; ++s) {
    std::vector<FieldElement> elems(radix[s]);
    std::unordered_map<std::uint64_t, std::uint32_t> index;
    for (std::uint64_t d = 0; d < radix[s]; ++d) {
      elems[d] = zeta_element(tower, s + 1, d + 1);
      index.emplace(elems[d].bits, static_cast<std::uint32_t>(d));
    }
    perm[s].assign(degree, std::vector<std::uint32_t>(radix[s]));
    for (unsigned j = 0; j < degree; ++j) {
      for (std::uint64_t d = 0; d < radix[s]; ++d) {
        const auto it = index.find(ctx.frobenius(elems[d], j).bits);
        if (it == index.end()) throw ConstructionError("Frobenius image left the zeta set");
        perm[s][j][d] = it->second;
      }
    }
  }

  auto digits_of = [&](std::uint64_t idx) {
    std::vector<std::uint64_t> d(slots);
    for (unsigned s = slots; s-- > 0;) {
      d[s] = idx % radix[s];
      idx /= radix[s];
    }
    return d;
  };

  std::vector<bool> seen(total, false);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    if (seen[idx]) continue;
    const auto digits = digits_of(idx);
    std::vector<std::uint64_t> orbit;
    for (unsigned j = 0; j < degree; ++j) {
      std::uint64_t image = 0;
      for (unsigned s = 0; s < slots; ++s) image = image * radix[s] + perm[s][j][digits[s]];
      orbit.push_back(image);
      seen[image] = true;
    }
    std::sort(orbit.begin(), orbit.end());
    orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());

    ClassInfo info;
    for (auto d : digits) info.rep_exponents.push_back(d + 1);
    info.orbit_size = orbit.size();
    info.aut_order = aut_order(SpreadParams(tower, info.rep_exponents, SpreadKind::elliptic)).order;
    res.classes.push_back(std::move(info));
  }
  res.class_count = res.classes.size();
  res.bound_satisfied = res.class_count * res.bound.den > res.bound.num;
  return res;
}

std::uint64_t galois_exponent(const TowerSpec& tower, unsigned i, std::uint64_t k_i, std::uint64_t k) {
  const auto order = tower.circle_order(i);
  std::uint64_t factor = 1 % order;
  for (std::uint64_t j = 0; j < k % tower.ctx().degree(); ++j) factor = (factor * 2) % order;
  return mulmod(k_i % order, factor, order);
}

Spread galois_image_spread(const Spread& s, std::uint64_t k) {
  if (s.members.empty()) return s;
  const auto& ctx = s.members.front().frame().ctx();
  if (k >= ctx.degree()) {
    throw ParameterError("Galois exponent " + std::to_string(k) + " outside 0.." + std::to_string(ctx.degree() - 1));
  }
  Spread out;
  out.frame = s.frame;
  out.kind = s.kind;
  out.provenance = "galois_image";
  out.members.reserve(s.members.size());
  for (const auto& x : s.members) out.members.push_back(apply_galois(x, k));
  canonicalize(out);
  if (s.params) {
    std::vector<std::uint64_t> zetas;
    const auto& tower = s.params->tower();
    for (unsigned i = 1; i <= s.params->zeta_exponents().size(); ++i) {
      zetas.push_back(galois_exponent(tower, i, s.params->zeta_exponents()[i - 1], k));
    }
    out.params = SpreadParams(tower, std::move(zetas), s.params->kind());
  }
  return out;
}

}  // namespace ellspread
