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

#include "ellspread/io.hpp"

#include "ellspread/errors.hpp"

namespace ellspread::io {

std::string hex_le(std::uint64_t bits, unsigned nbits) {
  static constexpr char kDigits[] = "0123456789abcdef";
  const unsigned ndigits = nbits == 0 ? 1 : (nbits + 3) / 4;
  std::string out;
  out.reserve(ndigits);
  for (unsigned i = 0; i < ndigits; ++i) out.push_back(kDigits[(bits >> (4 * i)) & 0xFU]);
  return out;
}

std::uint64_t parse_hex_le(std::string_view s) {
  if (s.empty()) throw ParameterError("empty hex string");
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    unsigned d = 0;
    if (c >= '0' && c <= '9') {
      d = static_cast<unsigned>(c - '0');
    } else if (c >= 'a' && c <= 'f') {
      d = static_cast<unsigned>(c - 'a' + 10);
    } else if (c >= 'A' && c <= 'F') {
      d = static_cast<unsigned>(c - 'A' + 10);
    } else {
      throw ParameterError("invalid hex digit in '" + std::string(s) + "'");
    }
    if (d == 0) continue;
    if (i >= 16) throw ParameterError("hex value '" + std::string(s) + "' does not fit in 64 bits");
    v |= std::uint64_t{d} << (4 * i);
  }
  return v;
}

json context_to_json(const FieldCtx& ctx) {
  return json{{"e", ctx.e()}, {"m", ctx.m()}, {"modulus_hex", hex_le(ctx.modulus(), ctx.degree() + 1)}};
}

FieldPtr context_from_json(const json& j, unsigned max_degree) {
  try {
    const auto e = j.at("e").get<unsigned>();
    const auto m = j.at("m").get<unsigned>();
    if (j.contains("modulus_hex")) {
      return FieldCtx::with_modulus(e, m, parse_hex_le(j.at("modulus_hex").get<std::string>()), max_degree);
    }
    return FieldCtx::make(e, m, max_degree);
  } catch (const json::exception& ex) {
    throw ParameterError(std::string("malformed context: ") + ex.what());
  }
}

json subspace_to_json(const Subspace& x) {
  const unsigned nbits = x.frame().ctx().degree();
  json arr = json::array();
  for (const auto& b : x.basis()) arr.push_back(hex_le(b.bits, nbits));
  return arr;
}

Subspace subspace_from_json(const FramePtr& frame, const json& j) {
  if (!j.is_array()) throw ParameterError("subspace must be a JSON array of hex strings");
  std::vector<FieldElement> gens;
  for (const auto& item : j) {
    if (!item.is_string()) throw ParameterError("subspace basis entries must be hex strings");
    const FieldElement x{parse_hex_le(item.get<std::string>())};
    if (!frame->ctx().contains(x)) throw ParameterError("basis vector lies outside the field");
    gens.push_back(x);
  }
  return span(frame, gens);
}

json spread_to_json(const Spread& s) {
  if (!s.frame) throw ParameterError("spread has no coordinate frame");
  json members = json::array();
  for (const auto& x : s.members) members.push_back(subspace_to_json(x));
  json chain = json::array();
  json zetas = json::array();
  if (s.params) {
    for (auto c : s.params->tower().chain()) chain.push_back(c);
    for (auto k : s.params->zeta_exponents()) zetas.push_back(k);
  }
  return json{{"context", context_to_json(s.frame->ctx())},
              {"kind", std::string(to_string(s.kind))},
              {"provenance", s.provenance},
              {"chain", chain},
              {"zeta_exponents", zetas},
              {"members", members}};
}

Spread spread_from_json(const json& j, unsigned max_degree) {
  try {
    auto ctx = context_from_json(j.at("context"), max_degree);
    Spread s;
    s.frame = CoordFrame::make(ctx);
    s.kind = parse_spread_kind(j.at("kind").get<std::string>());
    s.provenance = j.value("provenance", std::string("loaded"));
    const auto chain = j.value("chain", std::vector<unsigned>{});
    const auto zetas = j.value("zeta_exponents", std::vector<std::uint64_t>{});
    if (!chain.empty()) {
      s.params = SpreadParams(TowerSpec(ctx, chain), zetas, s.kind);
    } else if (!zetas.empty()) {
      throw ParameterError("zeta_exponents given without a chain");
    }
    for (const auto& m : j.at("members")) s.members.push_back(subspace_from_json(s.frame, m));
    canonicalize(s);
    return s;
  } catch (const json::exception& ex) {
    throw ParameterError(std::string("malformed spread file: ") + ex.what());
  }
}

json to_json(const VerificationReport& r) {
  json j{{"member_count", r.member_count},
         {"expected_members", r.expected_members},
         {"dims_ok", r.dims_ok},
         {"all_ts_or_ti", r.all_ts_or_ti},
         {"pairwise_trivial", r.pairwise_trivial},
         {"covered", r.covered},
         {"expected", r.expected},
         {"pass", r.pass},
         {"mode", std::string(to_string(r.mode))}};
  if (r.exhaustive_ok) j["exhaustive_ok"] = *r.exhaustive_ok;
  return j;
}

json to_json(const ClassificationResult& r) {
  json classes = json::array();
  for (const auto& c : r.classes) {
    classes.push_back(json{{"rep_exponents", c.rep_exponents}, {"orbit_size", c.orbit_size}, {"aut_order", c.aut_order}});
  }
  return json{{"chain", r.chain},
              {"e", r.e},
              {"tuple_count", r.tuple_count},
              {"class_count", r.class_count},
              {"classes", classes},
              {"bound", json{{"num", r.bound.num}, {"den", r.bound.den}}},
              {"bound_satisfied", r.bound_satisfied},
              {"advisory", r.advisory}};
}

json to_json(const CensusReport& r) {
  return json{{"nonzero_singular", r.nonzero_singular},
              {"expected_elliptic", r.expected_elliptic},
              {"type", std::string(to_string(r.type))}};
}

}  // namespace ellspread::io
