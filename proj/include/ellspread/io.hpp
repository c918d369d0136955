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

// JSON encodings for contexts, subspaces, spreads and reports.
//
// Field elements and the modulus are hex strings written little-endian:
// the first digit holds the coefficients of x^0..x^3 (x^0 in its lowest
// bit), the next x^4..x^7, and so on. Digits are lowercase.

#include <cstdint>
#include <string>
#include <string_view>

#include "ellspread/analysis.hpp"
#include "ellspread/forms.hpp"
#include "ellspread/spreads.hpp"
#include "json.hpp"

namespace ellspread::io {

using nlohmann::json;

std::string hex_le(std::uint64_t bits, unsigned nbits);
/// Throws ParameterError on bad digits or values wider than 64 bits.
std::uint64_t parse_hex_le(std::string_view s);

json context_to_json(const FieldCtx& ctx);
FieldPtr context_from_json(const json& j, unsigned max_degree = kDefaultMaxDegree);

json subspace_to_json(const Subspace& x);
Subspace subspace_from_json(const FramePtr& frame, const json& j);

json spread_to_json(const Spread& s);
/// Rebuilds context, frame, members and parameters; members are
/// re-canonicalized.
Spread spread_from_json(const json& j, unsigned max_degree = kDefaultMaxDegree);

json to_json(const VerificationReport& r);
json to_json(const ClassificationResult& r);
json to_json(const CensusReport& r);

}  // namespace ellspread::io
