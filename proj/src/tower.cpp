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

#include "ellspread/tower.hpp"

#include <string>

#include "ellspread/errors.hpp"

namespace ellspread {

void check_chain(unsigned m, const std::vector<unsigned>& chain) {
  if (chain.size() < 2) throw ParameterError("divisor chain needs at least two terms (m and 1)");
  if (chain.front() != m) {
    throw ParameterError("divisor chain must start at m = " + std::to_string(m));
  }
  if (chain.back() != 1) throw ParameterError("divisor chain must end at 1");
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    if (chain[i + 1] >= chain[i] || chain[i] % chain[i + 1] != 0) {
      throw ParameterError("divisor chain must strictly decrease with each term dividing the previous; " +
                           std::to_string(chain[i + 1]) + " does not properly divide " + std::to_string(chain[i]));
    }
  }
}

TowerSpec::TowerSpec(FieldPtr ctx, std::vector<unsigned> chain) : ctx_(std::move(ctx)), chain_(std::move(chain)) {
  if (!ctx_) throw ParameterError("tower requires a field context");
  check_chain(ctx_->m(), chain_);
}

FieldElement zeta_element(const TowerSpec& tower, unsigned i, std::uint64_t k) {
  if (i < 1 || i > tower.n()) {
    throw ParameterError("zeta index " + std::to_string(i) + " outside 1.." + std::to_string(tower.n()));
  }
  const auto& ctx = tower.ctx();
  const std::uint64_t full = ctx.qm() + 1;
  const std::uint64_t sub = tower.circle_order(i);
  return ctx.pow(ctx.circle_generator(), (k % sub) * (full / sub));
}

}  // namespace ellspread
