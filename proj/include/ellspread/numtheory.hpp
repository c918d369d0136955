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
#include <vector>

namespace ellspread {

/// Distinct prime factors in increasing order, by trial division.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

/// Prime factorization with multiplicity, nondecreasing.
std::vector<std::uint64_t> factorize(std::uint64_t n);

/// Positive divisors in increasing order.
std::vector<std::uint64_t> divisors(std::uint64_t n);

/// (a * b) mod n without overflow.
std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t n);

}  // namespace ellspread
