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

// Dense linear algebra over GF(2) on vectors packed into 64-bit words.

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

namespace ellspread::gf2 {

/// A GF(2)-linear map given by the images of the unit vectors.
class LinearMap {
 public:
  LinearMap() = default;
  explicit LinearMap(std::vector<std::uint64_t> columns) : columns_(std::move(columns)) {}

  [[nodiscard]] std::uint64_t apply(std::uint64_t x) const noexcept {
    std::uint64_t r = 0;
    while (x != 0) {
      r ^= columns_[static_cast<unsigned>(std::countr_zero(x))];
      x &= x - 1;
    }
    return r;
  }

  [[nodiscard]] std::span<const std::uint64_t> columns() const noexcept { return columns_; }

 private:
  std::vector<std::uint64_t> columns_;
};

/// Incremental echelon basis. Every stored vector has a distinct leading
/// bit, and each carries a tag recording which inserted inputs it combines.
class Echelon {
 public:
  /// Reduces `v` (and its tag) against the basis. Returns the residue.
  std::uint64_t reduce(std::uint64_t v, std::uint64_t* tag = nullptr) const noexcept {
    for (const auto& row : rows_) {
      if ((v >> row.lead) & 1U) {
        v ^= row.bits;
        if (tag != nullptr) *tag ^= row.tag;
      }
    }
    return v;
  }

  /// Inserts `v`. Returns false (and leaves `tag` holding the dependency)
  /// when `v` already lies in the span.
  bool insert(std::uint64_t v, std::uint64_t& tag) {
    v = reduce(v, &tag);
    if (v == 0) return false;
    const auto lead = static_cast<unsigned>(63 - std::countl_zero(v));
    rows_.push_back({v, tag, lead});
    return true;
  }

  bool insert(std::uint64_t v) {
    std::uint64_t tag = 0;
    return insert(v, tag);
  }

  [[nodiscard]] bool contains(std::uint64_t v) const noexcept { return reduce(v) == 0; }
  [[nodiscard]] std::size_t rank() const noexcept { return rows_.size(); }

  [[nodiscard]] std::vector<std::uint64_t> vectors() const {
    std::vector<std::uint64_t> out;
    out.reserve(rows_.size());
    for (const auto& row : rows_) out.push_back(row.bits);
    return out;
  }

 private:
  struct Row {
    std::uint64_t bits;
    std::uint64_t tag;
    unsigned lead;
  };
  std::vector<Row> rows_;
};

/// Kernel of the map sending input basis vector b to images[b]. Each result
/// is a bitmask over the inputs. Requires images.size() <= 64.
inline std::vector<std::uint64_t> kernel(std::span<const std::uint64_t> images) {
  Echelon ech;
  std::vector<std::uint64_t> out;
  for (std::size_t b = 0; b < images.size(); ++b) {
    std::uint64_t tag = std::uint64_t{1} << b;
    if (!ech.insert(images[b], tag)) out.push_back(tag);
  }
  return out;
}

/// Inverse of an invertible n x n map given by columns. Returns an empty
/// map when the columns are dependent.
inline LinearMap invert(std::span<const std::uint64_t> columns) {
  const auto n = columns.size();
  Echelon ech;
  for (std::size_t b = 0; b < n; ++b) {
    std::uint64_t tag = std::uint64_t{1} << b;
    if (!ech.insert(columns[b], tag)) return {};
  }
  std::vector<std::uint64_t> inv(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t tag = 0;
    ech.reduce(std::uint64_t{1} << i, &tag);
    inv[i] = tag;
  }
  return LinearMap(std::move(inv));
}

/// Combines the vectors selected by the bits of `mask`.
inline std::uint64_t combine(std::span<const std::uint64_t> vectors, std::uint64_t mask) noexcept {
  std::uint64_t r = 0;
  while (mask != 0) {
    r ^= vectors[static_cast<unsigned>(std::countr_zero(mask))];
    mask &= mask - 1;
  }
  return r;
}

}  // namespace ellspread::gf2
