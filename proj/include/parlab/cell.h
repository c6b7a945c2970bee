// Copyright 2026 The par-lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PARLAB_CELL_H_
#define PARLAB_CELL_H_

#include <compare>
#include <cstdint>
#include <string>

#include "absl/strings/str_cat.h"

namespace parlab {

// The two communicating parties. Party one owns the rows of the outcome
// matrix, party two owns the columns.
enum class Party : int { kOne = 1, kTwo = 2 };

inline Party Other(Party p) { return p == Party::kOne ? Party::kTwo : Party::kOne; }
inline int PartyIndex(Party p) { return static_cast<int>(p); }

// One entry of the outcome matrix: x1 selects the row, x2 the column.
struct Cell {
  std::uint32_t x1 = 0;
  std::uint32_t x2 = 0;

  std::uint32_t coordinate(Party p) const { return p == Party::kOne ? x1 : x2; }

  friend auto operator<=>(const Cell&, const Cell&) = default;

  template <typename H>
  friend H AbslHashValue(H h, const Cell& c) {
    return H::combine(std::move(h), c.x1, c.x2);
  }
};

inline std::string ToString(const Cell& c) { return absl::StrCat("(", c.x1, ",", c.x2, ")"); }

// Dimensions of an outcome matrix. Most problems are square with 2^k values
// per party; a few fixtures use other sizes.
struct Shape {
  std::uint32_t rows = 0;
  std::uint32_t cols = 0;

  std::uint64_t cell_count() const { return std::uint64_t{rows} * cols; }
  std::uint32_t extent(Party p) const { return p == Party::kOne ? rows : cols; }
  bool contains(const Cell& c) const { return c.x1 < rows && c.x2 < cols; }
  std::uint64_t index(const Cell& c) const { return std::uint64_t{c.x1} * cols + c.x2; }
  Cell cell_at(std::uint64_t index) const {
    return Cell{static_cast<std::uint32_t>(index / cols), static_cast<std::uint32_t>(index % cols)};
  }

  static Shape Square(int k) {
    const std::uint32_t n = std::uint32_t{1} << k;
    return Shape{n, n};
  }

  friend bool operator==(const Shape&, const Shape&) = default;
};

}  // namespace parlab

#endif  // PARLAB_CELL_H_
