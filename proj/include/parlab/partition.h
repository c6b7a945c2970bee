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

#ifndef PARLAB_PARTITION_H_
#define PARLAB_PARTITION_H_

#include <cstdint>
#include <span>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "parlab/cell.h"
#include "parlab/function_table.h"
#include "parlab/value_set.h"

namespace parlab {

// An arbitrary set of cells, kept sorted in row-major order without
// duplicates.
struct Region {
  std::vector<Cell> cells;

  static Region FromCells(std::vector<Cell> cells);
  std::uint64_t size() const { return cells.size(); }
  bool contains(const Cell& c) const;

  friend bool operator==(const Region&, const Region&) = default;
};

// A combinatorial rectangle rows x cols. Neither side needs to be
// contiguous. Cells are never materialized unless asked for.
struct Rect {
  ValueSet rows;
  ValueSet cols;

  std::uint64_t size() const { return rows.size() * cols.size(); }
  bool empty() const { return rows.empty() || cols.empty(); }
  bool contains(const Cell& c) const { return rows.contains(c.x1) && cols.contains(c.x2); }
  const ValueSet& side(Party p) const { return p == Party::kOne ? rows : cols; }
  Cell first_cell() const { return Cell{rows.min(), cols.min()}; }

  template <typename F>
  void ForEachCell(F&& f) const {
    rows.ForEach([&](std::uint32_t r) { cols.ForEach([&](std::uint32_t c) { f(Cell{r, c}); }); });
  }
  Region ToRegion() const;

  friend bool operator==(const Rect&, const Rect&) = default;
};

// Disjoint regions covering the whole matrix, with a cell -> region index.
class Partition {
 public:
  static absl::StatusOr<Partition> Create(Shape shape, std::vector<Region> regions);
  static absl::StatusOr<Partition> FromRects(Shape shape, std::span<const Rect> rects);

  Shape shape() const { return shape_; }
  std::span<const Region> regions() const { return regions_; }
  std::size_t size() const { return regions_.size(); }
  std::uint32_t region_of(const Cell& c) const { return index_[shape_.index(c)]; }
  const Region& region_containing(const Cell& c) const { return regions_[region_of(c)]; }

 private:
  friend Partition IdealPartition(const FunctionTable& table);

  Partition(Shape shape, std::vector<Region> regions, std::vector<std::uint32_t> index)
      : shape_(shape), regions_(std::move(regions)), index_(std::move(index)) {}

  Shape shape_;
  std::vector<Region> regions_;
  std::vector<std::uint32_t> index_;
};

// A partition of the matrix into rectangles, with a cell -> tile index.
class Tiling {
 public:
  static absl::StatusOr<Tiling> Create(Shape shape, std::vector<Rect> tiles);

  Shape shape() const { return shape_; }
  std::span<const Rect> tiles() const { return tiles_; }
  std::size_t size() const { return tiles_.size(); }
  std::uint32_t tile_of(const Cell& c) const { return index_[shape_.index(c)]; }

 private:
  Tiling(Shape shape, std::vector<Rect> tiles, std::vector<std::uint32_t> index)
      : shape_(shape), tiles_(std::move(tiles)), index_(std::move(index)) {}

  Shape shape_;
  std::vector<Rect> tiles_;
  std::vector<std::uint32_t> index_;
};

// One region per distinct label, holding exactly the cells with that label.
// Region ids coincide with the table's label ids.
Partition IdealPartition(const FunctionTable& table);

// Slices `region` along fixed values of party `p`: one rectangle
// {v} x {co-values} per value v of p present in the region (party one fixes
// the row, party two the column).
std::vector<Rect> IPartition(const Region& region, Party p);

// The ideal partition with every region sliced by IPartition.
Partition IIdealPartition(const FunctionTable& table, Party p);

// The tiling with every tile sliced along party p's values.
Tiling IInducedTiling(const Tiling& tiling, Party p);

bool IsMonochromatic(const Region& region, const FunctionTable& table);
bool IsMonochromatic(const Rect& rect, const FunctionTable& table);

// Disjointness and coverage verdicts. The Check* forms say what is wrong.
absl::Status CheckPartition(std::span<const Region> regions, Shape shape);
absl::Status CheckTiling(std::span<const Rect> tiles, Shape shape);
inline bool IsPartition(std::span<const Region> regions, Shape shape) {
  return CheckPartition(regions, shape).ok();
}
inline bool IsTiling(std::span<const Rect> tiles, Shape shape) { return CheckTiling(tiles, shape).ok(); }

// True iff every block of `fine` lies inside a single block of `coarse`.
bool Refines(const Tiling& fine, const Partition& coarse);
bool Refines(const Partition& fine, const Partition& coarse);

// True iff the two cover the same family of cell sets.
bool SameBlocks(const Tiling& tiling, const Partition& partition);
bool SameBlocks(const Partition& a, const Partition& b);

}  // namespace parlab

#endif  // PARLAB_PARTITION_H_
