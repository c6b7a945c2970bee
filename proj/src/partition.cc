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

#include "parlab/partition.h"

#include <algorithm>
#include <limits>

#include "absl/strings/str_cat.h"

namespace parlab {
namespace {

constexpr std::uint32_t kUnowned = std::numeric_limits<std::uint32_t>::max();

// Assigns each cell of each block to the block's id, failing on overlap,
// out-of-bounds cells, empty blocks, or uncovered cells.
template <typename Blocks, typename ForEachCellOf>
absl::StatusOr<std::vector<std::uint32_t>> BuildOwnerIndex(Shape shape, const Blocks& blocks,
                                                           ForEachCellOf for_each_cell) {
  std::vector<std::uint32_t> owner(shape.cell_count(), kUnowned);
  for (std::uint32_t id = 0; id < blocks.size(); ++id) {
    absl::Status status;
    bool any = false;
    for_each_cell(blocks[id], [&](const Cell& c) {
      any = true;
      if (!status.ok()) return;
      if (!shape.contains(c)) {
        status = absl::InvalidArgumentError(
            absl::StrCat("block ", id, " has out-of-bounds cell ", ToString(c)));
        return;
      }
      std::uint32_t& slot = owner[shape.index(c)];
      if (slot != kUnowned) {
        status = absl::InvalidArgumentError(
            absl::StrCat("blocks ", slot, " and ", id, " overlap at ", ToString(c)));
        return;
      }
      slot = id;
    });
    if (!status.ok()) return status;
    if (!any) return absl::InvalidArgumentError(absl::StrCat("block ", id, " is empty"));
  }
  for (std::uint64_t i = 0; i < owner.size(); ++i) {
    if (owner[i] == kUnowned) {
      return absl::InvalidArgumentError(
          absl::StrCat("cell ", ToString(shape.cell_at(i)), " is not covered"));
    }
  }
  return owner;
}

template <typename F>
void ForEachRegionCell(const Region& r, F&& f) {
  for (const Cell& c : r.cells) f(c);
}

template <typename F>
void ForEachRectCell(const Rect& r, F&& f) {
  r.ForEachCell(f);
}

const auto kRegionCells = [](const Region& r, auto&& f) { ForEachRegionCell(r, f); };
const auto kRectCells = [](const Rect& r, auto&& f) { ForEachRectCell(r, f); };

}  // namespace

Region Region::FromCells(std::vector<Cell> cells) {
  std::sort(cells.begin(), cells.end());
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
  return Region{std::move(cells)};
}

bool Region::contains(const Cell& c) const { return std::binary_search(cells.begin(), cells.end(), c); }

Region Rect::ToRegion() const {
  Region r;
  r.cells.reserve(size());
  ForEachCell([&](const Cell& c) { r.cells.push_back(c); });
  return r;
}

absl::StatusOr<Partition> Partition::Create(Shape shape, std::vector<Region> regions) {
  for (Region& r : regions) {
    if (!std::is_sorted(r.cells.begin(), r.cells.end())) r = Region::FromCells(std::move(r.cells));
  }
  auto index = BuildOwnerIndex(shape, regions, kRegionCells);
  if (!index.ok()) return index.status();
  return Partition(shape, std::move(regions), *std::move(index));
}

absl::StatusOr<Partition> Partition::FromRects(Shape shape, std::span<const Rect> rects) {
  std::vector<Region> regions;
  regions.reserve(rects.size());
  for (const Rect& r : rects) regions.push_back(r.ToRegion());
  return Create(shape, std::move(regions));
}

absl::StatusOr<Tiling> Tiling::Create(Shape shape, std::vector<Rect> tiles) {
  auto index = BuildOwnerIndex(shape, tiles, kRectCells);
  if (!index.ok()) return index.status();
  return Tiling(shape, std::move(tiles), *std::move(index));
}

absl::Status CheckPartition(std::span<const Region> regions, Shape shape) {
  return BuildOwnerIndex(shape, regions, kRegionCells).status();
}

absl::Status CheckTiling(std::span<const Rect> tiles, Shape shape) {
  return BuildOwnerIndex(shape, tiles, kRectCells).status();
}

Partition IdealPartition(const FunctionTable& table) {
  const Shape shape = table.shape();
  std::vector<Region> regions(table.distinct_labels().size());
  std::span<const std::uint32_t> ids = table.label_ids();
  for (std::uint64_t i = 0; i < ids.size(); ++i) regions[ids[i]].cells.push_back(shape.cell_at(i));
  return Partition(shape, std::move(regions), std::vector<std::uint32_t>(ids.begin(), ids.end()));
}

std::vector<Rect> IPartition(const Region& region, Party p) {
  std::vector<Rect> out;
  if (p == Party::kOne) {
    // Row-major order groups each row's cells together.
    std::size_t i = 0;
    while (i < region.cells.size()) {
      const std::uint32_t row = region.cells[i].x1;
      std::vector<std::uint32_t> cols;
      for (; i < region.cells.size() && region.cells[i].x1 == row; ++i) cols.push_back(region.cells[i].x2);
      out.push_back(Rect{ValueSet::Single(row), ValueSet::FromValues(cols)});
    }
    return out;
  }
  std::vector<Cell> by_col = region.cells;
  std::sort(by_col.begin(), by_col.end(),
            [](const Cell& a, const Cell& b) { return std::tie(a.x2, a.x1) < std::tie(b.x2, b.x1); });
  std::size_t i = 0;
  while (i < by_col.size()) {
    const std::uint32_t col = by_col[i].x2;
    std::vector<std::uint32_t> rows;
    for (; i < by_col.size() && by_col[i].x2 == col; ++i) rows.push_back(by_col[i].x1);
    out.push_back(Rect{ValueSet::FromValues(rows), ValueSet::Single(col)});
  }
  return out;
}

Partition IIdealPartition(const FunctionTable& table, Party p) {
  const Partition ideal = IdealPartition(table);
  std::vector<Rect> rects;
  for (const Region& r : ideal.regions()) {
    std::vector<Rect> slices = IPartition(r, p);
    rects.insert(rects.end(), slices.begin(), slices.end());
  }
  return *Partition::FromRects(table.shape(), rects);
}

Tiling IInducedTiling(const Tiling& tiling, Party p) {
  std::vector<Rect> out;
  for (const Rect& t : tiling.tiles()) {
    t.side(p).ForEach([&](std::uint32_t v) {
      if (p == Party::kOne) {
        out.push_back(Rect{ValueSet::Single(v), t.cols});
      } else {
        out.push_back(Rect{t.rows, ValueSet::Single(v)});
      }
    });
  }
  return *Tiling::Create(tiling.shape(), std::move(out));
}

bool IsMonochromatic(const Region& region, const FunctionTable& table) {
  if (region.cells.empty()) return false;
  for (const Cell& c : region.cells) {
    if (!table.shape().contains(c)) return false;
  }
  const std::uint32_t id = table.label_id(region.cells.front());
  return std::all_of(region.cells.begin(), region.cells.end(),
                     [&](const Cell& c) { return table.label_id(c) == id; });
}

bool IsMonochromatic(const Rect& rect, const FunctionTable& table) {
  if (rect.empty()) return false;
  if (rect.rows.max() >= table.shape().rows || rect.cols.max() >= table.shape().cols) return false;
  const std::uint32_t id = table.label_id(rect.first_cell());
  bool mono = true;
  rect.ForEachCell([&](const Cell& c) { mono = mono && table.label_id(c) == id; });
  return mono;
}

bool Refines(const Tiling& fine, const Partition& coarse) {
  if (!(fine.shape() == coarse.shape())) return false;
  for (const Rect& t : fine.tiles()) {
    const std::uint32_t id = coarse.region_of(t.first_cell());
    bool inside = true;
    t.ForEachCell([&](const Cell& c) { inside = inside && coarse.region_of(c) == id; });
    if (!inside) return false;
  }
  return true;
}

bool Refines(const Partition& fine, const Partition& coarse) {
  if (!(fine.shape() == coarse.shape())) return false;
  for (const Region& r : fine.regions()) {
    const std::uint32_t id = coarse.region_of(r.cells.front());
    for (const Cell& c : r.cells) {
      if (coarse.region_of(c) != id) return false;
    }
  }
  return true;
}

// Both sides cover the matrix with nonempty blocks, so refinement plus equal
// block counts forces a one-to-one match.
bool SameBlocks(const Tiling& tiling, const Partition& partition) {
  return tiling.size() == partition.size() && Refines(tiling, partition);
}

bool SameBlocks(const Partition& a, const Partition& b) { return a.size() == b.size() && Refines(a, b); }

}  // namespace parlab
