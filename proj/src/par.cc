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

#include "parlab/par.h"

#include <algorithm>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "parlab/status_macros.h"

namespace parlab {
namespace {

Rational Ratio(std::uint64_t num, std::uint64_t den) {
  Rational q(mpz_class(static_cast<unsigned long>(num)), mpz_class(static_cast<unsigned long>(den)));
  q.canonicalize();
  return q;
}

// Largest per-cell ratio inside one tile, as (ideal size, tile-side size).
struct TileMax {
  std::uint64_t num = 0;
  std::uint64_t den = 1;
  Cell at;
};

TileMax MaxInTile(const Rect& tile, const IdealReference& ideal, ParScope scope) {
  TileMax best;
  switch (scope) {
    case ParScope::kObjective: {
      const Cell c = tile.first_cell();
      return TileMax{ideal.region_size(c), tile.size(), c};
    }
    case ParScope::kWrt1:
      best.den = tile.cols.size();
      tile.rows.ForEach([&](std::uint32_t r) {
        const Cell c{r, tile.cols.min()};
        if (ideal.row_slice(c) > best.num) best = TileMax{ideal.row_slice(c), best.den, c};
      });
      return best;
    case ParScope::kWrt2:
      best.den = tile.rows.size();
      tile.cols.ForEach([&](std::uint32_t col) {
        const Cell c{tile.rows.min(), col};
        if (ideal.col_slice(c) > best.num) best = TileMax{ideal.col_slice(c), best.den, c};
      });
      return best;
  }
  return best;
}

}  // namespace

absl::string_view ScopeName(ParScope scope) {
  switch (scope) {
    case ParScope::kObjective:
      return "objective";
    case ParScope::kWrt1:
      return "wrt1";
    case ParScope::kWrt2:
      return "wrt2";
  }
  return "?";
}

absl::string_view ModeName(PrivacyMode mode) {
  switch (mode) {
    case PrivacyMode::kObjective:
      return "objective";
    case PrivacyMode::kWrt1:
      return "wrt1";
    case PrivacyMode::kWrt2:
      return "wrt2";
    case PrivacyMode::kSubjective:
      return "subjective";
  }
  return "?";
}

absl::StatusOr<PrivacyMode> ParseMode(absl::string_view text) {
  for (PrivacyMode m : {PrivacyMode::kObjective, PrivacyMode::kWrt1, PrivacyMode::kWrt2, PrivacyMode::kSubjective}) {
    if (text == ModeName(m)) return m;
  }
  return absl::InvalidArgumentError(absl::StrCat("unknown PAR mode '", text, "'"));
}

IdealReference::IdealReference(Shape shape, std::vector<std::uint32_t> ids, std::size_t region_count)
    : shape_(shape),
      ids_(std::move(ids)),
      sizes_(region_count, 0),
      row_slice_(shape.cell_count()),
      col_slice_(shape.cell_count()) {
  for (std::uint32_t id : ids_) ++sizes_[id];
  std::vector<std::uint32_t> count(region_count, 0);
  for (std::uint32_t r = 0; r < shape_.rows; ++r) {
    for (std::uint32_t c = 0; c < shape_.cols; ++c) ++count[region_id(Cell{r, c})];
    for (std::uint32_t c = 0; c < shape_.cols; ++c) row_slice_[shape_.index(Cell{r, c})] = count[region_id(Cell{r, c})];
    for (std::uint32_t c = 0; c < shape_.cols; ++c) count[region_id(Cell{r, c})] = 0;
  }
  for (std::uint32_t c = 0; c < shape_.cols; ++c) {
    for (std::uint32_t r = 0; r < shape_.rows; ++r) ++count[region_id(Cell{r, c})];
    for (std::uint32_t r = 0; r < shape_.rows; ++r) col_slice_[shape_.index(Cell{r, c})] = count[region_id(Cell{r, c})];
    for (std::uint32_t r = 0; r < shape_.rows; ++r) count[region_id(Cell{r, c})] = 0;
  }
}

IdealReference IdealReference::FromTable(const FunctionTable& table) {
  std::span<const std::uint32_t> ids = table.label_ids();
  return IdealReference(table.shape(), std::vector<std::uint32_t>(ids.begin(), ids.end()),
                        table.distinct_labels().size());
}

IdealReference IdealReference::FromPartition(const Partition& ideal) {
  std::vector<std::uint32_t> ids(ideal.shape().cell_count());
  for (std::uint64_t i = 0; i < ids.size(); ++i) ids[i] = ideal.region_of(ideal.shape().cell_at(i));
  return IdealReference(ideal.shape(), std::move(ids), ideal.size());
}

std::uint64_t IdealReference::ideal_size(ParScope scope, const Cell& c) const {
  switch (scope) {
    case ParScope::kObjective:
      return region_size(c);
    case ParScope::kWrt1:
      return row_slice(c);
    case ParScope::kWrt2:
      return col_slice(c);
  }
  return 0;
}

absl::Status IdealReference::CheckRefinedBy(const Tiling& tiling) const {
  if (!(tiling.shape() == shape_)) {
    return absl::InvalidArgumentError(absl::StrCat("tiling is ", tiling.shape().rows, "x", tiling.shape().cols,
                                                   ", ideal partition is ", shape_.rows, "x", shape_.cols));
  }
  for (const Rect& tile : tiling.tiles()) {
    const std::uint32_t id = region_id(tile.first_cell());
    bool same = true;
    tile.ForEachCell([&](const Cell& c) { same = same && region_id(c) == id; });
    if (!same) {
      return absl::FailedPreconditionError(absl::StrCat("tile ", tile.rows.ToString(), "x", tile.cols.ToString(),
                                                        " straddles ideal regions"));
    }
  }
  return absl::OkStatus();
}

absl::StatusOr<WorstCase> WorstCasePar(const Tiling& tiling, const IdealReference& ideal, ParScope scope) {
  PARLAB_RETURN_IF_ERROR(ideal.CheckRefinedBy(tiling));
  TileMax best{0, 1, Cell{}};
  for (const Rect& tile : tiling.tiles()) {
    const TileMax m = MaxInTile(tile, ideal, scope);
    if (m.num * best.den > best.num * m.den) best = m;
  }
  return WorstCase{Ratio(best.num, best.den), best.at};
}

absl::StatusOr<Rational> AveragePar(const Tiling& tiling, const IdealReference& ideal, ParScope scope,
                                    const Distribution& dist) {
  PARLAB_RETURN_IF_ERROR(ideal.CheckRefinedBy(tiling));
  if (!(dist.shape() == tiling.shape())) return absl::InvalidArgumentError("distribution shape mismatch");

  if (dist.kind() == Distribution::Kind::kUniform) {
    // Under the uniform distribution each tile (or tile slice) contributes
    // its ideal block size; the tile size cancels.
    std::uint64_t total = 0;
    for (const Rect& tile : tiling.tiles()) {
      switch (scope) {
        case ParScope::kObjective:
          total += ideal.region_size(tile.first_cell());
          break;
        case ParScope::kWrt1:
          tile.rows.ForEach([&](std::uint32_t r) { total += ideal.row_slice(Cell{r, tile.cols.min()}); });
          break;
        case ParScope::kWrt2:
          tile.cols.ForEach([&](std::uint32_t c) { total += ideal.col_slice(Cell{tile.rows.min(), c}); });
          break;
      }
    }
    return Ratio(total, tiling.shape().cell_count());
  }

  Rational total = 0;
  for (const Rect& tile : tiling.tiles()) {
    switch (scope) {
      case ParScope::kObjective:
        total += Ratio(ideal.region_size(tile.first_cell()), tile.size()) * dist.Mass(tile);
        break;
      case ParScope::kWrt1:
        tile.rows.ForEach([&](std::uint32_t r) {
          total += Ratio(ideal.row_slice(Cell{r, tile.cols.min()}), tile.cols.size()) *
                   dist.Mass(ValueSet::Single(r), tile.cols);
        });
        break;
      case ParScope::kWrt2:
        tile.cols.ForEach([&](std::uint32_t c) {
          total += Ratio(ideal.col_slice(Cell{tile.rows.min(), c}), tile.rows.size()) *
                   dist.Mass(tile.rows, ValueSet::Single(c));
        });
        break;
    }
  }
  return total;
}

const Rational& ParValues::get(PrivacyMode mode) const {
  switch (mode) {
    case PrivacyMode::kObjective:
      return objective;
    case PrivacyMode::kWrt1:
      return wrt1;
    case PrivacyMode::kWrt2:
      return wrt2;
    case PrivacyMode::kSubjective:
      return subjective;
  }
  return objective;
}

absl::StatusOr<ParReport> AnalyzeTiling(const Tiling& tiling, const IdealReference& ideal,
                                        const Distribution& dist) {
  ParReport report;
  report.tile_count = tiling.size();
  Rational* worst[] = {&report.worst.objective, &report.worst.wrt1, &report.worst.wrt2};
  Rational* average[] = {&report.average.objective, &report.average.wrt1, &report.average.wrt2};
  for (ParScope scope : {ParScope::kObjective, ParScope::kWrt1, ParScope::kWrt2}) {
    const int i = static_cast<int>(scope);
    PARLAB_ASSIGN_OR_RETURN(WorstCase w, WorstCasePar(tiling, ideal, scope));
    *worst[i] = w.value;
    report.worst_witness[i] = w.witness;
    PARLAB_ASSIGN_OR_RETURN(*average[i], AveragePar(tiling, ideal, scope, dist));
  }
  report.worst.subjective = std::max(report.worst.wrt1, report.worst.wrt2);
  report.average.subjective = std::max(report.average.wrt1, report.average.wrt2);
  return report;
}

bool IsPerfectlyPrivate(const Tiling& tiling, const FunctionTable& table, PrivacyMode mode) {
  switch (mode) {
    case PrivacyMode::kObjective:
      return SameBlocks(tiling, IdealPartition(table));
    case PrivacyMode::kWrt1:
      return SameBlocks(IInducedTiling(tiling, Party::kOne), IIdealPartition(table, Party::kOne));
    case PrivacyMode::kWrt2:
      return SameBlocks(IInducedTiling(tiling, Party::kTwo), IIdealPartition(table, Party::kTwo));
    case PrivacyMode::kSubjective:
      return IsPerfectlyPrivate(tiling, table, PrivacyMode::kWrt1) &&
             IsPerfectlyPrivate(tiling, table, PrivacyMode::kWrt2);
  }
  return false;
}

absl::StatusOr<AuctionTileCounts> CountAuctionTiles(const Tiling& tiling, const FunctionTable& table) {
  const IdealReference ideal = IdealReference::FromTable(table);
  PARLAB_RETURN_IF_ERROR(ideal.CheckRefinedBy(tiling));
  const Shape shape = tiling.shape();
  if (shape.rows != shape.cols) return absl::InvalidArgumentError("auction tile counts need a square matrix");
  const std::uint64_t n = shape.rows;
  AuctionTileCounts out;
  for (const Rect& tile : tiling.tiles()) {
    const OutcomeLabel& label = table.label(tile.first_cell());
    if (label.kind() != OutcomeLabel::Kind::kWinnerPrice) {
      return absl::InvalidArgumentError("auction tile counts need second-price labels");
    }
    const bool one_wins = label.winner() == 1;
    ++out.tiles;
    out.tile_deficit += n - ideal.region_size(tile.first_cell());
    tile.rows.ForEach([&](std::uint32_t r) {
      if (one_wins) {
        ++out.row_slices_one;
      } else {
        ++out.row_slices_two;
        out.row_deficit_two += n - ideal.row_slice(Cell{r, tile.cols.min()});
      }
    });
    tile.cols.ForEach([&](std::uint32_t c) {
      if (one_wins) {
        ++out.col_slices_one;
        out.col_deficit_one += n - ideal.col_slice(Cell{tile.rows.min(), c});
      } else {
        ++out.col_slices_two;
      }
    });
  }
  return out;
}

}  // namespace parlab
