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

#ifndef PARLAB_PAR_H_
#define PARLAB_PAR_H_

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "parlab/distribution.h"
#include "parlab/function_table.h"
#include "parlab/partition.h"
#include "parlab/rational.h"

namespace parlab {

// Which observer a ratio is taken for: an outsider (objective) or one of the
// parties, who already knows its own value.
enum class ParScope { kObjective, kWrt1, kWrt2 };
enum class PrivacyMode { kObjective, kWrt1, kWrt2, kSubjective };

absl::string_view ScopeName(ParScope scope);
absl::string_view ModeName(PrivacyMode mode);
absl::StatusOr<PrivacyMode> ParseMode(absl::string_view text);

// Per-cell sizes of the ideal blocks: the whole region, and its slices
// through the cell's row and column.
class IdealReference {
 public:
  static IdealReference FromTable(const FunctionTable& table);
  static IdealReference FromPartition(const Partition& ideal);

  Shape shape() const { return shape_; }
  std::uint32_t region_id(const Cell& c) const { return ids_[shape_.index(c)]; }
  std::uint64_t region_size(const Cell& c) const { return sizes_[region_id(c)]; }
  std::uint32_t row_slice(const Cell& c) const { return row_slice_[shape_.index(c)]; }
  std::uint32_t col_slice(const Cell& c) const { return col_slice_[shape_.index(c)]; }
  std::uint64_t ideal_size(ParScope scope, const Cell& c) const;

  // OK iff every tile lies inside one ideal region.
  absl::Status CheckRefinedBy(const Tiling& tiling) const;

 private:
  IdealReference(Shape shape, std::vector<std::uint32_t> ids, std::size_t region_count);

  Shape shape_;
  std::vector<std::uint32_t> ids_;
  std::vector<std::uint64_t> sizes_;
  std::vector<std::uint32_t> row_slice_;
  std::vector<std::uint32_t> col_slice_;
};

struct WorstCase {
  Rational value;
  Cell witness;  // a cell attaining the maximum
};

// Cardinality PARs. The tiling must refine the ideal partition.
absl::StatusOr<WorstCase> WorstCasePar(const Tiling& tiling, const IdealReference& ideal, ParScope scope);
absl::StatusOr<Rational> AveragePar(const Tiling& tiling, const IdealReference& ideal, ParScope scope,
                                    const Distribution& dist);

struct ParValues {
  Rational objective;
  Rational wrt1;
  Rational wrt2;
  Rational subjective;  // max(wrt1, wrt2)

  const Rational& get(PrivacyMode mode) const;
};

struct ParReport {
  ParValues worst;
  ParValues average;
  std::array<Cell, 3> worst_witness;  // indexed by ParScope
  std::uint64_t tile_count = 0;
};

absl::StatusOr<ParReport> AnalyzeTiling(const Tiling& tiling, const IdealReference& ideal,
                                        const Distribution& dist);

// Structural test: the induced blocks coincide with the ideal blocks.
bool IsPerfectlyPrivate(const Tiling& tiling, const FunctionTable& table, PrivacyMode mode);

// Tile statistics of a second-price auction tiling, in the quantities used
// by the closed-form tile counts. Ideal sizes are measured against the side
// length n of the matrix.
struct AuctionTileCounts {
  std::uint64_t tiles = 0;              // a: tiles
  std::uint64_t tile_deficit = 0;       // b: sum over tiles of n - |ideal region|
  std::uint64_t row_slices_two = 0;     // x: row slices won by party 2
  std::uint64_t row_deficit_two = 0;    // y: their summed n - |ideal row slice|
  std::uint64_t row_slices_one = 0;     // z: row slices won by party 1
  std::uint64_t col_slices_one = 0;     // u: column slices won by party 1
  std::uint64_t col_deficit_one = 0;    // v: their summed n - |ideal column slice|
  std::uint64_t col_slices_two = 0;     // w: column slices won by party 2
};
absl::StatusOr<AuctionTileCounts> CountAuctionTiles(const Tiling& tiling, const FunctionTable& table);

}  // namespace parlab

#endif  // PARLAB_PAR_H_
