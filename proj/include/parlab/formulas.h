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

#ifndef PARLAB_FORMULAS_H_
#define PARLAB_FORMULAS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "parlab/rational.h"

namespace parlab {

struct FormulaParams {
  std::optional<int> k = std::nullopt;
  std::optional<int> g = std::nullopt;
  std::optional<std::int64_t> c = std::nullopt;
  std::optional<int> n = std::nullopt;
};

// Closed-form values of the published results, by name; see FormulaNames().
absl::StatusOr<Rational> Formula(absl::string_view name, const FormulaParams& params);
std::vector<std::string> FormulaNames();

// Tile statistics of the bounded-bisection auction after `bisections`
// rounds with `rest` = k - bisections residual bits:
//   a  tiles               b  sum over tiles of 2^k - |ideal region|
//   x  row slices won by 2  y  their summed 2^k - |ideal row slice|
//   z  row slices won by 1
//   u  column slices won by 1  v  their summed 2^k - |ideal column slice|
//   w  column slices won by 2
enum class TileQuantity { kA, kB, kX, kY, kZ, kU, kV, kW };
inline constexpr TileQuantity kAllTileQuantities[] = {TileQuantity::kA, TileQuantity::kB, TileQuantity::kX,
                                                      TileQuantity::kY, TileQuantity::kZ, TileQuantity::kU,
                                                      TileQuantity::kV, TileQuantity::kW};
char TileQuantityLetter(TileQuantity q);

Rational TileCountClosedForm(TileQuantity q, int bisections, int rest);
// Same quantity obtained by iterating the quadrant recurrences from zero
// bisections.
Rational TileCountRecurrence(TileQuantity q, int bisections, int rest);

}  // namespace parlab

#endif  // PARLAB_FORMULAS_H_
