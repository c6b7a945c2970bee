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

#ifndef PARLAB_MEASURES_H_
#define PARLAB_MEASURES_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "parlab/distribution.h"
#include "parlab/par.h"
#include "parlab/partition.h"
#include "parlab/rational.h"

namespace parlab {

using Distance = std::function<Rational(const Cell&, const Cell&)>;

// discrete (0 on equal cells, else 1), l1, linf, row (|x1 - y1|), col (|x2 - y2|).
absl::StatusOr<Distance> NamedDistance(absl::string_view name);

// A size function g(block, x) that replaces cardinality in the PAR ratio.
// Errors mean the value is undefined at this (block, cell) pair.
struct Measure {
  std::string name;
  std::function<absl::StatusOr<Rational>(std::span<const Cell> block, const Cell& x)> evaluate;
};

Measure CardinalityMeasure();
Measure ProbabilityMassMeasure(Distribution dist);
// 1 + sum of distances from x to the other cells of the block.
Measure AdditiveDistanceMeasure(Distance d);
// 1 + largest distance from x to another cell of the block (1 on singletons).
Measure MaxDistanceMeasure(Distance d);
// 1 + the largest radius r such that the cells at distance >= r from x
// carry at least a `threshold` share of the block's mass.
absl::StatusOr<Measure> PlausibleDeniabilityMeasure(Distribution dist, Distance d, Rational threshold);
// (1 + diameter of the block) / size_of(x); size_of defaults to 1 + max(x1, x2).
Measure RelativeDiameterMeasure(Distance d, std::function<Rational(const Cell&)> size_of = nullptr);

absl::StatusOr<Measure> NamedMeasure(absl::string_view name, const Distribution& dist, const Distance& d,
                                     const Rational& threshold);

enum class Aggregate { kWorst, kAverage };

struct GeneralizedResult {
  Rational value;
  bool unbounded = false;           // some positive-mass cell had ratio x/0 with x > 0
  std::uint64_t zero_over_zero = 0;  // cells whose ratio was 0/0, counted as 1
  std::optional<Cell> witness;      // worst case only
};

// Ratio g(ideal block of x, x) / g(tile block of x, x) aggregated over cells
// with positive mass. For the per-party scopes both blocks are cut down to
// the cells sharing x's value on that party's side.
absl::StatusOr<GeneralizedResult> GeneralizedPar(const Tiling& tiling, const Partition& ideal,
                                                 const Measure& measure, ParScope scope, Aggregate aggregate,
                                                 const Distribution& dist);

}  // namespace parlab

#endif  // PARLAB_MEASURES_H_
