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

#include "parlab/measures.h"

#include <algorithm>
#include <cstdlib>
#include <utility>
#include <vector>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "parlab/status_macros.h"

namespace parlab {
namespace {

Rational AbsDiff(std::uint32_t a, std::uint32_t b) { return MakeRational(a > b ? a - b : b - a); }

std::vector<Cell> Slice(std::span<const Cell> block, const Cell& x, ParScope scope) {
  std::vector<Cell> out;
  for (const Cell& c : block) {
    if (scope == ParScope::kWrt1 && c.x1 != x.x1) continue;
    if (scope == ParScope::kWrt2 && c.x2 != x.x2) continue;
    out.push_back(c);
  }
  return out;
}

}  // namespace

absl::StatusOr<Distance> NamedDistance(absl::string_view name) {
  if (name == "discrete") return Distance([](const Cell& a, const Cell& b) { return Rational(a == b ? 0 : 1); });
  if (name == "l1") {
    return Distance(
        [](const Cell& a, const Cell& b) -> Rational { return AbsDiff(a.x1, b.x1) + AbsDiff(a.x2, b.x2); });
  }
  if (name == "linf") {
    return Distance(
        [](const Cell& a, const Cell& b) -> Rational { return std::max(AbsDiff(a.x1, b.x1), AbsDiff(a.x2, b.x2)); });
  }
  if (name == "row") return Distance([](const Cell& a, const Cell& b) { return AbsDiff(a.x1, b.x1); });
  if (name == "col") return Distance([](const Cell& a, const Cell& b) { return AbsDiff(a.x2, b.x2); });
  return absl::InvalidArgumentError(absl::StrCat("unknown distance '", name, "'"));
}

Measure CardinalityMeasure() {
  return Measure{"cardinality", [](std::span<const Cell> block, const Cell&) -> absl::StatusOr<Rational> {
                   return MakeRational(static_cast<std::int64_t>(block.size()));
                 }};
}

Measure ProbabilityMassMeasure(Distribution dist) {
  return Measure{"probability_mass",
                 [dist = std::move(dist)](std::span<const Cell> block, const Cell&) -> absl::StatusOr<Rational> {
                   return dist.Mass(block);
                 }};
}

Measure AdditiveDistanceMeasure(Distance d) {
  return Measure{"additive_distance",
                 [d = std::move(d)](std::span<const Cell> block, const Cell& x) -> absl::StatusOr<Rational> {
                   Rational total = 1;
                   for (const Cell& y : block) {
                     if (!(y == x)) total += d(x, y);
                   }
                   return total;
                 }};
}

Measure MaxDistanceMeasure(Distance d) {
  return Measure{"max_distance",
                 [d = std::move(d)](std::span<const Cell> block, const Cell& x) -> absl::StatusOr<Rational> {
                   Rational best = 0;
                   for (const Cell& y : block) {
                     if (!(y == x)) best = std::max(best, d(y, x));
                   }
                   return best + 1;
                 }};
}

absl::StatusOr<Measure> PlausibleDeniabilityMeasure(Distribution dist, Distance d, Rational threshold) {
  if (sgn(threshold) <= 0 || threshold > 1) {
    return absl::InvalidArgumentError(absl::StrCat("threshold ", FormatRational(threshold), " outside (0, 1]"));
  }
  return Measure{
      "plausible_deniability",
      [dist = std::move(dist), d = std::move(d), threshold = std::move(threshold)](
          std::span<const Cell> block, const Cell& x) -> absl::StatusOr<Rational> {
        const Rational total = dist.Mass(block);
        if (sgn(total) == 0) return absl::FailedPreconditionError("plausible deniability of a zero-mass block");
        // Sort cells by distance from x, farthest first, and grow the far set
        // until it carries the required share.
        std::vector<std::pair<Rational, Rational>> by_distance;
        for (const Cell& y : block) by_distance.emplace_back(d(x, y), dist.mass(y));
        std::sort(by_distance.begin(), by_distance.end(),
                  [](const auto& a, const auto& b) { return a.first > b.first; });
        Rational far = 0;
        for (std::size_t i = 0; i < by_distance.size(); ++i) {
          far += by_distance[i].second;
          const bool group_end = i + 1 == by_distance.size() || by_distance[i + 1].first != by_distance[i].first;
          if (group_end && far / total >= threshold) return by_distance[i].first + 1;
        }
        return Rational(1);
      }};
}

Measure RelativeDiameterMeasure(Distance d, std::function<Rational(const Cell&)> size_of) {
  if (!size_of) size_of = [](const Cell& x) { return MakeRational(1 + std::max(x.x1, x.x2)); };
  return Measure{"relative_diameter", [d = std::move(d), size_of = std::move(size_of)](
                                          std::span<const Cell> block, const Cell& x) -> absl::StatusOr<Rational> {
                   Rational diameter = 0;
                   for (std::size_t i = 0; i < block.size(); ++i) {
                     for (std::size_t j = i + 1; j < block.size(); ++j) {
                       diameter = std::max(diameter, d(block[i], block[j]));
                     }
                   }
                   const Rational size = size_of(x);
                   if (sgn(size) <= 0) return absl::FailedPreconditionError("size function must be positive");
                   return (diameter + 1) / size;
                 }};
}

absl::StatusOr<Measure> NamedMeasure(absl::string_view name, const Distribution& dist, const Distance& d,
                                     const Rational& threshold) {
  if (name == "cardinality") return CardinalityMeasure();
  if (name == "probability_mass") return ProbabilityMassMeasure(dist);
  if (name == "additive_distance") return AdditiveDistanceMeasure(d);
  if (name == "max_distance") return MaxDistanceMeasure(d);
  if (name == "plausible_deniability") return PlausibleDeniabilityMeasure(dist, d, threshold);
  if (name == "relative_diameter") return RelativeDiameterMeasure(d);
  return absl::InvalidArgumentError(absl::StrCat("unknown measure '", name, "'"));
}

absl::StatusOr<GeneralizedResult> GeneralizedPar(const Tiling& tiling, const Partition& ideal,
                                                 const Measure& measure, ParScope scope, Aggregate aggregate,
                                                 const Distribution& dist) {
  const Shape shape = tiling.shape();
  if (!(ideal.shape() == shape) || !(dist.shape() == shape)) {
    return absl::InvalidArgumentError("tiling, ideal partition and distribution shapes differ");
  }
  if (!Refines(tiling, ideal)) return absl::FailedPreconditionError("tiling does not refine the ideal partition");

  GeneralizedResult result;
  result.value = 0;
  bool have_worst = false;
  for (std::uint64_t i = 0; i < shape.cell_count(); ++i) {
    const Cell x = shape.cell_at(i);
    const Rational weight = dist.mass(x);
    if (sgn(weight) == 0) continue;
    const std::vector<Cell> ideal_block = Slice(ideal.region_containing(x).cells, x, scope);
    const Region tile = tiling.tiles()[tiling.tile_of(x)].ToRegion();
    const std::vector<Cell> tile_block = Slice(tile.cells, x, scope);
    auto num = measure.evaluate(ideal_block, x);
    auto den = measure.evaluate(tile_block, x);
    if (!num.ok()) return num.status();
    if (!den.ok()) return den.status();
    Rational ratio;
    if (sgn(*den) == 0) {
      if (sgn(*num) != 0) {
        result.unbounded = true;
        result.witness = x;
        continue;
      }
      ++result.zero_over_zero;
      ratio = 1;
    } else {
      ratio = *num / *den;
    }
    if (aggregate == Aggregate::kAverage) {
      result.value += weight * ratio;
    } else if (!have_worst || ratio > result.value) {
      have_worst = true;
      result.value = ratio;
      if (!result.unbounded) result.witness = x;
    }
  }
  return result;
}

}  // namespace parlab
