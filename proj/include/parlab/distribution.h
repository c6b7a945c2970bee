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

#ifndef PARLAB_DISTRIBUTION_H_
#define PARLAB_DISTRIBUTION_H_

#include <cstdint>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "absl/status/statusor.h"
#include "json.hpp"
#include "parlab/cell.h"
#include "parlab/partition.h"
#include "parlab/rational.h"

namespace parlab {

// Exact probability distribution over the cells of a matrix. Uniform and
// product distributions are kept in factored form so that rectangle masses
// cost O(rows + cols) instead of O(rows * cols).
class Distribution {
 public:
  enum class Kind { kUniform, kProduct, kTable };

  static Distribution Uniform(Shape shape);
  // Each factor is normalized separately; both must have positive sums.
  static absl::StatusOr<Distribution> Product(std::span<const Rational> row_weights,
                                              std::span<const Rational> col_weights);
  // Masses must be nonnegative and sum to exactly 1; unlisted cells get 0.
  static absl::StatusOr<Distribution> FromEntries(Shape shape,
                                                  std::span<const std::tuple<Cell, Rational>> entries);
  // Draws integer weights in [0, grid] for every cell and normalizes.
  static absl::StatusOr<Distribution> SeededRandom(Shape shape, std::uint64_t seed, std::uint32_t grid = 16);
  static absl::StatusOr<Distribution> PointMass(Shape shape, Cell cell);
  // weight * a + (1 - weight) * b, for weight in [0, 1].
  static absl::StatusOr<Distribution> Mixture(const Rational& weight, const Distribution& a, const Distribution& b);

  Kind kind() const { return kind_; }
  Shape shape() const { return shape_; }
  std::string Describe() const;

  Rational mass(const Cell& c) const;
  Rational Mass(const ValueSet& rows, const ValueSet& cols) const;
  Rational Mass(const Rect& rect) const { return Mass(rect.rows, rect.cols); }
  Rational Mass(std::span<const Cell> cells) const;

 private:
  Distribution(Kind kind, Shape shape) : kind_(kind), shape_(shape) {}

  Kind kind_;
  Shape shape_;
  std::vector<Rational> rows_;   // product factors
  std::vector<Rational> cols_;
  std::vector<Rational> cells_;  // dense table, row-major
};

// {"type":"uniform"} | {"type":"product","p1":[...],"p2":[...]} |
// {"type":"table","entries":[[x1,x2,"num/den"],...]}
absl::StatusOr<Distribution> DistributionFromJson(const nlohmann::json& doc, Shape shape);
nlohmann::json DistributionToJson(const Distribution& d);

}  // namespace parlab

#endif  // PARLAB_DISTRIBUTION_H_
