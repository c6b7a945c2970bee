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

#include "parlab/distribution.h"

#include <random>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "parlab/status_macros.h"

namespace parlab {
namespace {

using nlohmann::json;

absl::StatusOr<std::vector<Rational>> Normalize(std::span<const Rational> weights, absl::string_view what) {
  Rational total = 0;
  for (const Rational& w : weights) {
    if (sgn(w) < 0) return absl::InvalidArgumentError(absl::StrCat(what, " has a negative weight"));
    total += w;
  }
  if (sgn(total) == 0) return absl::InvalidArgumentError(absl::StrCat(what, " has zero total weight"));
  std::vector<Rational> out;
  out.reserve(weights.size());
  for (const Rational& w : weights) out.push_back(w / total);
  return out;
}

Rational SumOver(const std::vector<Rational>& factor, const ValueSet& values) {
  Rational total = 0;
  values.ForEach([&](std::uint32_t v) { total += factor[v]; });
  return total;
}

absl::StatusOr<std::vector<Rational>> ParseRationalList(const json& list, absl::string_view what) {
  if (!list.is_array()) return absl::InvalidArgumentError(absl::StrCat("\"", what, "\" must be an array"));
  std::vector<Rational> out;
  for (const json& v : list) {
    if (v.is_string()) {
      PARLAB_ASSIGN_OR_RETURN(Rational q, ParseRational(v.get<std::string>()));
      out.push_back(q);
    } else if (v.is_number_integer()) {
      out.push_back(MakeRational(v.get<std::int64_t>()));
    } else {
      return absl::InvalidArgumentError(absl::StrCat("bad rational ", v.dump()));
    }
  }
  return out;
}

}  // namespace

Distribution Distribution::Uniform(Shape shape) { return Distribution(Kind::kUniform, shape); }

absl::StatusOr<Distribution> Distribution::Product(std::span<const Rational> row_weights,
                                                   std::span<const Rational> col_weights) {
  if (row_weights.empty() || col_weights.empty()) return absl::InvalidArgumentError("empty product factor");
  Distribution d(Kind::kProduct, Shape{static_cast<std::uint32_t>(row_weights.size()),
                                       static_cast<std::uint32_t>(col_weights.size())});
  PARLAB_ASSIGN_OR_RETURN(d.rows_, Normalize(row_weights, "p1"));
  PARLAB_ASSIGN_OR_RETURN(d.cols_, Normalize(col_weights, "p2"));
  return d;
}

absl::StatusOr<Distribution> Distribution::FromEntries(Shape shape,
                                                       std::span<const std::tuple<Cell, Rational>> entries) {
  Distribution d(Kind::kTable, shape);
  d.cells_.assign(shape.cell_count(), Rational(0));
  Rational total = 0;
  for (const auto& [cell, q] : entries) {
    if (!shape.contains(cell)) return absl::OutOfRangeError(absl::StrCat("cell ", ToString(cell), " out of range"));
    if (sgn(q) < 0) return absl::InvalidArgumentError(absl::StrCat("negative mass at ", ToString(cell)));
    d.cells_[shape.index(cell)] += q;
    total += q;
  }
  if (total != 1) {
    return absl::InvalidArgumentError(absl::StrCat("masses sum to ", FormatRational(total), ", not 1"));
  }
  return d;
}

absl::StatusOr<Distribution> Distribution::SeededRandom(Shape shape, std::uint64_t seed, std::uint32_t grid) {
  if (grid == 0) return absl::InvalidArgumentError("grid must be positive");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> draw(0, grid);
  std::vector<std::uint32_t> weights(shape.cell_count());
  std::uint64_t total = 0;
  for (auto& w : weights) {
    w = draw(rng);
    total += w;
  }
  if (total == 0) {
    weights[0] = 1;
    total = 1;
  }
  Distribution d(Kind::kTable, shape);
  d.cells_.reserve(weights.size());
  const mpz_class denominator(static_cast<unsigned long>(total));
  for (std::uint32_t w : weights) {
    Rational q(mpz_class(w), denominator);
    q.canonicalize();
    d.cells_.push_back(std::move(q));
  }
  return d;
}

absl::StatusOr<Distribution> Distribution::PointMass(Shape shape, Cell cell) {
  const std::tuple<Cell, Rational> entry{cell, Rational(1)};
  return FromEntries(shape, std::span(&entry, 1));
}

absl::StatusOr<Distribution> Distribution::Mixture(const Rational& weight, const Distribution& a,
                                                   const Distribution& b) {
  if (!(a.shape() == b.shape())) return absl::InvalidArgumentError("mixture of distributions with different shapes");
  if (sgn(weight) < 0 || weight > 1) return absl::InvalidArgumentError("mixture weight outside [0, 1]");
  Distribution d(Kind::kTable, a.shape());
  d.cells_.reserve(a.shape().cell_count());
  const Rational rest = 1 - weight;
  for (std::uint64_t i = 0; i < a.shape().cell_count(); ++i) {
    const Cell c = a.shape().cell_at(i);
    d.cells_.push_back(weight * a.mass(c) + rest * b.mass(c));
  }
  return d;
}

std::string Distribution::Describe() const {
  switch (kind_) {
    case Kind::kUniform:
      return "uniform";
    case Kind::kProduct:
      return "product";
    case Kind::kTable:
      return "table";
  }
  return "?";
}

Rational Distribution::mass(const Cell& c) const {
  switch (kind_) {
    case Kind::kUniform:
      return Rational(mpz_class(1), mpz_class(static_cast<unsigned long>(shape_.cell_count())));
    case Kind::kProduct:
      return rows_[c.x1] * cols_[c.x2];
    case Kind::kTable:
      return cells_[shape_.index(c)];
  }
  return 0;
}

Rational Distribution::Mass(const ValueSet& rows, const ValueSet& cols) const {
  switch (kind_) {
    case Kind::kUniform: {
      Rational q(mpz_class(static_cast<unsigned long>(rows.size() * cols.size())),
                 mpz_class(static_cast<unsigned long>(shape_.cell_count())));
      q.canonicalize();
      return q;
    }
    case Kind::kProduct:
      return SumOver(rows_, rows) * SumOver(cols_, cols);
    case Kind::kTable: {
      Rational total = 0;
      rows.ForEach([&](std::uint32_t r) {
        cols.ForEach([&](std::uint32_t c) { total += cells_[shape_.index(Cell{r, c})]; });
      });
      return total;
    }
  }
  return 0;
}

Rational Distribution::Mass(std::span<const Cell> cells) const {
  if (kind_ == Kind::kUniform) {
    Rational q(mpz_class(static_cast<unsigned long>(cells.size())),
               mpz_class(static_cast<unsigned long>(shape_.cell_count())));
    q.canonicalize();
    return q;
  }
  Rational total = 0;
  for (const Cell& c : cells) total += mass(c);
  return total;
}

absl::StatusOr<Distribution> DistributionFromJson(const json& doc, Shape shape) {
  if (!doc.is_object() || !doc.contains("type") || !doc["type"].is_string()) {
    return absl::InvalidArgumentError("distribution needs a string \"type\"");
  }
  const std::string type = doc["type"].get<std::string>();
  if (type == "uniform") return Distribution::Uniform(shape);
  if (type == "product") {
    if (!doc.contains("p1") || !doc.contains("p2")) return absl::InvalidArgumentError("product needs p1 and p2");
    PARLAB_ASSIGN_OR_RETURN(std::vector<Rational> p1, ParseRationalList(doc["p1"], "p1"));
    PARLAB_ASSIGN_OR_RETURN(std::vector<Rational> p2, ParseRationalList(doc["p2"], "p2"));
    PARLAB_ASSIGN_OR_RETURN(Distribution d, Distribution::Product(p1, p2));
    if (!(d.shape() == shape)) {
      return absl::InvalidArgumentError(absl::StrCat("product factors have sizes ", p1.size(), "x", p2.size(),
                                                     ", matrix is ", shape.rows, "x", shape.cols));
    }
    return d;
  }
  if (type == "table") {
    if (!doc.contains("entries") || !doc["entries"].is_array()) {
      return absl::InvalidArgumentError("table needs an \"entries\" array");
    }
    std::vector<std::tuple<Cell, Rational>> entries;
    for (const json& e : doc["entries"]) {
      if (!e.is_array() || e.size() != 3 || !e[0].is_number_unsigned() || !e[1].is_number_unsigned()) {
        return absl::InvalidArgumentError(absl::StrCat("bad entry ", e.dump()));
      }
      PARLAB_ASSIGN_OR_RETURN(std::vector<Rational> q, ParseRationalList(json::array({e[2]}), "entry"));
      entries.emplace_back(Cell{e[0].get<std::uint32_t>(), e[1].get<std::uint32_t>()}, q[0]);
    }
    return Distribution::FromEntries(shape, entries);
  }
  return absl::InvalidArgumentError(absl::StrCat("unknown distribution type '", type, "'"));
}

json DistributionToJson(const Distribution& d) {
  switch (d.kind()) {
    case Distribution::Kind::kUniform:
      return json{{"type", "uniform"}};
    case Distribution::Kind::kProduct: {
      json p1 = json::array();
      json p2 = json::array();
      for (std::uint32_t r = 0; r < d.shape().rows; ++r) {
        p1.push_back(FormatRational(d.Mass(ValueSet::Single(r), ValueSet::Range(0, d.shape().cols - 1))));
      }
      for (std::uint32_t c = 0; c < d.shape().cols; ++c) {
        p2.push_back(FormatRational(d.Mass(ValueSet::Range(0, d.shape().rows - 1), ValueSet::Single(c))));
      }
      return json{{"type", "product"}, {"p1", p1}, {"p2", p2}};
    }
    case Distribution::Kind::kTable: {
      json entries = json::array();
      for (std::uint64_t i = 0; i < d.shape().cell_count(); ++i) {
        const Cell c = d.shape().cell_at(i);
        Rational q = d.mass(c);
        if (sgn(q) != 0) entries.push_back({c.x1, c.x2, FormatRational(q)});
      }
      return json{{"type", "table"}, {"entries", entries}};
    }
  }
  return json();
}

}  // namespace parlab
