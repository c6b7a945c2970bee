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

#include "parlab/tiling_json.h"

#include <bit>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "parlab/status_macros.h"

namespace parlab {

using nlohmann::json;

json ShapeToJson(Shape shape, json doc) {
  if (shape.rows == shape.cols && std::has_single_bit(shape.rows)) {
    doc["k"] = std::countr_zero(shape.rows);
  }
  doc["shape"] = {shape.rows, shape.cols};
  return doc;
}

absl::StatusOr<Shape> ShapeFromJson(const json& doc) {
  if (!doc.is_object()) return absl::InvalidArgumentError("expected a JSON object");
  if (doc.contains("shape")) {
    const json& s = doc["shape"];
    if (!s.is_array() || s.size() != 2 || !s[0].is_number_unsigned() || !s[1].is_number_unsigned()) {
      return absl::InvalidArgumentError("\"shape\" must be [rows, cols]");
    }
    Shape shape{s[0].get<std::uint32_t>(), s[1].get<std::uint32_t>()};
    if (shape.rows == 0 || shape.cols == 0) return absl::InvalidArgumentError("empty shape");
    return shape;
  }
  if (doc.contains("k")) {
    if (!doc["k"].is_number_integer()) return absl::InvalidArgumentError("\"k\" must be an integer");
    const int k = doc["k"].get<int>();
    if (k < 0 || k > 15) return absl::InvalidArgumentError(absl::StrCat("k=", k, " out of range"));
    return Shape::Square(k);
  }
  return absl::InvalidArgumentError("document needs \"k\" or \"shape\"");
}

json ValueSetToJson(const ValueSet& s) { return s.Values(); }

absl::StatusOr<ValueSet> ValueSetFromJson(const json& values) {
  if (!values.is_array()) return absl::InvalidArgumentError("expected an array of values");
  std::vector<std::uint32_t> out;
  out.reserve(values.size());
  for (const json& v : values) {
    if (!v.is_number_unsigned()) return absl::InvalidArgumentError(absl::StrCat("bad value ", v.dump()));
    out.push_back(v.get<std::uint32_t>());
  }
  return ValueSet::FromValues(out);
}

json TilingToJson(const Tiling& tiling) {
  json tiles = json::array();
  for (const Rect& t : tiling.tiles()) {
    tiles.push_back({{"rows", ValueSetToJson(t.rows)}, {"cols", ValueSetToJson(t.cols)}});
  }
  json doc = ShapeToJson(tiling.shape());
  doc["tiles"] = std::move(tiles);
  return doc;
}

absl::StatusOr<Tiling> TilingFromJson(const json& doc) {
  PARLAB_ASSIGN_OR_RETURN(Shape shape, ShapeFromJson(doc));
  if (!doc.contains("tiles") || !doc["tiles"].is_array()) {
    return absl::InvalidArgumentError("tiling needs a \"tiles\" array");
  }
  std::vector<Rect> tiles;
  for (const json& t : doc["tiles"]) {
    if (!t.is_object() || !t.contains("rows") || !t.contains("cols")) {
      return absl::InvalidArgumentError("each tile needs \"rows\" and \"cols\"");
    }
    Rect r;
    PARLAB_ASSIGN_OR_RETURN(r.rows, ValueSetFromJson(t["rows"]));
    PARLAB_ASSIGN_OR_RETURN(r.cols, ValueSetFromJson(t["cols"]));
    tiles.push_back(std::move(r));
  }
  return Tiling::Create(shape, std::move(tiles));
}

json PartitionToJson(const Partition& partition, const FunctionTable* table) {
  json regions = json::array();
  for (const Region& r : partition.regions()) {
    json cells = json::array();
    for (const Cell& c : r.cells) cells.push_back({c.x1, c.x2});
    json entry = {{"cells", std::move(cells)}};
    if (table != nullptr) entry["label"] = table->label(r.cells.front()).ToString();
    regions.push_back(std::move(entry));
  }
  json doc = ShapeToJson(partition.shape());
  doc["regions"] = std::move(regions);
  return doc;
}

absl::StatusOr<Partition> PartitionFromJson(const json& doc) {
  PARLAB_ASSIGN_OR_RETURN(Shape shape, ShapeFromJson(doc));
  if (!doc.contains("regions") || !doc["regions"].is_array()) {
    return absl::InvalidArgumentError("partition needs a \"regions\" array");
  }
  std::vector<Region> regions;
  for (const json& r : doc["regions"]) {
    if (!r.is_object() || !r.contains("cells") || !r["cells"].is_array()) {
      return absl::InvalidArgumentError("each region needs a \"cells\" array");
    }
    std::vector<Cell> cells;
    for (const json& c : r["cells"]) {
      if (!c.is_array() || c.size() != 2 || !c[0].is_number_unsigned() || !c[1].is_number_unsigned()) {
        return absl::InvalidArgumentError(absl::StrCat("bad cell ", c.dump()));
      }
      cells.push_back(Cell{c[0].get<std::uint32_t>(), c[1].get<std::uint32_t>()});
    }
    regions.push_back(Region::FromCells(std::move(cells)));
  }
  return Partition::Create(shape, std::move(regions));
}

json TableToJson(const FunctionTable& table) {
  const Shape shape = table.shape();
  json rows = json::array();
  for (std::uint32_t x1 = 0; x1 < shape.rows; ++x1) {
    json row = json::array();
    for (std::uint32_t x2 = 0; x2 < shape.cols; ++x2) row.push_back(table.label(Cell{x1, x2}).ToString());
    rows.push_back(std::move(row));
  }
  json doc = ShapeToJson(shape, {{"name", table.name()}});
  doc["labels"] = std::move(rows);
  return doc;
}

absl::StatusOr<FunctionTable> TableFromJson(const json& doc) {
  PARLAB_ASSIGN_OR_RETURN(Shape shape, ShapeFromJson(doc));
  if (!doc.contains("labels") || !doc["labels"].is_array() || doc["labels"].size() != shape.rows) {
    return absl::InvalidArgumentError("table needs one \"labels\" row per matrix row");
  }
  std::vector<OutcomeLabel> labels;
  labels.reserve(shape.cell_count());
  for (const json& row : doc["labels"]) {
    if (!row.is_array() || row.size() != shape.cols) {
      return absl::InvalidArgumentError("every label row needs one entry per column");
    }
    for (const json& l : row) {
      if (!l.is_string()) return absl::InvalidArgumentError("labels must be tagged strings");
      PARLAB_ASSIGN_OR_RETURN(OutcomeLabel label, OutcomeLabel::Parse(l.get<std::string>()));
      labels.push_back(label);
    }
  }
  return FunctionTable::FromLabels(doc.value("name", std::string("custom")), shape, labels);
}

}  // namespace parlab
