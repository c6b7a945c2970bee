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

#ifndef PARLAB_TILING_JSON_H_
#define PARLAB_TILING_JSON_H_

#include "absl/status/statusor.h"
#include "json.hpp"
#include "parlab/function_table.h"
#include "parlab/partition.h"

namespace parlab {

// JSON documents for tables, partitions and tilings. The matrix size is
// written as "k" (2^k x 2^k) when it is a square power of two and always as
// "shape": [rows, cols]; readers accept either. Values are explicit lists.
//
//   tiling:    {"k":3, "shape":[8,8], "tiles":[{"rows":[..],"cols":[..]}, ...]}
//   partition: {"shape":[..], "regions":[{"label":"win:1","cells":[[x1,x2],..]}, ...]}
//   table:     {"name":"2spa", "shape":[..], "labels":[["win:1", ...], ...]}
nlohmann::json TilingToJson(const Tiling& tiling);
absl::StatusOr<Tiling> TilingFromJson(const nlohmann::json& doc);

// Region labels are written when `table` is given.
nlohmann::json PartitionToJson(const Partition& partition, const FunctionTable* table = nullptr);
absl::StatusOr<Partition> PartitionFromJson(const nlohmann::json& doc);

nlohmann::json TableToJson(const FunctionTable& table);
absl::StatusOr<FunctionTable> TableFromJson(const nlohmann::json& doc);

nlohmann::json ShapeToJson(Shape shape, nlohmann::json doc = nlohmann::json::object());
absl::StatusOr<Shape> ShapeFromJson(const nlohmann::json& doc);
nlohmann::json ValueSetToJson(const ValueSet& s);
absl::StatusOr<ValueSet> ValueSetFromJson(const nlohmann::json& values);

}  // namespace parlab

#endif  // PARLAB_TILING_JSON_H_
