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

#include "parlab/function_table.h"

#include "absl/container/flat_hash_map.h"
#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace parlab {

absl::StatusOr<FunctionTable> FunctionTable::FromLabels(std::string name, Shape shape,
                                                        std::span<const OutcomeLabel> labels) {
  if (shape.rows == 0 || shape.cols == 0) {
    return absl::InvalidArgumentError("function table must have at least one row and column");
  }
  if (labels.size() != shape.cell_count()) {
    return absl::InvalidArgumentError(absl::StrCat("expected ", shape.cell_count(),
                                                   " labels, got ", labels.size()));
  }
  FunctionTable table(std::move(name), shape);
  absl::flat_hash_map<OutcomeLabel, std::uint32_t> intern;
  table.ids_.reserve(labels.size());
  for (const OutcomeLabel& l : labels) {
    auto [it, inserted] = intern.try_emplace(l, static_cast<std::uint32_t>(table.distinct_.size()));
    if (inserted) table.distinct_.push_back(l);
    table.ids_.push_back(it->second);
  }
  return table;
}

}  // namespace parlab
