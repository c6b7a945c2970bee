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

#ifndef PARLAB_FUNCTION_TABLE_H_
#define PARLAB_FUNCTION_TABLE_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "parlab/cell.h"
#include "parlab/outcome_label.h"

namespace parlab {

// The outcome matrix A(f): one label per cell over the full row x column
// grid. Labels are interned, so label ids double as ideal-region ids.
class FunctionTable {
 public:
  // `labels` is row-major and must hold exactly shape.cell_count() entries.
  static absl::StatusOr<FunctionTable> FromLabels(std::string name, Shape shape,
                                                  std::span<const OutcomeLabel> labels);

  const std::string& name() const { return name_; }
  Shape shape() const { return shape_; }

  const OutcomeLabel& label(const Cell& c) const { return distinct_[ids_[shape_.index(c)]]; }
  std::uint32_t label_id(const Cell& c) const { return ids_[shape_.index(c)]; }
  // Distinct labels in order of first appearance (row-major).
  std::span<const OutcomeLabel> distinct_labels() const { return distinct_; }
  std::span<const std::uint32_t> label_ids() const { return ids_; }

 private:
  FunctionTable(std::string name, Shape shape) : name_(std::move(name)), shape_(shape) {}

  std::string name_;
  Shape shape_;
  std::vector<OutcomeLabel> distinct_;
  std::vector<std::uint32_t> ids_;
};

}  // namespace parlab

#endif  // PARLAB_FUNCTION_TABLE_H_
