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

#ifndef PARLAB_PROTOCOL_H_
#define PARLAB_PROTOCOL_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "absl/status/statusor.h"
#include "parlab/cell.h"
#include "parlab/function_table.h"
#include "parlab/outcome_label.h"
#include "parlab/partition.h"
#include "parlab/value_set.h"

namespace parlab {

// A node of a protocol tree. `rows` and `cols` are the candidate values every
// observer of the transcript so far still considers possible; `tag` is
// protocol-private phase information (e.g. rounds played).
struct ProtocolState {
  ValueSet rows;
  ValueSet cols;
  std::uint64_t tag = 0;

  Rect rect() const { return Rect{rows, cols}; }
  const ValueSet& side(Party p) const { return p == Party::kOne ? rows : cols; }
};

// The speaker announces one bit: 0 when its value lies in branch0, 1 when it
// lies in branch1. The branches must split the speaker's candidates into two
// nonempty parts.
struct Split {
  Party speaker = Party::kOne;
  ValueSet branch0;
  ValueSet branch1;
  std::uint64_t tag0 = 0;
  std::uint64_t tag1 = 0;
};

// Terminal node; every input reaching it gets `output`.
struct Leaf {
  OutcomeLabel output;
};

using Step = std::variant<Split, Leaf>;

// A deterministic two-party protocol, represented as a decision tree that is
// expanded on demand. Expansion must be a pure function of the state, so the
// tree never needs to be stored; explicit trees (e.g. parsed from JSON) keep
// their node index in the tag.
class Protocol {
 public:
  using Expander = std::function<Step(const ProtocolState&)>;

  Protocol(std::string name, Shape shape, Expander expand, std::uint64_t root_tag = 0)
      : name_(std::move(name)), shape_(shape), expand_(std::move(expand)), root_tag_(root_tag) {}

  const std::string& name() const { return name_; }
  Shape shape() const { return shape_; }

  ProtocolState root() const {
    return ProtocolState{ValueSet::Range(0, shape_.rows - 1), ValueSet::Range(0, shape_.cols - 1), root_tag_};
  }
  Step Expand(const ProtocolState& state) const { return expand_(state); }

  static ProtocolState Child(const ProtocolState& state, const Split& split, int bit);

 private:
  std::string name_;
  Shape shape_;
  Expander expand_;
  std::uint64_t root_tag_;
};

struct Transcript {
  std::vector<std::uint8_t> bits;  // decision bits; the output message is not counted
  OutcomeLabel output;
  Rect rect;  // the leaf rectangle containing the input
};

// Executes the protocol on one input pair. Fails when a split does not
// cover the speaker's value or does not shrink the candidates.
absl::StatusOr<Transcript> Run(const Protocol& protocol, std::uint32_t x1, std::uint32_t x2);

struct ValidationReport {
  bool ok = true;
  std::string message;
  std::optional<Cell> witness;     // offending cell, for output mismatches
  std::vector<std::uint8_t> path;  // bits leading to the offending node

  std::string ToString() const;
};

// Checks that every split partitions the speaker's candidates into two
// nonempty parts, and that every leaf rectangle is monochromatic in `table`
// with the leaf's output. Stops at the first violation.
ValidationReport ValidateProtocol(const Protocol& protocol, const FunctionTable& table);

// The tiling whose tiles are the leaf rectangles. Fails with the validation
// message when the protocol does not compute the table's function.
absl::StatusOr<Tiling> InducedTiling(const Protocol& protocol, const FunctionTable& table);

// Leaf rectangles in depth-first order, checking only split structure.
absl::StatusOr<std::vector<Rect>> LeafRects(const Protocol& protocol);

// Maximum number of decision bits over all inputs.
absl::StatusOr<int> CommunicationComplexity(const Protocol& protocol);

}  // namespace parlab

#endif  // PARLAB_PROTOCOL_H_
