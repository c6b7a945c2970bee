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

#include "parlab/protocol.h"

#include <algorithm>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"

namespace parlab {
namespace {

absl::Status CheckSplit(const ProtocolState& state, const Split& split) {
  const ValueSet& current = state.side(split.speaker);
  const int who = PartyIndex(split.speaker);
  if (split.branch0.empty() || split.branch1.empty()) {
    return absl::FailedPreconditionError(
        absl::StrCat("party ", who, " sends a constant bit: one branch is empty"));
  }
  if (!split.branch0.Disjoint(split.branch1)) {
    return absl::FailedPreconditionError(absl::StrCat("party ", who, "'s branches overlap"));
  }
  if (!(split.branch0.Union(split.branch1) == current)) {
    return absl::FailedPreconditionError(absl::StrCat("party ", who, "'s branches ",
                                                      split.branch0.ToString(), " | ", split.branch1.ToString(),
                                                      " do not cover its candidates ", current.ToString()));
  }
  return absl::OkStatus();
}

// Depth-first traversal over the expanded tree, child 0 before child 1.
// Stops at the first structural violation or the first non-OK status from
// `on_leaf`, recording the bit path to the offending node.
template <typename OnLeaf>
absl::Status Walk(const Protocol& protocol, OnLeaf&& on_leaf, std::vector<std::uint8_t>* fail_path) {
  struct Frame {
    ProtocolState state;
    int depth;
    int bit;
  };
  std::vector<Frame> stack;
  stack.push_back(Frame{protocol.root(), 0, -1});
  std::vector<std::uint8_t> path;
  while (!stack.empty()) {
    Frame frame = std::move(stack.back());
    stack.pop_back();
    if (frame.depth > 0) {
      path.resize(frame.depth - 1);
      path.push_back(static_cast<std::uint8_t>(frame.bit));
    } else {
      path.clear();
    }
    Step step = protocol.Expand(frame.state);
    absl::Status status;
    if (const Split* split = std::get_if<Split>(&step)) {
      status = CheckSplit(frame.state, *split);
      if (status.ok()) {
        stack.push_back(Frame{Protocol::Child(frame.state, *split, 1), frame.depth + 1, 1});
        stack.push_back(Frame{Protocol::Child(frame.state, *split, 0), frame.depth + 1, 0});
      }
    } else {
      status = on_leaf(frame.state, std::get<Leaf>(step), frame.depth);
    }
    if (!status.ok()) {
      if (fail_path != nullptr) *fail_path = path;
      return status;
    }
  }
  return absl::OkStatus();
}

std::string BitsToString(const std::vector<std::uint8_t>& bits) {
  return bits.empty() ? "<root>" : absl::StrJoin(bits, "");
}

}  // namespace

ProtocolState Protocol::Child(const ProtocolState& state, const Split& split, int bit) {
  ProtocolState child = state;
  const ValueSet& branch = bit == 0 ? split.branch0 : split.branch1;
  if (split.speaker == Party::kOne) {
    child.rows = branch;
  } else {
    child.cols = branch;
  }
  child.tag = bit == 0 ? split.tag0 : split.tag1;
  return child;
}

absl::StatusOr<Transcript> Run(const Protocol& protocol, std::uint32_t x1, std::uint32_t x2) {
  const Cell input{x1, x2};
  if (!protocol.shape().contains(input)) {
    return absl::OutOfRangeError(absl::StrCat("input ", ToString(input), " outside the protocol's value space"));
  }
  Transcript transcript{{}, OutcomeLabel::Value(0), Rect{}};
  ProtocolState state = protocol.root();
  while (true) {
    Step step = protocol.Expand(state);
    if (const Leaf* leaf = std::get_if<Leaf>(&step)) {
      transcript.output = leaf->output;
      transcript.rect = state.rect();
      return transcript;
    }
    const Split& split = std::get<Split>(step);
    const std::uint32_t value = input.coordinate(split.speaker);
    int bit;
    if (split.branch0.contains(value)) {
      bit = 0;
    } else if (split.branch1.contains(value)) {
      bit = 1;
    } else {
      return absl::FailedPreconditionError(absl::StrCat("malformed protocol: value ", value, " of party ",
                                                        PartyIndex(split.speaker), " is in neither branch after ",
                                                        BitsToString(transcript.bits)));
    }
    const ValueSet& current = state.side(split.speaker);
    const ValueSet& next = bit == 0 ? split.branch0 : split.branch1;
    if (next.size() >= current.size() || !next.SubsetOf(current)) {
      return absl::FailedPreconditionError(absl::StrCat("malformed protocol: bit after ",
                                                        BitsToString(transcript.bits),
                                                        " does not narrow party ", PartyIndex(split.speaker),
                                                        "'s candidates"));
    }
    transcript.bits.push_back(static_cast<std::uint8_t>(bit));
    state = Protocol::Child(state, split, bit);
  }
}

std::string ValidationReport::ToString() const {
  if (ok) return "ok";
  std::string out = absl::StrCat(message, " [path ", BitsToString(path), "]");
  if (witness.has_value()) absl::StrAppend(&out, " [cell ", parlab::ToString(*witness), "]");
  return out;
}

namespace {

// Validates and, when `tiles` is given, collects the leaf rectangles.
ValidationReport ValidateImpl(const Protocol& protocol, const FunctionTable& table, std::vector<Rect>* tiles) {
  ValidationReport report;
  if (!(protocol.shape() == table.shape())) {
    report.ok = false;
    report.message = absl::StrCat("protocol is over ", protocol.shape().rows, "x", protocol.shape().cols,
                                  " values but the table is ", table.shape().rows, "x", table.shape().cols);
    return report;
  }
  absl::Status status = Walk(
      protocol,
      [&](const ProtocolState& state, const Leaf& leaf, int) -> absl::Status {
        absl::Status cell_status;
        state.rect().ForEachCell([&](const Cell& c) {
          if (cell_status.ok() && !(table.label(c) == leaf.output)) {
            report.witness = c;
            cell_status = absl::FailedPreconditionError(
                absl::StrCat("leaf outputs ", leaf.output.ToString(), " but f", parlab::ToString(c), " = ",
                             table.label(c).ToString()));
          }
        });
        if (cell_status.ok() && tiles != nullptr) tiles->push_back(state.rect());
        return cell_status;
      },
      &report.path);
  if (!status.ok()) {
    report.ok = false;
    report.message = std::string(status.message());
  }
  return report;
}

}  // namespace

ValidationReport ValidateProtocol(const Protocol& protocol, const FunctionTable& table) {
  return ValidateImpl(protocol, table, nullptr);
}

absl::StatusOr<Tiling> InducedTiling(const Protocol& protocol, const FunctionTable& table) {
  std::vector<Rect> tiles;
  ValidationReport report = ValidateImpl(protocol, table, &tiles);
  if (!report.ok) {
    return absl::FailedPreconditionError(
        absl::StrCat("protocol ", protocol.name(), " does not compute ", table.name(), ": ", report.ToString()));
  }
  return Tiling::Create(table.shape(), std::move(tiles));
}

absl::StatusOr<std::vector<Rect>> LeafRects(const Protocol& protocol) {
  std::vector<Rect> out;
  absl::Status status = Walk(
      protocol,
      [&](const ProtocolState& state, const Leaf&, int) {
        out.push_back(state.rect());
        return absl::OkStatus();
      },
      nullptr);
  if (!status.ok()) return status;
  return out;
}

absl::StatusOr<int> CommunicationComplexity(const Protocol& protocol) {
  int deepest = 0;
  absl::Status status = Walk(
      protocol,
      [&](const ProtocolState&, const Leaf&, int depth) {
        deepest = std::max(deepest, depth);
        return absl::OkStatus();
      },
      nullptr);
  if (!status.ok()) return status;
  return deepest;
}

}  // namespace parlab
