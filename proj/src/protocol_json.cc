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

#include "parlab/protocol_json.h"

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "parlab/status_macros.h"
#include "parlab/tiling_json.h"

namespace parlab {
namespace {

using nlohmann::json;

struct TreeNode {
  bool leaf = false;
  Party speaker = Party::kOne;
  ValueSet branch0;
  ValueSet branch1;
  std::uint64_t child0 = 0;
  std::uint64_t child1 = 0;
  OutcomeLabel output = OutcomeLabel::Value(0);
};

class TreeEmitter {
 public:
  TreeEmitter(const Protocol& protocol, std::uint64_t max_nodes) : protocol_(protocol), max_nodes_(max_nodes) {}

  absl::StatusOr<json> Emit(const ProtocolState& state) {
    if (++emitted_ > max_nodes_) {
      return absl::ResourceExhaustedError(
          absl::StrCat("protocol '", protocol_.name(), "' has more than ", max_nodes_, " nodes"));
    }
    Step step = protocol_.Expand(state);
    if (const Leaf* leaf = std::get_if<Leaf>(&step)) return json{{"output", leaf->output.ToString()}};
    const Split& split = std::get<Split>(step);
    if (split.branch0.empty() || split.branch1.empty()) {
      return absl::FailedPreconditionError("cannot export a split with an empty branch");
    }
    json node = {{"speaker", PartyIndex(split.speaker)},
                 {"branch0", ValueSetToJson(split.branch0)},
                 {"branch1", ValueSetToJson(split.branch1)}};
    PARLAB_ASSIGN_OR_RETURN(node["child0"], Emit(Protocol::Child(state, split, 0)));
    PARLAB_ASSIGN_OR_RETURN(node["child1"], Emit(Protocol::Child(state, split, 1)));
    return node;
  }

 private:
  const Protocol& protocol_;
  std::uint64_t max_nodes_;
  std::uint64_t emitted_ = 0;
};

absl::Status ParseNode(const json& node, std::vector<TreeNode>* nodes) {
  if (!node.is_object()) return absl::InvalidArgumentError("protocol node must be an object");
  const std::size_t self = nodes->size();
  nodes->emplace_back();
  if (node.contains("output")) {
    if (!node["output"].is_string()) return absl::InvalidArgumentError("\"output\" must be a label string");
    PARLAB_ASSIGN_OR_RETURN(OutcomeLabel output, OutcomeLabel::Parse(node["output"].get<std::string>()));
    (*nodes)[self].leaf = true;
    (*nodes)[self].output = output;
    return absl::OkStatus();
  }
  for (const char* key : {"speaker", "branch0", "branch1", "child0", "child1"}) {
    if (!node.contains(key)) return absl::InvalidArgumentError(absl::StrCat("internal node lacks \"", key, "\""));
  }
  const json& speaker = node["speaker"];
  if (!speaker.is_number_integer() || (speaker.get<int>() != 1 && speaker.get<int>() != 2)) {
    return absl::InvalidArgumentError("\"speaker\" must be 1 or 2");
  }
  TreeNode parsed;
  parsed.speaker = speaker.get<int>() == 1 ? Party::kOne : Party::kTwo;
  PARLAB_ASSIGN_OR_RETURN(parsed.branch0, ValueSetFromJson(node["branch0"]));
  PARLAB_ASSIGN_OR_RETURN(parsed.branch1, ValueSetFromJson(node["branch1"]));
  parsed.child0 = nodes->size();
  PARLAB_RETURN_IF_ERROR(ParseNode(node["child0"], nodes));
  parsed.child1 = nodes->size();
  PARLAB_RETURN_IF_ERROR(ParseNode(node["child1"], nodes));
  (*nodes)[self] = std::move(parsed);
  return absl::OkStatus();
}

}  // namespace

absl::StatusOr<json> ProtocolToJson(const Protocol& protocol, std::uint64_t max_nodes) {
  TreeEmitter emitter(protocol, max_nodes);
  PARLAB_ASSIGN_OR_RETURN(json root, emitter.Emit(protocol.root()));
  json doc = ShapeToJson(protocol.shape(), json{{"name", protocol.name()}});
  doc["root"] = std::move(root);
  return doc;
}

absl::StatusOr<Protocol> ProtocolFromJson(const json& doc) {
  PARLAB_ASSIGN_OR_RETURN(Shape shape, ShapeFromJson(doc));
  if (!doc.contains("root")) return absl::InvalidArgumentError("protocol document lacks \"root\"");
  auto nodes = std::make_shared<std::vector<TreeNode>>();
  PARLAB_RETURN_IF_ERROR(ParseNode(doc["root"], nodes.get()));
  std::string name = doc.value("name", std::string("explicit"));
  auto expand = [nodes](const ProtocolState& state) -> Step {
    const TreeNode& node = (*nodes)[state.tag];
    if (node.leaf) return Leaf{node.output};
    return Split{node.speaker, node.branch0, node.branch1, node.child0, node.child1};
  };
  return Protocol(std::move(name), shape, std::move(expand));
}

}  // namespace parlab
