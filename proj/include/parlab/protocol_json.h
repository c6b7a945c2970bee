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

#ifndef PARLAB_PROTOCOL_JSON_H_
#define PARLAB_PROTOCOL_JSON_H_

#include <cstdint>

#include "absl/status/statusor.h"
#include "json.hpp"
#include "parlab/protocol.h"

namespace parlab {

// Protocol trees as JSON. Internal nodes:
//   {"speaker": 1|2, "branch0": [...], "branch1": [...], "child0": {...}, "child1": {...}}
// Leaves: {"output": "<label>"}. The document wraps the root with the
// matrix shape: {"name": ..., "k": ..., "shape": [r, c], "root": {...}}.

// Expands `protocol` into an explicit tree. Fails once more than
// `max_nodes` nodes would be emitted.
absl::StatusOr<nlohmann::json> ProtocolToJson(const Protocol& protocol, std::uint64_t max_nodes = 1u << 22);

// Builds a protocol backed by the explicit tree in `doc`. Structural checks
// (disjoint, covering branches) are left to ValidateProtocol so that
// malformed trees can still be loaded and diagnosed.
absl::StatusOr<Protocol> ProtocolFromJson(const nlohmann::json& doc);

}  // namespace parlab

#endif  // PARLAB_PROTOCOL_JSON_H_
