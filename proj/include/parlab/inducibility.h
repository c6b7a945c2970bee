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

#ifndef PARLAB_INDUCIBILITY_H_
#define PARLAB_INDUCIBILITY_H_

#include <cstdint>
#include <vector>

#include "parlab/partition.h"

namespace parlab {

struct InducibilityVerdict {
  bool inducible = true;
  // Tile indices of the first block that no single message can split, i.e.
  // whose tiles are connected both through shared rows and shared columns.
  std::vector<std::uint32_t> blocking_tiles;
};

// A block of tiles can be produced by a protocol iff it is a single tile, or
// one party can split it: the tiles fall into several groups that share no
// rows (or no columns), and each group is again producible.
InducibilityVerdict CheckInducible(const Tiling& tiling);

inline bool IsProtocolInducible(const Tiling& tiling) { return CheckInducible(tiling).inducible; }

}  // namespace parlab

#endif  // PARLAB_INDUCIBILITY_H_
