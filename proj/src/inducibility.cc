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

#include "parlab/inducibility.h"

#include <algorithm>
#include <numeric>
#include <utility>

namespace parlab {
namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t Find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void Join(std::size_t a, std::size_t b) { parent_[Find(a)] = Find(b); }

 private:
  std::vector<std::size_t> parent_;
};

// Groups `block` (tile indices) into components whose tiles are linked by
// overlapping value sets on `party`'s side.
std::vector<std::vector<std::uint32_t>> Components(const Tiling& tiling, const std::vector<std::uint32_t>& block,
                                                   Party party) {
  struct Piece {
    Interval span;
    std::size_t member;
  };
  std::vector<Piece> pieces;
  for (std::size_t m = 0; m < block.size(); ++m) {
    for (const Interval& iv : tiling.tiles()[block[m]].side(party).intervals()) pieces.push_back({iv, m});
  }
  std::sort(pieces.begin(), pieces.end(), [](const Piece& a, const Piece& b) { return a.span.lo < b.span.lo; });

  DisjointSets sets(block.size());
  std::uint32_t reach = 0;
  std::size_t anchor = 0;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (i > 0 && pieces[i].span.lo <= reach) {
      sets.Join(pieces[i].member, anchor);
      reach = std::max(reach, pieces[i].span.hi);
    } else {
      anchor = pieces[i].member;
      reach = pieces[i].span.hi;
    }
  }

  std::vector<std::vector<std::uint32_t>> groups;
  std::vector<std::size_t> group_of(block.size(), SIZE_MAX);
  for (std::size_t m = 0; m < block.size(); ++m) {
    std::size_t& g = group_of[sets.Find(m)];
    if (g == SIZE_MAX) {
      g = groups.size();
      groups.emplace_back();
    }
    groups[g].push_back(block[m]);
  }
  return groups;
}

}  // namespace

InducibilityVerdict CheckInducible(const Tiling& tiling) {
  std::vector<std::uint32_t> all(tiling.size());
  std::iota(all.begin(), all.end(), 0);
  std::vector<std::vector<std::uint32_t>> pending;
  pending.push_back(std::move(all));
  while (!pending.empty()) {
    std::vector<std::uint32_t> block = std::move(pending.back());
    pending.pop_back();
    if (block.size() <= 1) continue;
    auto groups = Components(tiling, block, Party::kOne);
    if (groups.size() == 1) groups = Components(tiling, block, Party::kTwo);
    if (groups.size() == 1) return InducibilityVerdict{false, std::move(block)};
    for (auto& g : groups) pending.push_back(std::move(g));
  }
  return InducibilityVerdict{};
}

}  // namespace parlab
