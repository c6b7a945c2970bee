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

#include "parlab/value_set.h"

#include <algorithm>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"

namespace parlab {

ValueSet ValueSet::Range(std::uint32_t lo, std::uint32_t hi) {
  ValueSet s;
  if (lo <= hi) s.intervals_.push_back({lo, hi});
  return s;
}

ValueSet ValueSet::FromValues(std::span<const std::uint32_t> values) {
  std::vector<std::uint32_t> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  ValueSet s;
  for (std::uint32_t v : sorted) s.Append(v, v);
  return s;
}

// Appends [lo, hi]; callers feed intervals in increasing order of lo.
void ValueSet::Append(std::uint32_t lo, std::uint32_t hi) {
  if (!intervals_.empty() && std::uint64_t{intervals_.back().hi} + 1 >= lo) {
    intervals_.back().hi = std::max(intervals_.back().hi, hi);
    return;
  }
  intervals_.push_back({lo, hi});
}

std::uint64_t ValueSet::size() const {
  std::uint64_t n = 0;
  for (const Interval& iv : intervals_) n += iv.size();
  return n;
}

bool ValueSet::contains(std::uint32_t v) const {
  auto it = std::upper_bound(intervals_.begin(), intervals_.end(), v,
                             [](std::uint32_t x, const Interval& iv) { return x < iv.lo; });
  if (it == intervals_.begin()) return false;
  return v <= std::prev(it)->hi;
}

std::vector<std::uint32_t> ValueSet::Values() const {
  std::vector<std::uint32_t> out;
  out.reserve(size());
  ForEach([&](std::uint32_t v) { out.push_back(v); });
  return out;
}

std::uint32_t ValueSet::Nth(std::uint64_t n) const {
  for (const Interval& iv : intervals_) {
    if (n < iv.size()) return static_cast<std::uint32_t>(iv.lo + n);
    n -= iv.size();
  }
  return max();
}

ValueSet ValueSet::Prefix(std::uint64_t n) const {
  ValueSet s;
  for (const Interval& iv : intervals_) {
    if (n == 0) break;
    const std::uint64_t take = std::min(n, iv.size());
    s.intervals_.push_back({iv.lo, static_cast<std::uint32_t>(iv.lo + take - 1)});
    n -= take;
  }
  return s;
}

ValueSet ValueSet::Suffix(std::uint64_t n) const {
  ValueSet s;
  for (const Interval& iv : intervals_) {
    if (n >= iv.size()) {
      n -= iv.size();
      continue;
    }
    s.intervals_.push_back({static_cast<std::uint32_t>(iv.lo + n), iv.hi});
    n = 0;
  }
  return s;
}

ValueSet ValueSet::Union(const ValueSet& other) const {
  ValueSet s;
  auto a = intervals_.begin();
  auto b = other.intervals_.begin();
  while (a != intervals_.end() || b != other.intervals_.end()) {
    if (b == other.intervals_.end() || (a != intervals_.end() && a->lo <= b->lo)) {
      s.Append(a->lo, a->hi);
      ++a;
    } else {
      s.Append(b->lo, b->hi);
      ++b;
    }
  }
  return s;
}

ValueSet ValueSet::Intersect(const ValueSet& other) const {
  ValueSet s;
  auto a = intervals_.begin();
  auto b = other.intervals_.begin();
  while (a != intervals_.end() && b != other.intervals_.end()) {
    const std::uint32_t lo = std::max(a->lo, b->lo);
    const std::uint32_t hi = std::min(a->hi, b->hi);
    if (lo <= hi) s.Append(lo, hi);
    if (a->hi < b->hi) {
      ++a;
    } else {
      ++b;
    }
  }
  return s;
}

ValueSet ValueSet::Minus(const ValueSet& other) const {
  ValueSet s;
  auto b = other.intervals_.begin();
  for (const Interval& iv : intervals_) {
    std::uint64_t lo = iv.lo;
    while (b != other.intervals_.end() && b->hi < lo) ++b;
    auto c = b;
    while (lo <= iv.hi) {
      if (c == other.intervals_.end() || c->lo > iv.hi) {
        s.Append(static_cast<std::uint32_t>(lo), iv.hi);
        break;
      }
      if (c->lo > lo) s.Append(static_cast<std::uint32_t>(lo), c->lo - 1);
      lo = std::uint64_t{c->hi} + 1;
      ++c;
    }
  }
  return s;
}

ValueSet ValueSet::Reflect(std::uint32_t extent) const {
  ValueSet s;
  for (auto it = intervals_.rbegin(); it != intervals_.rend(); ++it) {
    s.Append(extent - 1 - it->hi, extent - 1 - it->lo);
  }
  return s;
}

std::string ValueSet::ToString() const {
  return absl::StrCat(
      "{",
      absl::StrJoin(intervals_, ",",
                    [](std::string* out, const Interval& iv) {
                      if (iv.lo == iv.hi) {
                        absl::StrAppend(out, iv.lo);
                      } else {
                        absl::StrAppend(out, iv.lo, "..", iv.hi);
                      }
                    }),
      "}");
}

}  // namespace parlab
