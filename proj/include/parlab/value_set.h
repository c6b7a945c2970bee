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

#ifndef PARLAB_VALUE_SET_H_
#define PARLAB_VALUE_SET_H_

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "absl/container/inlined_vector.h"

namespace parlab {

// Closed interval [lo, hi] of party values.
struct Interval {
  std::uint32_t lo = 0;
  std::uint32_t hi = 0;

  std::uint64_t size() const { return std::uint64_t{hi} - lo + 1; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

// A finite set of party values stored as sorted, disjoint, non-adjacent
// closed intervals. Nearly every candidate set a protocol produces is a
// handful of intervals, so rectangles over 2^k values stay small.
class ValueSet {
 public:
  ValueSet() = default;

  static ValueSet Range(std::uint32_t lo, std::uint32_t hi);  // [lo, hi]
  static ValueSet Single(std::uint32_t v) { return Range(v, v); }
  // Accepts values in any order; duplicates are collapsed.
  static ValueSet FromValues(std::span<const std::uint32_t> values);
  static ValueSet FromValues(std::initializer_list<std::uint32_t> values) {
    return FromValues(std::span<const std::uint32_t>(values.begin(), values.size()));
  }

  bool empty() const { return intervals_.empty(); }
  std::uint64_t size() const;
  bool contains(std::uint32_t v) const;
  std::uint32_t min() const { return intervals_.front().lo; }
  std::uint32_t max() const { return intervals_.back().hi; }
  std::span<const Interval> intervals() const { return {intervals_.data(), intervals_.size()}; }

  // Values in increasing order.
  std::vector<std::uint32_t> Values() const;

  template <typename F>
  void ForEach(F&& f) const {
    for (const Interval& iv : intervals_) {
      for (std::uint64_t v = iv.lo; v <= iv.hi; ++v) f(static_cast<std::uint32_t>(v));
    }
  }

  // The n-th smallest value (0-based); n < size().
  std::uint32_t Nth(std::uint64_t n) const;
  // Elements of rank < n, and the rest.
  ValueSet Prefix(std::uint64_t n) const;
  ValueSet Suffix(std::uint64_t n) const;

  ValueSet Union(const ValueSet& other) const;
  ValueSet Intersect(const ValueSet& other) const;
  ValueSet Minus(const ValueSet& other) const;
  bool Disjoint(const ValueSet& other) const { return Intersect(other).empty(); }
  bool SubsetOf(const ValueSet& other) const { return Minus(other).empty(); }
  // Image under v -> extent - 1 - v.
  ValueSet Reflect(std::uint32_t extent) const;

  std::string ToString() const;

  friend bool operator==(const ValueSet&, const ValueSet&) = default;

 private:
  void Append(std::uint32_t lo, std::uint32_t hi);

  absl::InlinedVector<Interval, 1> intervals_;
};

}  // namespace parlab

#endif  // PARLAB_VALUE_SET_H_
