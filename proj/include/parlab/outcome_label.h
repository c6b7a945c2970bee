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

#ifndef PARLAB_OUTCOME_LABEL_H_
#define PARLAB_OUTCOME_LABEL_H_

#include <cstdint>
#include <string>
#include "absl/strings/string_view.h"

#include "absl/status/statusor.h"

namespace parlab {

// The value a two-party function assigns to one input pair. Labels compare
// structurally; no ordering between labels is meaningful.
class OutcomeLabel {
 public:
  enum class Kind : std::uint8_t {
    kWinner,          // millionaires: identity of the richer party
    kWinnerPrice,     // second-price auction: winner and the losing bid
    kDoNotBuild,      // public good, either variant
    kBuild,           // public good without transfers
    kBuildTransfer,   // truthful public good: build with payments (t1, t2)
    kValue,           // plain integer output
  };

  static OutcomeLabel Winner(int party) { return {Kind::kWinner, party, 0}; }
  static OutcomeLabel WinnerPrice(int party, std::int64_t price) {
    return {Kind::kWinnerPrice, party, price};
  }
  static OutcomeLabel DoNotBuild() { return {Kind::kDoNotBuild, 0, 0}; }
  static OutcomeLabel Build() { return {Kind::kBuild, 0, 0}; }
  static OutcomeLabel BuildTransfer(std::int64_t t1, std::int64_t t2) {
    return {Kind::kBuildTransfer, t1, t2};
  }
  static OutcomeLabel Value(std::int64_t v) { return {Kind::kValue, v, 0}; }

  // Tagged text form: "win:1", "win:2@3", "dnb", "build", "build:2,2", "val:5".
  static absl::StatusOr<OutcomeLabel> Parse(absl::string_view text);
  std::string ToString() const;

  Kind kind() const { return kind_; }
  // Winner id for kWinner/kWinnerPrice.
  int winner() const { return static_cast<int>(a_); }
  std::int64_t price() const { return b_; }
  std::int64_t t1() const { return a_; }
  std::int64_t t2() const { return b_; }
  std::int64_t value() const { return a_; }

  friend bool operator==(const OutcomeLabel&, const OutcomeLabel&) = default;

  template <typename H>
  friend H AbslHashValue(H h, const OutcomeLabel& l) {
    return H::combine(std::move(h), l.kind_, l.a_, l.b_);
  }

 private:
  OutcomeLabel(Kind kind, std::int64_t a, std::int64_t b) : kind_(kind), a_(a), b_(b) {}

  Kind kind_;
  std::int64_t a_;
  std::int64_t b_;
};

}  // namespace parlab

#endif  // PARLAB_OUTCOME_LABEL_H_
