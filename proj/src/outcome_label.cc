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

#include "parlab/outcome_label.h"

#include "absl/status/status.h"
#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_split.h"
#include "absl/strings/strip.h"

namespace parlab {

std::string OutcomeLabel::ToString() const {
  switch (kind_) {
    case Kind::kWinner:
      return absl::StrCat("win:", a_);
    case Kind::kWinnerPrice:
      return absl::StrCat("win:", a_, "@", b_);
    case Kind::kDoNotBuild:
      return "dnb";
    case Kind::kBuild:
      return "build";
    case Kind::kBuildTransfer:
      return absl::StrCat("build:", a_, ",", b_);
    case Kind::kValue:
      return absl::StrCat("val:", a_);
  }
  return "?";
}

absl::StatusOr<OutcomeLabel> OutcomeLabel::Parse(absl::string_view text) {
  auto bad = [&] { return absl::InvalidArgumentError(absl::StrCat("bad outcome label '", text, "'")); };
  if (text == "dnb") return DoNotBuild();
  if (text == "build") return Build();
  absl::string_view rest = text;
  if (absl::ConsumePrefix(&rest, "win:")) {
    std::pair<absl::string_view, absl::string_view> parts = absl::StrSplit(rest, absl::MaxSplits('@', 1));
    int party = 0;
    if (!absl::SimpleAtoi(parts.first, &party) || (party != 1 && party != 2)) return bad();
    if (parts.second.empty() && rest.find('@') == absl::string_view::npos) return Winner(party);
    std::int64_t price = 0;
    if (!absl::SimpleAtoi(parts.second, &price)) return bad();
    return WinnerPrice(party, price);
  }
  if (absl::ConsumePrefix(&rest, "build:")) {
    std::pair<absl::string_view, absl::string_view> parts = absl::StrSplit(rest, absl::MaxSplits(',', 1));
    std::int64_t t1 = 0;
    std::int64_t t2 = 0;
    if (!absl::SimpleAtoi(parts.first, &t1) || !absl::SimpleAtoi(parts.second, &t2)) return bad();
    return BuildTransfer(t1, t2);
  }
  if (absl::ConsumePrefix(&rest, "val:")) {
    std::int64_t v = 0;
    if (!absl::SimpleAtoi(rest, &v)) return bad();
    return Value(v);
  }
  return bad();
}

}  // namespace parlab
