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


#include <cstdint>

#include "gtest/gtest.h"
#include "parlab/outcome_label.h"
#include "parlab/problems.h"

namespace parlab {
namespace {

OutcomeLabel Ok(absl::StatusOr<OutcomeLabel> l) {
  EXPECT_TRUE(l.ok()) << l.status();
  return l.ok() ? *l : OutcomeLabel::Value(-1);
}

TEST(Millionaires, Examples) {
  EXPECT_EQ(Ok(MillionairesOutput(0, 0, 3)), OutcomeLabel::Winner(1));
  EXPECT_EQ(Ok(MillionairesOutput(3, 6, 3)), OutcomeLabel::Winner(2));
  EXPECT_EQ(Ok(MillionairesOutput(6, 3, 3)), OutcomeLabel::Winner(1));
  EXPECT_FALSE(MillionairesOutput(8, 0, 3).ok());
}

TEST(SecondPrice, Examples) {
  EXPECT_EQ(Ok(SecondPriceOutput(3, 6, 3)), OutcomeLabel::WinnerPrice(2, 3));
  EXPECT_EQ(Ok(SecondPriceOutput(7, 7, 3)), OutcomeLabel::WinnerPrice(1, 7));
  EXPECT_EQ(Ok(SecondPriceOutput(5, 0, 3)), OutcomeLabel::WinnerPrice(1, 0));
  EXPECT_FALSE(SecondPriceOutput(0, 8, 3).ok());
}

TEST(PublicGood, Examples) {
  EXPECT_EQ(Ok(PublicGoodOutput(1, 2, 2)), OutcomeLabel::Build());
  EXPECT_EQ(Ok(PublicGoodOutput(1, 1, 2)), OutcomeLabel::DoNotBuild());
  EXPECT_EQ(Ok(PublicGoodOutput(3, 3, 2)), OutcomeLabel::Build());
  EXPECT_FALSE(PublicGoodOutput(4, 0, 2).ok());
}

TEST(TruthfulPublicGood, Examples) {
  EXPECT_EQ(Ok(TruthfulPublicGoodOutput(3, 0, 3, 4)), OutcomeLabel::DoNotBuild());
  // x1 + x2 = c builds.
  EXPECT_EQ(Ok(TruthfulPublicGoodOutput(3, 1, 3, 4)), OutcomeLabel::BuildTransfer(3, 1));
  EXPECT_EQ(Ok(TruthfulPublicGoodOutput(2, 2, 3, 4)), OutcomeLabel::BuildTransfer(2, 2));
  EXPECT_EQ(Ok(TruthfulPublicGoodOutput(5, 6, 3, 4)), OutcomeLabel::BuildTransfer(0, 0));
  // One transfer positive, the other zero.
  EXPECT_EQ(Ok(TruthfulPublicGoodOutput(1, 5, 3, 4)), OutcomeLabel::BuildTransfer(0, 3));
  EXPECT_FALSE(TruthfulPublicGoodOutput(0, 0, 3, 8).ok());
  EXPECT_FALSE(TruthfulPublicGoodOutput(0, 0, 3, -1).ok());
  EXPECT_FALSE(ProblemSpec::TruthfulPublicGood(3, 8).ok());
  EXPECT_TRUE(ProblemSpec::TruthfulPublicGood(3, 0).ok());
}

TEST(AppendixA, Examples) {
  for (std::uint32_t y = 0; y < 8; ++y) {
    EXPECT_EQ(Ok(AppendixAOutput(3, y, 3)), OutcomeLabel::Value(1));
    EXPECT_EQ(Ok(AppendixAOutput(5, y, 3)), OutcomeLabel::Value(2));
    EXPECT_EQ(Ok(AppendixAOutput(0, y, 3)), OutcomeLabel::Value(0));
  }
  EXPECT_FALSE(ProblemSpec::AppendixA(1).ok());
}

TEST(PgToMp, Examples) {
  EXPECT_EQ(PgToMpMap({5, 2}, 3), (Cell{5, 5}));
  EXPECT_EQ(PgToMpMap({0, 7}, 3), (Cell{0, 0}));
  for (std::uint32_t r = 0; r < 8; ++r) {
    for (std::uint32_t c = 0; c < 8; ++c) EXPECT_EQ(PgToMpMap(PgToMpMap({r, c}, 3), 3), (Cell{r, c}));
  }
}

TEST(Invariants, PublicGoodIsReflectedMillionaires) {
  for (int k = 1; k <= 8; ++k) {
    const std::uint32_t n = 1u << k;
    for (std::uint32_t r = 0; r < n; ++r) {
      for (std::uint32_t c = 0; c < n; ++c) {
        const bool build = Ok(PublicGoodOutput(r, c, k)) == OutcomeLabel::Build();
        const Cell m = PgToMpMap({r, c}, k);
        const bool one = Ok(MillionairesOutput(m.x1, m.x2, k)) == OutcomeLabel::Winner(1);
        ASSERT_EQ(build, one) << "k=" << k << " (" << r << "," << c << ")";
      }
    }
  }
}

TEST(Invariants, SecondPriceWinnerIsMillionairesWinner) {
  for (int k = 1; k <= 6; ++k) {
    const std::uint32_t n = 1u << k;
    for (std::uint32_t r = 0; r < n; ++r) {
      for (std::uint32_t c = 0; c < n; ++c) {
        EXPECT_EQ(Ok(SecondPriceOutput(r, c, k)).winner(), Ok(MillionairesOutput(r, c, k)).winner());
      }
    }
  }
}

TEST(Invariants, AppendixAIgnoresColumn) {
  for (int n = 2; n <= 6; ++n) {
    const std::uint32_t size = 1u << n;
    for (std::uint32_t x = 0; x < size; ++x) {
      const OutcomeLabel first = Ok(AppendixAOutput(x, 0, n));
      for (std::uint32_t y = 1; y < size; ++y) EXPECT_EQ(Ok(AppendixAOutput(x, y, n)), first);
    }
  }
}

TEST(ProblemSpec, ParseNames) {
  for (absl::string_view name : {"millionaires", "mp", "2spa", "pg", "tpg:c=3"}) {
    auto p = ProblemSpec::Parse(name, 3);
    ASSERT_TRUE(p.ok()) << name << ": " << p.status();
    EXPECT_EQ(p->shape(), Shape::Square(3));
  }
  auto a = ProblemSpec::Parse("appxa:n=4", std::nullopt);
  ASSERT_TRUE(a.ok());
  EXPECT_EQ(a->shape(), Shape::Square(4));
  EXPECT_FALSE(ProblemSpec::Parse("appxa:n=4", 3).ok());
  auto col = ProblemSpec::Parse("colid:n=4", std::nullopt);
  ASSERT_TRUE(col.ok());
  EXPECT_EQ(col->shape(), (Shape{5, 4}));
  EXPECT_FALSE(ProblemSpec::Parse("mp", std::nullopt).ok());
  EXPECT_FALSE(ProblemSpec::Parse("tpg", 3).ok());
  EXPECT_FALSE(ProblemSpec::Parse("tpg:c=x", 3).ok());
  EXPECT_FALSE(ProblemSpec::Parse("tpg:c=9", 3).ok());
  EXPECT_FALSE(ProblemSpec::Parse("2spa", 0).ok());
}

}  // namespace
}  // namespace parlab
