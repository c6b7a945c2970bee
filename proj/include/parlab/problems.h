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

#ifndef PARLAB_PROBLEMS_H_
#define PARLAB_PROBLEMS_H_

#include <cstdint>
#include <optional>
#include <string>
#include "absl/strings/string_view.h"

#include "absl/status/statusor.h"
#include "parlab/cell.h"
#include "parlab/function_table.h"
#include "parlab/outcome_label.h"

namespace parlab {

enum class ProblemKind {
  kMillionaires,        // who holds the larger value; ties go to party 1
  kSecondPrice,         // winner plus the losing bid
  kPublicGood,          // build iff x1 + x2 >= 2^k - 1
  kTruthfulPublicGood,  // build iff x1 + x2 >= c, with truthful transfers
  kAppendixA,           // floor(x/2) on the lower half of rows, constant above
  kColumnIdentity,      // (n+1) x n matrix whose columns are the outcomes
};

// A problem instance: which function, its bit width and extra parameters.
class ProblemSpec {
 public:
  static absl::StatusOr<ProblemSpec> Millionaires(int k);
  static absl::StatusOr<ProblemSpec> SecondPrice(int k);
  static absl::StatusOr<ProblemSpec> PublicGood(int k);
  // Requires 0 <= c <= 2^k - 1.
  static absl::StatusOr<ProblemSpec> TruthfulPublicGood(int k, std::int64_t c);
  // Values range over 2^n per party; requires n >= 2.
  static absl::StatusOr<ProblemSpec> AppendixA(int n);
  // Rows 0..n, columns 0..n-1; requires n >= 1.
  static absl::StatusOr<ProblemSpec> ColumnIdentity(int n);

  // CLI syntax: millionaires|mp|2spa|pg|tpg:c=<int>|appxa:n=<int>|colid:n=<int>.
  // `k` is required by every problem except appxa and colid; appxa accepts a
  // k only when it equals n.
  static absl::StatusOr<ProblemSpec> Parse(absl::string_view text, std::optional<int> k);

  ProblemKind kind() const { return kind_; }
  int k() const { return k_; }
  std::int64_t c() const { return param_; }
  int n() const { return static_cast<int>(param_); }
  Shape shape() const;
  std::string name() const;

  // Output for an in-range cell. Out-of-range cells are a precondition
  // violation; use EvaluateChecked at API boundaries.
  OutcomeLabel Evaluate(const Cell& cell) const;
  absl::StatusOr<OutcomeLabel> EvaluateChecked(const Cell& cell) const;

 private:
  ProblemSpec(ProblemKind kind, int k, std::int64_t param) : kind_(kind), k_(k), param_(param) {}

  ProblemKind kind_;
  int k_;
  std::int64_t param_;
};

struct TableLimits {
  int max_k = 12;
};

// Reads PARLAB_KCAP when set, falling back to the default cap.
TableLimits TableLimitsFromEnv();

// Materializes A(f) for the problem. Fails when the problem's bit width
// exceeds the cap.
absl::StatusOr<FunctionTable> BuildTable(const ProblemSpec& problem, TableLimits limits = {});

absl::StatusOr<OutcomeLabel> MillionairesOutput(std::uint32_t x1, std::uint32_t x2, int k);
absl::StatusOr<OutcomeLabel> SecondPriceOutput(std::uint32_t x1, std::uint32_t x2, int k);
absl::StatusOr<OutcomeLabel> PublicGoodOutput(std::uint32_t x1, std::uint32_t x2, int k);
absl::StatusOr<OutcomeLabel> TruthfulPublicGoodOutput(std::uint32_t x1, std::uint32_t x2, int k,
                                                      std::int64_t c);
absl::StatusOr<OutcomeLabel> AppendixAOutput(std::uint32_t x, std::uint32_t y, int n);

// Column reflection x2 -> (2^k - 1) - x2 that turns the public-good problem
// into the millionaires problem. An involution.
Cell PgToMpMap(const Cell& cell, int k);

}  // namespace parlab

#endif  // PARLAB_PROBLEMS_H_
