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

#include "parlab/problems.h"

#include <cstdlib>
#include <vector>

#include "absl/status/status.h"
#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/strip.h"
#include "parlab/status_macros.h"

namespace parlab {
namespace {

constexpr int kMaxBits = 30;

absl::Status CheckBits(int k) {
  if (k < 1 || k > kMaxBits) {
    return absl::InvalidArgumentError(absl::StrCat("bit width k=", k, " outside [1, ", kMaxBits, "]"));
  }
  return absl::OkStatus();
}

absl::Status CheckInputs(std::uint32_t x1, std::uint32_t x2, Shape shape) {
  if (!shape.contains(Cell{x1, x2})) {
    return absl::OutOfRangeError(absl::StrCat("input ", ToString(Cell{x1, x2}), " outside ",
                                              shape.rows, "x", shape.cols, " value space"));
  }
  return absl::OkStatus();
}

absl::StatusOr<std::int64_t> ParseParam(absl::string_view text, absl::string_view key) {
  absl::string_view rest = text;
  std::int64_t v = 0;
  if (!absl::ConsumePrefix(&rest, key) || !absl::ConsumePrefix(&rest, "=") || !absl::SimpleAtoi(rest, &v)) {
    return absl::InvalidArgumentError(absl::StrCat("expected '", key, "=<int>', got '", text, "'"));
  }
  return v;
}

}  // namespace

absl::StatusOr<ProblemSpec> ProblemSpec::Millionaires(int k) {
  PARLAB_RETURN_IF_ERROR(CheckBits(k));
  return ProblemSpec(ProblemKind::kMillionaires, k, 0);
}

absl::StatusOr<ProblemSpec> ProblemSpec::SecondPrice(int k) {
  PARLAB_RETURN_IF_ERROR(CheckBits(k));
  return ProblemSpec(ProblemKind::kSecondPrice, k, 0);
}

absl::StatusOr<ProblemSpec> ProblemSpec::PublicGood(int k) {
  PARLAB_RETURN_IF_ERROR(CheckBits(k));
  return ProblemSpec(ProblemKind::kPublicGood, k, 0);
}

absl::StatusOr<ProblemSpec> ProblemSpec::TruthfulPublicGood(int k, std::int64_t c) {
  PARLAB_RETURN_IF_ERROR(CheckBits(k));
  const std::int64_t top = (std::int64_t{1} << k) - 1;
  if (c < 0 || c > top) {
    return absl::InvalidArgumentError(absl::StrCat("tpg cost c=", c, " outside [0, ", top, "]"));
  }
  return ProblemSpec(ProblemKind::kTruthfulPublicGood, k, c);
}

absl::StatusOr<ProblemSpec> ProblemSpec::AppendixA(int n) {
  if (n < 2 || n > kMaxBits) {
    return absl::InvalidArgumentError(absl::StrCat("appxa requires 2 <= n <= ", kMaxBits, ", got ", n));
  }
  return ProblemSpec(ProblemKind::kAppendixA, n, n);
}

absl::StatusOr<ProblemSpec> ProblemSpec::ColumnIdentity(int n) {
  if (n < 1 || n > (1 << 15)) return absl::InvalidArgumentError(absl::StrCat("colid requires n >= 1, got ", n));
  return ProblemSpec(ProblemKind::kColumnIdentity, 0, n);
}

absl::StatusOr<ProblemSpec> ProblemSpec::Parse(absl::string_view text, std::optional<int> k) {
  absl::string_view rest = text;
  if (absl::ConsumePrefix(&rest, "appxa:")) {
    PARLAB_ASSIGN_OR_RETURN(std::int64_t n, ParseParam(rest, "n"));
    if (k.has_value() && *k != n) {
      return absl::InvalidArgumentError(absl::StrCat("appxa:n=", n, " fixes k=n; got k=", *k));
    }
    return AppendixA(static_cast<int>(n));
  }
  if (absl::ConsumePrefix(&rest, "colid:")) {
    PARLAB_ASSIGN_OR_RETURN(std::int64_t n, ParseParam(rest, "n"));
    if (k.has_value()) return absl::InvalidArgumentError("colid takes n, not k");
    return ColumnIdentity(static_cast<int>(n));
  }
  if (!k.has_value()) return absl::InvalidArgumentError(absl::StrCat("problem '", text, "' needs k"));
  if (text == "millionaires" || text == "mp") return Millionaires(*k);
  if (text == "2spa") return SecondPrice(*k);
  if (text == "pg") return PublicGood(*k);
  if (absl::ConsumePrefix(&rest, "tpg:")) {
    PARLAB_ASSIGN_OR_RETURN(std::int64_t c, ParseParam(rest, "c"));
    return TruthfulPublicGood(*k, c);
  }
  return absl::InvalidArgumentError(absl::StrCat("unknown problem '", text, "'"));
}

Shape ProblemSpec::shape() const {
  if (kind_ == ProblemKind::kColumnIdentity) {
    return Shape{static_cast<std::uint32_t>(param_ + 1), static_cast<std::uint32_t>(param_)};
  }
  return Shape::Square(k_);
}

std::string ProblemSpec::name() const {
  switch (kind_) {
    case ProblemKind::kMillionaires:
      return "millionaires";
    case ProblemKind::kSecondPrice:
      return "2spa";
    case ProblemKind::kPublicGood:
      return "pg";
    case ProblemKind::kTruthfulPublicGood:
      return absl::StrCat("tpg:c=", param_);
    case ProblemKind::kAppendixA:
      return absl::StrCat("appxa:n=", param_);
    case ProblemKind::kColumnIdentity:
      return absl::StrCat("colid:n=", param_);
  }
  return "?";
}

OutcomeLabel ProblemSpec::Evaluate(const Cell& cell) const {
  const std::int64_t x1 = cell.x1;
  const std::int64_t x2 = cell.x2;
  switch (kind_) {
    case ProblemKind::kMillionaires:
      return OutcomeLabel::Winner(x1 >= x2 ? 1 : 2);
    case ProblemKind::kSecondPrice:
      return x1 >= x2 ? OutcomeLabel::WinnerPrice(1, x2) : OutcomeLabel::WinnerPrice(2, x1);
    case ProblemKind::kPublicGood:
      return x1 + x2 >= (std::int64_t{1} << k_) - 1 ? OutcomeLabel::Build() : OutcomeLabel::DoNotBuild();
    case ProblemKind::kTruthfulPublicGood: {
      const std::int64_t c = param_;
      if (x1 + x2 < c) return OutcomeLabel::DoNotBuild();
      // Each transfer depends only on the other party's value.
      return OutcomeLabel::BuildTransfer(x2 < c ? c - x2 : 0, x1 < c ? c - x1 : 0);
    }
    case ProblemKind::kAppendixA: {
      const std::int64_t half = std::int64_t{1} << (param_ - 1);
      return OutcomeLabel::Value(x1 < half ? x1 / 2 : half / 2);
    }
    case ProblemKind::kColumnIdentity:
      return OutcomeLabel::Value(x2);
  }
  return OutcomeLabel::Value(0);
}

absl::StatusOr<OutcomeLabel> ProblemSpec::EvaluateChecked(const Cell& cell) const {
  PARLAB_RETURN_IF_ERROR(CheckInputs(cell.x1, cell.x2, shape()));
  return Evaluate(cell);
}

TableLimits TableLimitsFromEnv() {
  TableLimits limits;
  if (const char* env = std::getenv("PARLAB_KCAP"); env != nullptr) {
    int cap = 0;
    if (absl::SimpleAtoi(env, &cap) && cap >= 1) limits.max_k = cap;
  }
  return limits;
}

absl::StatusOr<FunctionTable> BuildTable(const ProblemSpec& problem, TableLimits limits) {
  const Shape shape = problem.shape();
  if (problem.k() > limits.max_k) {
    return absl::InvalidArgumentError(absl::StrCat("k=", problem.k(), " exceeds the table cap ",
                                                   limits.max_k, " (override with PARLAB_KCAP)"));
  }
  if (shape.cell_count() > (std::uint64_t{1} << (2 * limits.max_k))) {
    return absl::InvalidArgumentError("table exceeds the configured cell cap");
  }
  std::vector<OutcomeLabel> labels;
  labels.reserve(shape.cell_count());
  for (std::uint32_t x1 = 0; x1 < shape.rows; ++x1) {
    for (std::uint32_t x2 = 0; x2 < shape.cols; ++x2) labels.push_back(problem.Evaluate(Cell{x1, x2}));
  }
  return FunctionTable::FromLabels(problem.name(), shape, labels);
}

absl::StatusOr<OutcomeLabel> MillionairesOutput(std::uint32_t x1, std::uint32_t x2, int k) {
  PARLAB_ASSIGN_OR_RETURN(ProblemSpec p, ProblemSpec::Millionaires(k));
  return p.EvaluateChecked(Cell{x1, x2});
}

absl::StatusOr<OutcomeLabel> SecondPriceOutput(std::uint32_t x1, std::uint32_t x2, int k) {
  PARLAB_ASSIGN_OR_RETURN(ProblemSpec p, ProblemSpec::SecondPrice(k));
  return p.EvaluateChecked(Cell{x1, x2});
}

absl::StatusOr<OutcomeLabel> PublicGoodOutput(std::uint32_t x1, std::uint32_t x2, int k) {
  PARLAB_ASSIGN_OR_RETURN(ProblemSpec p, ProblemSpec::PublicGood(k));
  return p.EvaluateChecked(Cell{x1, x2});
}

absl::StatusOr<OutcomeLabel> TruthfulPublicGoodOutput(std::uint32_t x1, std::uint32_t x2, int k,
                                                      std::int64_t c) {
  PARLAB_ASSIGN_OR_RETURN(ProblemSpec p, ProblemSpec::TruthfulPublicGood(k, c));
  return p.EvaluateChecked(Cell{x1, x2});
}

absl::StatusOr<OutcomeLabel> AppendixAOutput(std::uint32_t x, std::uint32_t y, int n) {
  PARLAB_ASSIGN_OR_RETURN(ProblemSpec p, ProblemSpec::AppendixA(n));
  return p.EvaluateChecked(Cell{x, y});
}

Cell PgToMpMap(const Cell& cell, int k) {
  const std::uint32_t top = (std::uint32_t{1} << k) - 1;
  return Cell{cell.x1, top - cell.x2};
}

}  // namespace parlab
