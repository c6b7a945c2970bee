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

#ifndef PARLAB_REPORT_H_
#define PARLAB_REPORT_H_

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "json.hpp"
#include "parlab/rational.h"

namespace parlab {

using ReportValue = std::variant<std::string, std::int64_t, bool, Rational>;

struct ReportRow {
  std::vector<std::pair<std::string, ReportValue>> fields;

  ReportRow& Set(std::string name, ReportValue value);
  const ReportValue* Find(const std::string& name) const;
};

// Output of one CLI command: the configuration that produced it, a table of
// rows, and the verdicts of any exact-equality checks.
class ReportDocument {
 public:
  ReportDocument(std::string command, nlohmann::json config)
      : command_(std::move(command)), config_(std::move(config)) {}

  ReportRow& AddRow() { return rows_.emplace_back(); }
  void AddCheck(bool passed, const std::string& description);
  void SetSummary(std::string name, ReportValue value) { summary_.Set(std::move(name), std::move(value)); }
  void set_runtime_seconds(double s) { runtime_seconds_ = s; }

  const std::string& command() const { return command_; }
  const std::vector<ReportRow>& rows() const { return rows_; }
  std::int64_t checks_passed() const { return passed_; }
  const std::vector<std::string>& failures() const { return failures_; }
  bool all_passed() const { return failures_.empty(); }

  // Rationals are written exactly ("num/den") with a companion
  // "<name>_decimal" field rounded to six places.
  nlohmann::json ToJson() const;
  std::string ToCsv() const;

 private:
  std::string command_;
  nlohmann::json config_;
  std::vector<ReportRow> rows_;
  ReportRow summary_;
  std::int64_t passed_ = 0;
  std::vector<std::string> failures_;
  double runtime_seconds_ = -1;
};

}  // namespace parlab

#endif  // PARLAB_REPORT_H_
