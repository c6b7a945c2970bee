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

#include "parlab/report.h"

#include <algorithm>

#include "absl/strings/str_join.h"
#include "absl/strings/str_replace.h"

namespace parlab {
namespace {

using nlohmann::json;

void AddJsonField(json& obj, const std::string& name, const ReportValue& value) {
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Rational>) {
          obj[name] = FormatRational(v);
          obj[name + "_decimal"] = FormatDecimal(v);
        } else {
          obj[name] = v;
        }
      },
      value);
}

json RowToJson(const ReportRow& row) {
  json obj = json::object();
  for (const auto& [name, value] : row.fields) AddJsonField(obj, name, value);
  return obj;
}

std::string CsvEscape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  return "\"" + absl::StrReplaceAll(s, {{"\"", "\"\""}}) + "\"";
}

}  // namespace

ReportRow& ReportRow::Set(std::string name, ReportValue value) {
  for (auto& field : fields) {
    if (field.first == name) {
      field.second = std::move(value);
      return *this;
    }
  }
  fields.emplace_back(std::move(name), std::move(value));
  return *this;
}

const ReportValue* ReportRow::Find(const std::string& name) const {
  for (const auto& field : fields) {
    if (field.first == name) return &field.second;
  }
  return nullptr;
}

void ReportDocument::AddCheck(bool passed, const std::string& description) {
  if (passed) {
    ++passed_;
  } else {
    failures_.push_back(description);
  }
}

json ReportDocument::ToJson() const {
  json doc = {{"command", command_}, {"config", config_}};
  json rows = json::array();
  for (const ReportRow& row : rows_) rows.push_back(RowToJson(row));
  doc["rows"] = std::move(rows);
  if (!summary_.fields.empty()) doc["summary"] = RowToJson(summary_);
  doc["checks"] = {{"passed", passed_},
                   {"failed", static_cast<std::int64_t>(failures_.size())},
                   {"failures", failures_}};
  if (runtime_seconds_ >= 0) doc["runtime_seconds"] = runtime_seconds_;
  return doc;
}

std::string ReportDocument::ToCsv() const {
  std::vector<std::string> columns;
  for (const ReportRow& row : rows_) {
    for (const auto& [name, value] : row.fields) {
      std::vector<std::string> names = {name};
      if (std::holds_alternative<Rational>(value)) names.push_back(name + "_decimal");
      for (const std::string& n : names) {
        if (std::find(columns.begin(), columns.end(), n) == columns.end()) columns.push_back(n);
      }
    }
  }
  std::string out = absl::StrJoin(columns, ",") + "\n";
  for (const ReportRow& row : rows_) {
    const json obj = RowToJson(row);
    std::vector<std::string> cells;
    for (const std::string& c : columns) {
      if (!obj.contains(c)) {
        cells.emplace_back();
      } else if (obj[c].is_string()) {
        cells.push_back(CsvEscape(obj[c].get<std::string>()));
      } else {
        cells.push_back(obj[c].dump());
      }
    }
    out += absl::StrJoin(cells, ",") + "\n";
  }
  return out;
}

}  // namespace parlab
