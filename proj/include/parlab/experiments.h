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

#ifndef PARLAB_EXPERIMENTS_H_
#define PARLAB_EXPERIMENTS_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "parlab/builtin_protocols.h"
#include "parlab/protocol.h"
#include "parlab/rational.h"
#include "parlab/report.h"

namespace parlab {

// PAR selectors accepted by --par: "<worst|avg>-<objective|wrt1|wrt2|subjective>".
std::vector<std::string> AllParSelectors();

struct AnalyzeConfig {
  std::string problem;
  std::optional<int> k;
  std::string protocol;       // built-in name; ignored when protocol_file is set
  std::string protocol_file;  // explicit JSON tree
  ProtocolParams params;
  std::vector<std::string> pars;  // empty selects all
  std::string dist_file;          // empty selects the uniform distribution
  std::string measure = "cardinality";
  std::string distance = "discrete";
  Rational threshold = 1;
  std::string export_tiling;
  std::string export_protocol;
};

absl::StatusOr<ReportDocument> CmdAnalyze(const AnalyzeConfig& config);

// Same as analyze, but always goes through the generalized-measure path.
absl::StatusOr<ReportDocument> CmdMeasure(const AnalyzeConfig& config);

absl::StatusOr<ReportDocument> CmdTables(int which, int kmax);

struct CheckFormulasOptions {
  int kmax = 10;
  int tpg_kmax = 8;     // every cost c is checked, so this grows as 8^k
  int appxa_nmax = 10;
  // Source of bounded-bisection auctions; replaceable for mutation tests.
  std::function<absl::StatusOr<Protocol>(int k, int g)> bba = BoundedBisectionAuction;
};

absl::StatusOr<ReportDocument> CmdCheckFormulas(const CheckFormulasOptions& options);

absl::StatusOr<ReportDocument> CmdSweepG(int k);

struct DistConjectureConfig {
  int k = 4;
  int trials = 16;
  std::uint64_t seed = 1;
  std::uint32_t grid = 16;
};

absl::StatusOr<ReportDocument> CmdDistConjecture(const DistConjectureConfig& config);

absl::StatusOr<ReportDocument> CmdInducible(const std::string& tiling_file);

}  // namespace parlab

#endif  // PARLAB_EXPERIMENTS_H_
