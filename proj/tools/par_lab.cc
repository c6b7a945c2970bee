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

// par-lab: command-line front end for protocol privacy experiments.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "absl/status/statusor.h"
#include "parlab/experiments.h"
#include "parlab/rational.h"
#include "parlab/report.h"

namespace {

struct OutputFlags {
  std::string format = "json";
  std::string out;
};

void AddOutputFlags(CLI::App* cmd, OutputFlags* flags) {
  cmd->add_option("--format", flags->format, "Report format")->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--out", flags->out, "Write the report here instead of stdout");
}

int Emit(const absl::StatusOr<parlab::ReportDocument>& report, const OutputFlags& flags) {
  if (!report.ok()) {
    std::cerr << "error: " << report.status().message() << "\n";
    return 2;
  }
  const std::string text = flags.format == "csv" ? report->ToCsv() : report->ToJson().dump(2) + "\n";
  if (flags.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(flags.out);
    out << text;
    if (!out) {
      std::cerr << "error: cannot write " << flags.out << "\n";
      return 2;
    }
  }
  if (!report->all_passed()) {
    std::cerr << report->failures().size() << " check(s) failed; first: " << report->failures().front() << "\n";
    return 1;
  }
  return 0;
}

struct AnalyzeFlags {
  parlab::AnalyzeConfig config;
  std::optional<int> g;
  std::string c;
  std::string threshold = "1";
};

void AddAnalyzeFlags(CLI::App* cmd, AnalyzeFlags* f) {
  cmd->add_option("--problem", f->config.problem, "millionaires|mp|2spa|pg|tpg:c=<int>|appxa:n=<int>|colid:n=<int>")
      ->required();
  cmd->add_option("--k", f->config.k, "Bit width");
  cmd->add_option("--protocol", f->config.protocol,
                  "sealed|bisection|bisection-protocol|bisection-auction|english|bba|c-bisection|appxa-p|appxa-q|"
                  "tpg-ref|zero-test");
  cmd->add_option("--protocol-file", f->config.protocol_file, "Protocol tree as JSON");
  cmd->add_option("--g", f->g, "Bisection rounds for bba");
  cmd->add_option("--c", f->c, "Split fraction for c-bisection, as num/den");
  cmd->add_option("--par", f->config.pars, "PARs to report, e.g. avg-objective (default: all)");
  cmd->add_option("--dist", f->config.dist_file, "Distribution JSON (default: uniform)");
  cmd->add_option("--measure", f->config.measure,
                  "cardinality|probability_mass|additive_distance|max_distance|plausible_deniability|"
                  "relative_diameter");
  cmd->add_option("--distance", f->config.distance, "discrete|l1|linf|row|col");
  cmd->add_option("--threshold", f->threshold, "Plausible-deniability threshold in (0, 1]");
  cmd->add_option("--export-tiling", f->config.export_tiling, "Write the induced tiling as JSON");
  cmd->add_option("--export-protocol", f->config.export_protocol, "Write the expanded protocol tree as JSON");
}

absl::StatusOr<parlab::AnalyzeConfig> Finish(AnalyzeFlags f) {
  f.config.params.g = f.g;
  if (!f.c.empty()) {
    auto c = parlab::ParseRational(f.c);
    if (!c.ok()) return c.status();
    f.config.params.c = *c;
  }
  auto t = parlab::ParseRational(f.threshold);
  if (!t.ok()) return t.status();
  f.config.threshold = *t;
  return f.config;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Privacy-approximation ratios of two-party protocols"};
  app.require_subcommand(1);

  AnalyzeFlags analyze_flags;
  CLI::App* analyze = app.add_subcommand("analyze", "Compute PARs of one protocol on one problem");
  AddAnalyzeFlags(analyze, &analyze_flags);
  OutputFlags analyze_out;
  AddOutputFlags(analyze, &analyze_out);

  AnalyzeFlags measure_flags;
  CLI::App* measure = app.add_subcommand("measure", "Generalized PARs under a chosen measure");
  AddAnalyzeFlags(measure, &measure_flags);
  OutputFlags measure_out;
  AddOutputFlags(measure, &measure_out);

  int which = 2;
  int tables_kmax = 10;
  CLI::App* tables = app.add_subcommand("tables", "Reproduce the average-case PAR tables");
  tables->add_option("--which", which, "1: millionaires, 2: second-price auction")->check(CLI::IsMember({1, 2}));
  tables->add_option("--kmax", tables_kmax, "Largest bit width");
  OutputFlags tables_out;
  AddOutputFlags(tables, &tables_out);

  parlab::CheckFormulasOptions check_options;
  CLI::App* check = app.add_subcommand("check-formulas", "Compare measured PARs and tile counts with closed forms");
  check->add_option("--kmax", check_options.kmax, "Largest bit width");
  check->add_option("--tpg-kmax", check_options.tpg_kmax, "Largest bit width for the truthful public good");
  OutputFlags check_out;
  AddOutputFlags(check, &check_out);

  int sweep_k = 6;
  CLI::App* sweep = app.add_subcommand("sweep-g", "Bounded-bisection auction for every round budget g");
  sweep->add_option("--k", sweep_k, "Bit width")->required();
  OutputFlags sweep_out{.format = "csv"};
  AddOutputFlags(sweep, &sweep_out);

  parlab::DistConjectureConfig dist_config;
  CLI::App* dist = app.add_subcommand("dist-conjecture", "Average PARs under seeded random distributions");
  dist->add_option("--k", dist_config.k, "Bit width");
  dist->add_option("--trials", dist_config.trials, "Number of distributions; trial 0 is uniform");
  dist->add_option("--seed", dist_config.seed, "Base seed");
  dist->add_option("--grid", dist_config.grid, "Weights are drawn from 0..grid");
  OutputFlags dist_out;
  AddOutputFlags(dist, &dist_out);

  std::string tiling_file;
  CLI::App* inducible = app.add_subcommand("inducible", "Decide whether a tiling can be induced by a protocol");
  CLI::Option* tiling_flag = inducible->add_option("--tiling", tiling_file, "Tiling JSON");
  inducible->add_option("tiling_file", tiling_file, "Tiling JSON")->excludes(tiling_flag);
  OutputFlags inducible_out;
  AddOutputFlags(inducible, &inducible_out);

  CLI11_PARSE(app, argc, argv);

  if (*analyze || *measure) {
    auto config = Finish(*analyze ? analyze_flags : measure_flags);
    if (!config.ok()) {
      std::cerr << "error: " << config.status().message() << "\n";
      return 2;
    }
    return *analyze ? Emit(parlab::CmdAnalyze(*config), analyze_out) : Emit(parlab::CmdMeasure(*config), measure_out);
  }
  if (*tables) return Emit(parlab::CmdTables(which, tables_kmax), tables_out);
  if (*check) return Emit(parlab::CmdCheckFormulas(check_options), check_out);
  if (*sweep) return Emit(parlab::CmdSweepG(sweep_k), sweep_out);
  if (*dist) return Emit(parlab::CmdDistConjecture(dist_config), dist_out);
  if (*inducible && tiling_file.empty()) {
    std::cerr << "error: inducible needs a tiling file\n";
    return 2;
  }
  if (*inducible) return Emit(parlab::CmdInducible(tiling_file), inducible_out);
  return 2;
}
