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

#include "parlab/experiments.h"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <sstream>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_split.h"
#include "parlab/distribution.h"
#include "parlab/formulas.h"
#include "parlab/inducibility.h"
#include "parlab/measures.h"
#include "parlab/par.h"
#include "parlab/problems.h"
#include "parlab/protocol_json.h"
#include "parlab/status_macros.h"
#include "parlab/tiling_json.h"

namespace parlab {
namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

double SecondsSince(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

absl::StatusOr<json> ReadJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) return absl::NotFoundError(absl::StrCat("cannot open ", path));
  json doc = json::parse(in, nullptr, false);
  if (doc.is_discarded()) return absl::InvalidArgumentError(absl::StrCat(path, " is not valid JSON"));
  return doc;
}

absl::Status WriteJsonFile(const std::string& path, const json& doc) {
  std::ofstream out(path);
  if (!out) return absl::PermissionDeniedError(absl::StrCat("cannot write ", path));
  out << doc.dump(2) << "\n";
  return out ? absl::OkStatus() : absl::DataLossError(absl::StrCat("short write to ", path));
}

// A problem with its table and ideal block sizes, shared by every protocol
// measured against it.
struct Bench {
  ProblemSpec problem;
  FunctionTable table;
  IdealReference ideal;

  static absl::StatusOr<Bench> Create(const ProblemSpec& problem) {
    PARLAB_ASSIGN_OR_RETURN(FunctionTable table, BuildTable(problem, TableLimitsFromEnv()));
    IdealReference ideal = IdealReference::FromTable(table);
    return Bench{problem, std::move(table), std::move(ideal)};
  }

  absl::StatusOr<ParReport> Analyze(const Protocol& protocol, Tiling* tiling_out = nullptr) const {
    PARLAB_ASSIGN_OR_RETURN(Tiling tiling, InducedTiling(protocol, table));
    PARLAB_ASSIGN_OR_RETURN(ParReport report, AnalyzeTiling(tiling, ideal, Distribution::Uniform(table.shape())));
    if (tiling_out != nullptr) *tiling_out = std::move(tiling);
    return report;
  }
};

json ParamsJson(const ProtocolParams& p) {
  json j = json::object();
  if (p.g.has_value()) j["g"] = *p.g;
  if (p.c.has_value()) j["c"] = FormatRational(*p.c);
  return j;
}

// Records measured-vs-formula as a row and a check.
class Checker {
 public:
  explicit Checker(ReportDocument* doc) : doc_(doc) {}

  ReportRow& Compare(const std::string& check, const Rational& measured, const Rational& formula,
                     bool at_least = false) {
    const bool pass = at_least ? measured >= formula : measured == formula;
    ReportRow& row = doc_->AddRow();
    row.Set("check", check);
    row.Set("measured", measured).Set("formula", formula).Set("relation", at_least ? ">=" : "==").Set("pass", pass);
    pending_ = &row;
    pending_pass_ = pass;
    return row;
  }

  // Call after adding parameter fields to the last compared row.
  void Commit() {
    std::string where;
    for (const auto& [name, value] : pending_->fields) {
      if (name == "check" || name == "measured" || name == "formula" || name == "relation" || name == "pass") continue;
      if (const auto* i = std::get_if<std::int64_t>(&value)) absl::StrAppend(&where, " ", name, "=", *i);
      if (const auto* s = std::get_if<std::string>(&value)) absl::StrAppend(&where, " ", name, "=", *s);
    }
    const auto& measured = std::get<Rational>(*pending_->Find("measured"));
    const auto& formula = std::get<Rational>(*pending_->Find("formula"));
    doc_->AddCheck(pending_pass_, absl::StrCat(std::get<std::string>(*pending_->Find("check")), where, ": measured ",
                                               FormatRational(measured), ", formula ", FormatRational(formula)));
  }

 private:
  ReportDocument* doc_;
  ReportRow* pending_ = nullptr;
  bool pending_pass_ = false;
};

absl::StatusOr<Rational> NamedFormula(const std::string& name, FormulaParams params) {
  return Formula(name, params);
}

struct Selector {
  bool worst;
  PrivacyMode mode;
};

absl::StatusOr<std::vector<std::pair<std::string, Selector>>> ParseSelectors(const std::vector<std::string>& pars) {
  std::vector<std::string> names = pars.empty() ? AllParSelectors() : pars;
  std::vector<std::pair<std::string, Selector>> out;
  for (const std::string& name : names) {
    std::vector<std::string> parts = absl::StrSplit(name, absl::MaxSplits('-', 1));
    if (parts.size() != 2 || (parts[0] != "worst" && parts[0] != "avg")) {
      return absl::InvalidArgumentError(absl::StrCat("bad --par '", name, "'"));
    }
    PARLAB_ASSIGN_OR_RETURN(PrivacyMode mode, ParseMode(parts[1]));
    out.emplace_back(name, Selector{parts[0] == "worst", mode});
  }
  return out;
}

struct Loaded {
  ProblemSpec problem;
  Protocol protocol;
  Distribution dist;
};

absl::StatusOr<Loaded> Load(const AnalyzeConfig& config) {
  PARLAB_ASSIGN_OR_RETURN(ProblemSpec problem, ProblemSpec::Parse(config.problem, config.k));
  std::optional<Protocol> protocol;
  if (!config.protocol_file.empty()) {
    PARLAB_ASSIGN_OR_RETURN(json doc, ReadJsonFile(config.protocol_file));
    PARLAB_ASSIGN_OR_RETURN(protocol, ProtocolFromJson(doc));
    if (!(protocol->shape() == problem.shape())) {
      return absl::InvalidArgumentError("protocol file's matrix shape differs from the problem's");
    }
  } else {
    if (config.protocol.empty()) return absl::InvalidArgumentError("need --protocol or --protocol-file");
    PARLAB_ASSIGN_OR_RETURN(protocol, MakeBuiltinProtocol(config.protocol, problem, config.params));
  }
  Distribution dist = Distribution::Uniform(problem.shape());
  if (!config.dist_file.empty()) {
    PARLAB_ASSIGN_OR_RETURN(json doc, ReadJsonFile(config.dist_file));
    PARLAB_ASSIGN_OR_RETURN(dist, DistributionFromJson(doc, problem.shape()));
  }
  return Loaded{problem, *std::move(protocol), std::move(dist)};
}

json AnalyzeConfigJson(const AnalyzeConfig& c) {
  json j = {{"problem", c.problem},
            {"protocol", c.protocol_file.empty() ? c.protocol : c.protocol_file},
            {"params", ParamsJson(c.params)},
            {"par", c.pars.empty() ? AllParSelectors() : c.pars},
            {"dist", c.dist_file.empty() ? "uniform" : c.dist_file},
            {"measure", c.measure},
            {"distance", c.distance},
            {"threshold", FormatRational(c.threshold)}};
  if (c.k.has_value()) j["k"] = *c.k;
  return j;
}

absl::StatusOr<ReportDocument> Analyze(const AnalyzeConfig& config, bool generalized, const std::string& command) {
  const auto start = Clock::now();
  PARLAB_ASSIGN_OR_RETURN(auto selectors, ParseSelectors(config.pars));
  PARLAB_ASSIGN_OR_RETURN(Loaded loaded, Load(config));
  PARLAB_ASSIGN_OR_RETURN(Distance distance, NamedDistance(config.distance));
  PARLAB_ASSIGN_OR_RETURN(Measure measure, NamedMeasure(config.measure, loaded.dist, distance, config.threshold));

  PARLAB_ASSIGN_OR_RETURN(FunctionTable table, BuildTable(loaded.problem, TableLimitsFromEnv()));
  const ValidationReport validation = ValidateProtocol(loaded.protocol, table);
  if (!validation.ok) return absl::FailedPreconditionError(validation.ToString());
  PARLAB_ASSIGN_OR_RETURN(Tiling tiling, InducedTiling(loaded.protocol, table));
  PARLAB_ASSIGN_OR_RETURN(int bits, CommunicationComplexity(loaded.protocol));

  if (!config.export_tiling.empty()) PARLAB_RETURN_IF_ERROR(WriteJsonFile(config.export_tiling, TilingToJson(tiling)));
  if (!config.export_protocol.empty()) {
    PARLAB_ASSIGN_OR_RETURN(json tree, ProtocolToJson(loaded.protocol));
    PARLAB_RETURN_IF_ERROR(WriteJsonFile(config.export_protocol, tree));
  }

  ReportDocument doc(command, AnalyzeConfigJson(config));
  doc.SetSummary("problem", loaded.problem.name());
  doc.SetSummary("protocol", loaded.protocol.name());
  doc.SetSummary("tiles", static_cast<std::int64_t>(tiling.size()));
  doc.SetSummary("communication_bits", static_cast<std::int64_t>(bits));

  if (!generalized && config.measure == "cardinality") {
    PARLAB_ASSIGN_OR_RETURN(ParReport report, AnalyzeTiling(tiling, IdealReference::FromTable(table), loaded.dist));
    for (const auto& [name, sel] : selectors) {
      ReportRow& row = doc.AddRow();
      row.Set("par", name).Set("value", (sel.worst ? report.worst : report.average).get(sel.mode));
      if (sel.worst && sel.mode != PrivacyMode::kSubjective) {
        row.Set("witness", ToString(report.worst_witness[static_cast<int>(sel.mode)]));
      }
      row.Set("perfectly_private", IsPerfectlyPrivate(tiling, table, sel.mode));
    }
  } else {
    const Partition ideal = IdealPartition(table);
    for (const auto& [name, sel] : selectors) {
      std::vector<ParScope> scopes;
      if (sel.mode == PrivacyMode::kSubjective) {
        scopes = {ParScope::kWrt1, ParScope::kWrt2};
      } else {
        scopes = {static_cast<ParScope>(static_cast<int>(sel.mode))};
      }
      GeneralizedResult combined;
      bool first = true;
      for (ParScope scope : scopes) {
        PARLAB_ASSIGN_OR_RETURN(GeneralizedResult r,
                                GeneralizedPar(tiling, ideal, measure, scope,
                                               sel.worst ? Aggregate::kWorst : Aggregate::kAverage, loaded.dist));
        if (first || r.value > combined.value) {
          combined.value = r.value;
          combined.witness = r.witness;
        }
        combined.unbounded = combined.unbounded || r.unbounded;
        combined.zero_over_zero += r.zero_over_zero;
        first = false;
      }
      ReportRow& row = doc.AddRow();
      row.Set("par", name).Set("measure", measure.name).Set("value", combined.value);
      row.Set("unbounded", combined.unbounded);
      row.Set("zero_over_zero", static_cast<std::int64_t>(combined.zero_over_zero));
      if (combined.witness.has_value()) row.Set("witness", ToString(*combined.witness));
      if (sel.mode != PrivacyMode::kObjective) row.Set("extension", true);
    }
  }
  doc.set_runtime_seconds(SecondsSince(start));
  return doc;
}

// Table 1 and Table 2 rows ------------------------------------------------

absl::Status AddTable1(int kmax, ReportDocument* doc) {
  Checker check(doc);
  for (int k = 1; k <= kmax; ++k) {
    PARLAB_ASSIGN_OR_RETURN(ProblemSpec problem, ProblemSpec::Millionaires(k));
    PARLAB_ASSIGN_OR_RETURN(Bench bench, Bench::Create(problem));
    const FormulaParams p{.k = k};
    PARLAB_ASSIGN_OR_RETURN(Rational lower, NamedFormula("mp_lower_avg_obj", p));
    PARLAB_ASSIGN_OR_RETURN(Protocol bisection, BisectionProtocol(k));
    PARLAB_ASSIGN_OR_RETURN(ParReport bp, bench.Analyze(bisection));
    PARLAB_ASSIGN_OR_RETURN(ParReport sealed, bench.Analyze(SealedBid(problem)));
    for (const auto& [name, report] : {std::pair{"sealed", &sealed}, std::pair{"bisection", &bp}}) {
      check.Compare("mp_lower_avg_obj", report->average.objective, lower, true)
          .Set("table", std::int64_t{1})
          .Set("row", "Any Protocol")
          .Set("protocol", std::string(name))
          .Set("column", "objective")
          .Set("k", std::int64_t{k});
      check.Commit();
    }
    PARLAB_ASSIGN_OR_RETURN(Rational obj, NamedFormula("mp_bisection_avg_obj", p));
    PARLAB_ASSIGN_OR_RETURN(Rational subj, NamedFormula("mp_bisection_avg_subj", p));
    check.Compare("mp_bisection_avg_obj", bp.average.objective, obj)
        .Set("table", std::int64_t{1})
        .Set("row", "Bisection Protocol")
        .Set("column", "objective")
        .Set("k", std::int64_t{k});
    check.Commit();
    check.Compare("mp_bisection_avg_subj", bp.average.subjective, subj)
        .Set("table", std::int64_t{1})
        .Set("row", "Bisection Protocol")
        .Set("column", "subjective")
        .Set("k", std::int64_t{k});
    check.Commit();
  }
  return absl::OkStatus();
}

absl::Status AddTable2(int kmax, ReportDocument* doc) {
  Checker check(doc);
  auto add = [&](const std::string& row_name, const std::string& formula, const Rational& measured,
                 const FormulaParams& p, const std::string& column) -> absl::Status {
    PARLAB_ASSIGN_OR_RETURN(Rational expected, NamedFormula(formula, p));
    ReportRow& row = check.Compare(formula, measured, expected);
    row.Set("table", std::int64_t{2}).Set("row", row_name).Set("column", column).Set("k", std::int64_t{*p.k});
    if (p.g.has_value()) row.Set("g", std::int64_t{*p.g});
    check.Commit();
    return absl::OkStatus();
  };
  for (int k = 1; k <= kmax; ++k) {
    PARLAB_ASSIGN_OR_RETURN(ProblemSpec problem, ProblemSpec::SecondPrice(k));
    PARLAB_ASSIGN_OR_RETURN(Bench bench, Bench::Create(problem));
    const FormulaParams p{.k = k};
    PARLAB_ASSIGN_OR_RETURN(Protocol english, EnglishAuction(k));
    PARLAB_ASSIGN_OR_RETURN(ParReport en, bench.Analyze(english));
    PARLAB_RETURN_IF_ERROR(add("English Auction", "spa_english_avg_obj", en.average.objective, p, "objective"));
    PARLAB_RETURN_IF_ERROR(add("English Auction", "spa_english_avg_subj", en.average.subjective, p, "subjective"));
    for (int g = 0; g <= k; ++g) {
      PARLAB_ASSIGN_OR_RETURN(Protocol bba, BoundedBisectionAuction(k, g));
      PARLAB_ASSIGN_OR_RETURN(ParReport r, bench.Analyze(bba));
      const FormulaParams pg{.k = k, .g = g};
      PARLAB_RETURN_IF_ERROR(add("Bounded-Bisection Auction", "spa_bba_avg_obj", r.average.objective, pg, "objective"));
      PARLAB_RETURN_IF_ERROR(
          add("Bounded-Bisection Auction", "spa_bba_avg_subj", r.average.subjective, pg, "subjective"));
    }
    PARLAB_ASSIGN_OR_RETURN(Protocol ba, BisectionAuction(k));
    PARLAB_ASSIGN_OR_RETURN(ParReport b, bench.Analyze(ba));
    PARLAB_RETURN_IF_ERROR(add("Bisection Auction", "spa_ba_avg_obj", b.average.objective, p, "objective"));
    PARLAB_RETURN_IF_ERROR(add("Bisection Auction", "spa_ba_avg_subj", b.average.subjective, p, "subjective"));
    PARLAB_ASSIGN_OR_RETURN(ParReport s, bench.Analyze(SealedBid(problem)));
    PARLAB_RETURN_IF_ERROR(add("Sealed-Bid Auction", "spa_sealed_avg_obj", s.average.objective, p, "objective"));
    PARLAB_RETURN_IF_ERROR(add("Sealed-Bid Auction", "spa_sealed_avg_subj", s.average.subjective, p, "subjective"));
  }
  return absl::OkStatus();
}

}  // namespace

std::vector<std::string> AllParSelectors() {
  std::vector<std::string> out;
  for (const char* agg : {"worst", "avg"}) {
    for (const char* mode : {"objective", "wrt1", "wrt2", "subjective"}) out.push_back(absl::StrCat(agg, "-", mode));
  }
  return out;
}

absl::StatusOr<ReportDocument> CmdAnalyze(const AnalyzeConfig& config) { return Analyze(config, false, "analyze"); }

absl::StatusOr<ReportDocument> CmdMeasure(const AnalyzeConfig& config) { return Analyze(config, true, "measure"); }

absl::StatusOr<ReportDocument> CmdTables(int which, int kmax) {
  if (which != 1 && which != 2) return absl::InvalidArgumentError("--which must be 1 or 2");
  if (kmax < 1) return absl::InvalidArgumentError("--kmax must be at least 1");
  const auto start = Clock::now();
  ReportDocument doc("tables", json{{"which", which}, {"kmax", kmax}});
  PARLAB_RETURN_IF_ERROR(which == 1 ? AddTable1(kmax, &doc) : AddTable2(kmax, &doc));
  doc.set_runtime_seconds(SecondsSince(start));
  return doc;
}

absl::StatusOr<ReportDocument> CmdCheckFormulas(const CheckFormulasOptions& options) {
  if (options.kmax < 1) return absl::InvalidArgumentError("--kmax must be at least 1");
  const auto start = Clock::now();
  ReportDocument doc("check-formulas", json{{"kmax", options.kmax},
                                           {"tpg_kmax", std::min(options.kmax, options.tpg_kmax)},
                                           {"appxa_nmax", std::min(options.kmax, options.appxa_nmax)}});
  Checker check(&doc);
  auto compare = [&](const std::string& formula, const Rational& measured, FormulaParams p,
                     bool at_least = false) -> absl::Status {
    PARLAB_ASSIGN_OR_RETURN(Rational expected, NamedFormula(formula, p));
    ReportRow& row = check.Compare(formula, measured, expected, at_least);
    if (p.k.has_value()) row.Set("k", std::int64_t{*p.k});
    if (p.g.has_value()) row.Set("g", std::int64_t{*p.g});
    if (p.c.has_value()) row.Set("c", std::int64_t{*p.c});
    if (p.n.has_value()) row.Set("n", std::int64_t{*p.n});
    check.Commit();
    return absl::OkStatus();
  };

  for (int k = 1; k <= options.kmax; ++k) {
    const FormulaParams p{.k = k};
    // Second-price auction.
    {
      PARLAB_ASSIGN_OR_RETURN(ProblemSpec problem, ProblemSpec::SecondPrice(k));
      PARLAB_ASSIGN_OR_RETURN(Bench bench, Bench::Create(problem));
      PARLAB_ASSIGN_OR_RETURN(Protocol english, EnglishAuction(k));
      PARLAB_ASSIGN_OR_RETURN(ParReport en, bench.Analyze(english));
      PARLAB_RETURN_IF_ERROR(compare("spa_english_avg_obj", en.average.objective, p));
      PARLAB_RETURN_IF_ERROR(compare("spa_english_avg_subj", en.average.subjective, p));
      for (int g = 0; g <= k; ++g) {
        const FormulaParams pg{.k = k, .g = g};
        PARLAB_ASSIGN_OR_RETURN(Protocol bba, options.bba(k, g));
        Tiling tiling = *Tiling::Create(Shape{1, 1}, {Rect{ValueSet::Single(0), ValueSet::Single(0)}});
        PARLAB_ASSIGN_OR_RETURN(ParReport r, bench.Analyze(bba, &tiling));
        PARLAB_RETURN_IF_ERROR(compare("spa_bba_avg_obj", r.average.objective, pg));
        PARLAB_RETURN_IF_ERROR(compare("spa_bba_wrt1", r.average.wrt1, pg));
        PARLAB_RETURN_IF_ERROR(compare("spa_bba_wrt2", r.average.wrt2, pg));
        PARLAB_RETURN_IF_ERROR(compare("spa_bba_avg_subj", r.average.subjective, pg));
        PARLAB_ASSIGN_OR_RETURN(AuctionTileCounts counts, CountAuctionTiles(tiling, bench.table));
        const std::uint64_t measured[] = {counts.tiles,          counts.tile_deficit,   counts.row_slices_two,
                                          counts.row_deficit_two, counts.row_slices_one, counts.col_slices_one,
                                          counts.col_deficit_one, counts.col_slices_two};
        for (TileQuantity q : kAllTileQuantities) {
          const std::string name = absl::StrCat("tiles_", std::string(1, TileQuantityLetter(q)));
          PARLAB_RETURN_IF_ERROR(
              compare(name, MakeRational(static_cast<std::int64_t>(measured[static_cast<int>(q)])), pg));
          ReportRow& row = check.Compare(name + "_recurrence", TileCountRecurrence(q, g, k - g),
                                         TileCountClosedForm(q, g, k - g));
          row.Set("k", std::int64_t{k}).Set("g", std::int64_t{g});
          check.Commit();
        }
      }
      PARLAB_ASSIGN_OR_RETURN(Protocol ba, BisectionAuction(k));
      PARLAB_ASSIGN_OR_RETURN(ParReport b, bench.Analyze(ba));
      PARLAB_RETURN_IF_ERROR(compare("spa_ba_avg_obj", b.average.objective, p));
      PARLAB_RETURN_IF_ERROR(compare("spa_ba_wrt1", b.average.wrt1, p));
      PARLAB_RETURN_IF_ERROR(compare("spa_ba_wrt2", b.average.wrt2, p));
      PARLAB_RETURN_IF_ERROR(compare("spa_ba_avg_subj", b.average.subjective, p));
      PARLAB_ASSIGN_OR_RETURN(ParReport s, bench.Analyze(SealedBid(problem)));
      PARLAB_RETURN_IF_ERROR(compare("spa_sealed_avg_obj", s.average.objective, p));
      PARLAB_RETURN_IF_ERROR(compare("spa_sealed_wrt1", s.average.wrt1, p));
      PARLAB_RETURN_IF_ERROR(compare("spa_sealed_avg_subj", s.average.subjective, p));
    }
    // Millionaires.
    {
      PARLAB_ASSIGN_OR_RETURN(ProblemSpec problem, ProblemSpec::Millionaires(k));
      PARLAB_ASSIGN_OR_RETURN(Bench bench, Bench::Create(problem));
      PARLAB_ASSIGN_OR_RETURN(Protocol bisection, BisectionProtocol(k));
      Tiling tiling = *Tiling::Create(Shape{1, 1}, {Rect{ValueSet::Single(0), ValueSet::Single(0)}});
      PARLAB_ASSIGN_OR_RETURN(ParReport bp, bench.Analyze(bisection, &tiling));
      PARLAB_RETURN_IF_ERROR(compare("mp_bisection_avg_obj", bp.average.objective, p));
      PARLAB_RETURN_IF_ERROR(compare("mp_bisection_avg_subj", bp.average.subjective, p));
      PARLAB_RETURN_IF_ERROR(compare("mp_lower_avg_obj", bp.average.objective, p, true));
      std::int64_t one = 0;
      std::int64_t two = 0;
      for (const Rect& t : tiling.tiles()) ++(bench.table.label(t.first_cell()).winner() == 1 ? one : two);
      PARLAB_RETURN_IF_ERROR(compare("mp_bisection_tiles_one", MakeRational(one), p));
      PARLAB_RETURN_IF_ERROR(compare("mp_bisection_tiles_two", MakeRational(two), p));
      PARLAB_ASSIGN_OR_RETURN(ParReport s, bench.Analyze(SealedBid(problem)));
      PARLAB_RETURN_IF_ERROR(compare("mp_largest_avg_obj", s.average.objective, p));
      PARLAB_RETURN_IF_ERROR(compare("mp_lower_avg_obj", s.average.objective, p, true));
    }
    // Truthful public good, every cost.
    if (k <= options.tpg_kmax) {
      for (std::int64_t c = 1; c < (std::int64_t{1} << k); ++c) {
        PARLAB_ASSIGN_OR_RETURN(ProblemSpec problem, ProblemSpec::TruthfulPublicGood(k, c));
        PARLAB_ASSIGN_OR_RETURN(Bench bench, Bench::Create(problem));
        PARLAB_ASSIGN_OR_RETURN(Protocol ref, TpgReferenceProtocol(k, c));
        PARLAB_ASSIGN_OR_RETURN(ParReport r, bench.Analyze(ref));
        PARLAB_RETURN_IF_ERROR(compare("tpg_avg_obj", r.average.objective, FormulaParams{.k = k, .c = c}));
        if (c == (std::int64_t{1} << k) - 1) PARLAB_RETURN_IF_ERROR(compare("tpg_pg_limit", r.average.objective, p));
      }
    }
    // The floor(x/2) example, indexed by n = k.
    if (k >= 2 && k <= options.appxa_nmax) {
      PARLAB_ASSIGN_OR_RETURN(ProblemSpec problem, ProblemSpec::AppendixA(k));
      PARLAB_ASSIGN_OR_RETURN(Bench bench, Bench::Create(problem));
      PARLAB_ASSIGN_OR_RETURN(AppendixAProtocols pq, MakeAppendixAProtocols(k));
      const FormulaParams pn{.n = k};
      for (const auto& [name, protocol] : {std::pair{"appxa_p_avg_obj", &pq.p}, std::pair{"appxa_q_avg_obj", &pq.q}}) {
        PARLAB_ASSIGN_OR_RETURN(ParReport r, bench.Analyze(*protocol));
        PARLAB_RETURN_IF_ERROR(compare(name, r.average.objective, pn));
        PARLAB_RETURN_IF_ERROR(compare("appxa_tiles", MakeRational(static_cast<std::int64_t>(r.tile_count)), pn));
      }
    }
  }
  doc.set_runtime_seconds(SecondsSince(start));
  return doc;
}

absl::StatusOr<ReportDocument> CmdSweepG(int k) {
  const auto start = Clock::now();
  PARLAB_ASSIGN_OR_RETURN(ProblemSpec problem, ProblemSpec::SecondPrice(k));
  PARLAB_ASSIGN_OR_RETURN(Bench bench, Bench::Create(problem));
  ReportDocument doc("sweep-g", json{{"k", k}});
  Rational previous = 0;
  for (int g = 0; g <= k; ++g) {
    PARLAB_ASSIGN_OR_RETURN(Protocol bba, BoundedBisectionAuction(k, g));
    PARLAB_ASSIGN_OR_RETURN(ParReport r, bench.Analyze(bba));
    PARLAB_ASSIGN_OR_RETURN(int bits, CommunicationComplexity(bba));
    doc.AddRow()
        .Set("g", std::int64_t{g})
        .Set("avg_objective", r.average.objective)
        .Set("avg_wrt1", r.average.wrt1)
        .Set("avg_wrt2", r.average.wrt2)
        .Set("communication_bits", std::int64_t{bits});
    doc.AddCheck(r.average.objective >= previous,
                 absl::StrCat("average objective PAR decreases from g=", g - 1, " to g=", g));
    previous = r.average.objective;
  }
  doc.set_runtime_seconds(SecondsSince(start));
  return doc;
}

absl::StatusOr<ReportDocument> CmdDistConjecture(const DistConjectureConfig& config) {
  if (config.trials <= 0) return absl::InvalidArgumentError("--trials must be positive");
  const auto start = Clock::now();
  ReportDocument doc("dist-conjecture",
                     json{{"k", config.k}, {"trials", config.trials}, {"seed", config.seed}, {"grid", config.grid}});
  PARLAB_ASSIGN_OR_RETURN(ProblemSpec spa, ProblemSpec::SecondPrice(config.k));
  PARLAB_ASSIGN_OR_RETURN(ProblemSpec mp, ProblemSpec::Millionaires(config.k));
  PARLAB_ASSIGN_OR_RETURN(FunctionTable spa_table, BuildTable(spa, TableLimitsFromEnv()));
  PARLAB_ASSIGN_OR_RETURN(FunctionTable mp_table, BuildTable(mp, TableLimitsFromEnv()));
  PARLAB_ASSIGN_OR_RETURN(Protocol ba, BisectionAuction(config.k));
  PARLAB_ASSIGN_OR_RETURN(Protocol bp, BisectionProtocol(config.k));
  PARLAB_ASSIGN_OR_RETURN(Tiling ba_tiling, InducedTiling(ba, spa_table));
  PARLAB_ASSIGN_OR_RETURN(Tiling bp_tiling, InducedTiling(bp, mp_table));
  const IdealReference spa_ideal = IdealReference::FromTable(spa_table);
  const IdealReference mp_ideal = IdealReference::FromTable(mp_table);

  Rational best = -1;
  int best_trial = 0;
  std::optional<Distribution> best_dist;
  for (int t = 0; t < config.trials; ++t) {
    const std::uint64_t seed = config.seed + static_cast<std::uint64_t>(t);
    Distribution dist = Distribution::Uniform(spa.shape());
    if (t > 0) {
      PARLAB_ASSIGN_OR_RETURN(dist, Distribution::SeededRandom(spa.shape(), seed, config.grid));
    }
    PARLAB_ASSIGN_OR_RETURN(Rational ba_obj, AveragePar(ba_tiling, spa_ideal, ParScope::kObjective, dist));
    PARLAB_ASSIGN_OR_RETURN(Rational ba_w1, AveragePar(ba_tiling, spa_ideal, ParScope::kWrt1, dist));
    PARLAB_ASSIGN_OR_RETURN(Rational ba_w2, AveragePar(ba_tiling, spa_ideal, ParScope::kWrt2, dist));
    PARLAB_ASSIGN_OR_RETURN(Rational bp_obj, AveragePar(bp_tiling, mp_ideal, ParScope::kObjective, dist));
    ReportRow& row = doc.AddRow();
    row.Set("trial", std::int64_t{t}).Set("distribution", t == 0 ? std::string("uniform") : absl::StrCat("seeded:", seed));
    row.Set("auction_avg_objective", ba_obj)
        .Set("auction_avg_subjective", std::max(ba_w1, ba_w2))
        .Set("millionaires_avg_objective", bp_obj);
    if (t == 0) {
      doc.AddCheck(ba_obj == MakeRational(config.k, 2) + 1, "uniform trial reproduces k/2 + 1");
    }
    if (ba_obj > best) {
      best = ba_obj;
      best_trial = t;
      best_dist = std::move(dist);
    }
  }
  doc.SetSummary("max_auction_avg_objective", best);
  doc.SetSummary("argmax_trial", std::int64_t{best_trial});
  doc.SetSummary("argmax_distribution", DistributionToJson(*best_dist).dump());
  doc.set_runtime_seconds(SecondsSince(start));
  return doc;
}

absl::StatusOr<ReportDocument> CmdInducible(const std::string& tiling_file) {
  PARLAB_ASSIGN_OR_RETURN(json doc_json, ReadJsonFile(tiling_file));
  PARLAB_ASSIGN_OR_RETURN(Tiling tiling, TilingFromJson(doc_json));
  const InducibilityVerdict verdict = CheckInducible(tiling);
  ReportDocument doc("inducible", json{{"tiling", tiling_file}});
  ReportRow& row = doc.AddRow();
  row.Set("tiles", static_cast<std::int64_t>(tiling.size())).Set("inducible", verdict.inducible);
  if (!verdict.inducible) {
    std::string block;
    for (std::uint32_t t : verdict.blocking_tiles) {
      const Rect& r = tiling.tiles()[t];
      absl::StrAppend(&block, block.empty() ? "" : " ", r.rows.ToString(), "x", r.cols.ToString());
    }
    row.Set("blocking_block", block);
  }
  return doc;
}

}  // namespace parlab
