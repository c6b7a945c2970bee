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
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "parlab/builtin_protocols.h"
#include "parlab/experiments.h"
#include "parlab/problems.h"
#include "parlab/rational.h"
#include "parlab/report.h"
#include "parlab/status_macros.h"

namespace parlab {
namespace {

using ::testing::HasSubstr;
using nlohmann::json;

std::string TempPath(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("parlab_test_" + name)).string();
}

ReportDocument Ok(absl::StatusOr<ReportDocument> doc) {
  EXPECT_TRUE(doc.ok()) << doc.status();
  return *std::move(doc);
}

Rational Value(const ReportRow& row, const std::string& field) {
  const ReportValue* v = row.Find(field);
  EXPECT_NE(v, nullptr) << field;
  if (v == nullptr || !std::holds_alternative<Rational>(*v)) return Rational(-1);
  return std::get<Rational>(*v);
}

std::int64_t Int(const ReportRow& row, const std::string& field) {
  const ReportValue* v = row.Find(field);
  EXPECT_NE(v, nullptr) << field;
  return v != nullptr && std::holds_alternative<std::int64_t>(*v) ? std::get<std::int64_t>(*v) : -1;
}

Rational AnalyzeOne(const std::string& problem, std::optional<int> k, const std::string& protocol,
                    const std::string& par) {
  AnalyzeConfig config;
  config.problem = problem;
  config.k = k;
  config.protocol = protocol;
  config.pars = {par};
  ReportDocument doc = Ok(CmdAnalyze(config));
  EXPECT_EQ(doc.rows().size(), 1u);
  return doc.rows().empty() ? Rational(-1) : Value(doc.rows()[0], "value");
}

TEST(Analyze, Examples) {
  EXPECT_EQ(AnalyzeOne("2spa", 4, "bisection", "avg-objective"), 3);
  EXPECT_EQ(AnalyzeOne("mp", 3, "sealed", "worst-wrt2"), 8);
  EXPECT_EQ(AnalyzeOne("tpg:c=4", 3, "tpg-ref", "avg-objective"), MakeRational(47, 32));
}

TEST(Analyze, RejectsBadConfigs) {
  AnalyzeConfig config;
  config.problem = "2spa";
  config.k = 3;
  config.protocol = "bisection-protocol";
  EXPECT_FALSE(CmdAnalyze(config).ok());
  config.protocol = "bisection";
  config.pars = {"avg-sideways"};
  EXPECT_FALSE(CmdAnalyze(config).ok());
  config.pars = {};
  config.dist_file = TempPath("missing.json");
  EXPECT_FALSE(CmdAnalyze(config).ok());
}

TEST(Analyze, AllSelectorsAndExports) {
  AnalyzeConfig config;
  config.problem = "2spa";
  config.k = 3;
  config.protocol = "english";
  config.export_tiling = TempPath("english_tiling.json");
  config.export_protocol = TempPath("english_protocol.json");
  ReportDocument doc = Ok(CmdAnalyze(config));
  EXPECT_EQ(doc.rows().size(), AllParSelectors().size());
  for (const ReportRow& row : doc.rows()) EXPECT_EQ(Value(row, "value"), 1);

  ReportDocument verdict = Ok(CmdInducible(config.export_tiling));
  ASSERT_EQ(verdict.rows().size(), 1u);
  EXPECT_TRUE(std::get<bool>(*verdict.rows()[0].Find("inducible")));

  AnalyzeConfig reload;
  reload.problem = "2spa";
  reload.k = 3;
  reload.protocol_file = config.export_protocol;
  reload.pars = {"avg-subjective"};
  ReportDocument again = Ok(CmdAnalyze(reload));
  EXPECT_EQ(Value(again.rows()[0], "value"), 1);
}

TEST(Measure, FigureSixAndCardinality) {
  AnalyzeConfig config;
  config.problem = "mp";
  config.k = 3;
  config.protocol = "bisection";
  config.measure = "additive_distance";
  config.pars = {"avg-objective"};
  ReportDocument doc = Ok(CmdMeasure(config));
  ASSERT_EQ(doc.rows().size(), 1u);
  EXPECT_EQ(Value(doc.rows()[0], "value"), MakeRational(23, 2));

  config.pars = {"avg-wrt1"};
  doc = Ok(CmdMeasure(config));
  EXPECT_TRUE(std::get<bool>(*doc.rows()[0].Find("extension")));

  config.measure = "plausible_deniability";
  config.threshold = 0;
  EXPECT_FALSE(CmdMeasure(config).ok());
}

TEST(Tables, Examples) {
  ReportDocument t2 = Ok(CmdTables(2, 3));
  EXPECT_TRUE(t2.all_passed());
  bool saw_sealed = false, saw_english = false;
  for (const ReportRow& row : t2.rows()) {
    const std::string name = std::get<std::string>(*row.Find("row"));
    if (name == "English Auction") {
      saw_english = true;
      EXPECT_EQ(Value(row, "measured"), 1);
    }
    if (name == "Sealed-Bid Auction" && Int(row, "k") == 3) {
      saw_sealed = true;
      const std::string column = std::get<std::string>(*row.Find("column"));
      EXPECT_EQ(Value(row, "measured"), column == "objective" ? MakeRational(43, 8) : MakeRational(29, 8));
    }
  }
  EXPECT_TRUE(saw_sealed && saw_english);

  ReportDocument t1 = Ok(CmdTables(1, 3));
  EXPECT_TRUE(t1.all_passed());
  int matched = 0;
  for (const ReportRow& row : t1.rows()) {
    if (std::get<std::string>(*row.Find("row")) != "Bisection Protocol" || Int(row, "k") != 3) continue;
    const std::string column = std::get<std::string>(*row.Find("column"));
    EXPECT_EQ(Value(row, "measured"), column == "objective" ? MakeRational(23, 2) : MakeRational(5, 2));
    ++matched;
  }
  EXPECT_EQ(matched, 2);
  EXPECT_FALSE(CmdTables(3, 3).ok());
}

TEST(CheckFormulas, AllPassUpToSix) {
  CheckFormulasOptions options;
  options.kmax = 6;
  options.tpg_kmax = 5;
  options.appxa_nmax = 6;
  ReportDocument doc = Ok(CmdCheckFormulas(options));
  EXPECT_TRUE(doc.all_passed()) << (doc.failures().empty() ? "" : doc.failures().front());
  EXPECT_GT(doc.checks_passed(), 300);
}

// Bounded-bisection auction whose leaves with a wide side get one more,
// pointless split of that side: the loser search runs one step too long.
absl::StatusOr<Protocol> OverlongLoserSearch(int k, int g) {
  PARLAB_ASSIGN_OR_RETURN(Protocol inner, BoundedBisectionAuction(k, g));
  PARLAB_ASSIGN_OR_RETURN(ProblemSpec problem, ProblemSpec::SecondPrice(k));
  constexpr std::uint64_t kExtra = std::uint64_t{1} << 63;
  auto expand = [inner, problem](const ProtocolState& state) -> Step {
    if (state.tag & kExtra) return Leaf{problem.Evaluate(state.rect().first_cell())};
    Step step = inner.Expand(state);
    if (std::holds_alternative<Split>(step)) return step;
    const Party side = state.rows.size() > 1 ? Party::kOne : Party::kTwo;
    const ValueSet& values = state.side(side);
    if (values.size() < 2) return step;
    return Split{side, values.Prefix(values.size() / 2), values.Suffix(values.size() / 2), state.tag | kExtra,
                 state.tag | kExtra};
  };
  return Protocol("bba-mutant", inner.shape(), expand);
}

TEST(CheckFormulas, MutantLoserSearchIsCaught) {
  CheckFormulasOptions options;
  options.kmax = 2;
  options.tpg_kmax = 2;
  options.appxa_nmax = 3;
  options.bba = OverlongLoserSearch;
  ReportDocument doc = Ok(CmdCheckFormulas(options));
  EXPECT_FALSE(doc.all_passed());
  bool caught = false;
  for (const std::string& f : doc.failures()) {
    caught |= f.find("spa_bba_avg_obj") != std::string::npos && f.find("k=2") != std::string::npos &&
              f.find("g=1") != std::string::npos;
  }
  EXPECT_TRUE(caught) << doc.failures().size() << " failures";
}

TEST(SweepG, EndpointsAndMonotonicity) {
  for (int k = 1; k <= 6; ++k) {
    ReportDocument doc = Ok(CmdSweepG(k));
    ASSERT_EQ(doc.rows().size(), static_cast<std::size_t>(k + 1));
    EXPECT_TRUE(doc.all_passed());
    EXPECT_EQ(Value(doc.rows().front(), "avg_objective"), 1);
    EXPECT_GE(Int(doc.rows().front(), "communication_bits"), (std::int64_t{1} << k) - 1);
    EXPECT_EQ(Value(doc.rows().back(), "avg_objective"), MakeRational(k, 2) + 1);
    EXPECT_LE(Int(doc.rows().back(), "communication_bits"), 4 * k);
    for (std::size_t g = 1; g < doc.rows().size(); ++g) {
      EXPECT_GE(Value(doc.rows()[g], "avg_objective"), Value(doc.rows()[g - 1], "avg_objective"));
    }
  }
}

TEST(DistConjecture, UniformTrialAndDeterminism) {
  DistConjectureConfig config{.k = 3, .trials = 6, .seed = 11, .grid = 8};
  ReportDocument a = Ok(CmdDistConjecture(config));
  ReportDocument b = Ok(CmdDistConjecture(config));
  EXPECT_TRUE(a.all_passed());
  EXPECT_EQ(a.rows().size(), 6u);
  EXPECT_EQ(Value(a.rows()[0], "auction_avg_objective"), MakeRational(5, 2));
  json ja = a.ToJson(), jb = b.ToJson();
  ja.erase("runtime_seconds");
  jb.erase("runtime_seconds");
  EXPECT_EQ(ja.dump(), jb.dump());
  config.seed = 12;
  EXPECT_NE(Ok(CmdDistConjecture(config)).ToJson()["rows"], a.ToJson()["rows"]);
  config.trials = 0;
  EXPECT_FALSE(CmdDistConjecture(config).ok());
}

TEST(Inducible, Fixtures) {
  ReportDocument pin = Ok(CmdInducible(std::string(PARLAB_FIXTURE_DIR) + "/pinwheel.json"));
  ASSERT_EQ(pin.rows().size(), 1u);
  EXPECT_FALSE(std::get<bool>(*pin.rows()[0].Find("inducible")));
  EXPECT_NE(pin.rows()[0].Find("blocking_block"), nullptr);

  const std::string single = TempPath("single.json");
  std::ofstream(single) << R"({"k":2,"tiles":[{"rows":[0,1,2,3],"cols":[0,1,2,3]}]})";
  ReportDocument one = Ok(CmdInducible(single));
  EXPECT_TRUE(std::get<bool>(*one.rows()[0].Find("inducible")));

  const std::string broken = TempPath("broken.json");
  std::ofstream(broken) << R"({"k":2,"tiles":[{"rows":[0]}]})";
  EXPECT_FALSE(CmdInducible(broken).ok());
  EXPECT_FALSE(CmdInducible(TempPath("does_not_exist.json")).ok());
}

// Splits one CSV line, honouring quoted fields.
std::vector<std::string> CsvFields(const std::string& line) {
  std::vector<std::string> out(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char ch = line[i];
    if (quoted && ch == '"' && i + 1 < line.size() && line[i + 1] == '"') {
      out.back() += '"';
      ++i;
    } else if (ch == '"') {
      quoted = !quoted;
    } else if (ch == ',' && !quoted) {
      out.emplace_back();
    } else {
      out.back() += ch;
    }
  }
  return out;
}

TEST(Reports, JsonAndCsvRoundTripRationals) {
  ReportDocument doc = Ok(CmdSweepG(5));
  const json parsed = json::parse(doc.ToJson().dump());
  ASSERT_EQ(parsed["rows"].size(), doc.rows().size());
  for (std::size_t i = 0; i < doc.rows().size(); ++i) {
    for (const std::string& f : {"avg_objective", "avg_wrt1", "avg_wrt2"}) {
      auto q = ParseRational(parsed["rows"][i][f].get<std::string>());
      ASSERT_TRUE(q.ok());
      EXPECT_EQ(*q, Value(doc.rows()[i], f));
      EXPECT_TRUE(parsed["rows"][i].contains(f + "_decimal"));
    }
  }
  EXPECT_EQ(parsed["command"], "sweep-g");
  EXPECT_EQ(parsed["config"]["k"], 5);

  std::istringstream csv(doc.ToCsv());
  std::string line;
  std::getline(csv, line);
  const std::vector<std::string> header = CsvFields(line);
  std::size_t row = 0;
  while (std::getline(csv, line)) {
    const std::vector<std::string> cells = CsvFields(line);
    ASSERT_EQ(cells.size(), header.size());
    for (std::size_t c = 0; c < header.size(); ++c) {
      if (header[c] != "avg_objective" && header[c] != "avg_wrt1" && header[c] != "avg_wrt2") continue;
      auto q = ParseRational(cells[c]);
      ASSERT_TRUE(q.ok()) << cells[c];
      EXPECT_EQ(*q, Value(doc.rows()[row], header[c]));
    }
    ++row;
  }
  EXPECT_EQ(row, doc.rows().size());
}

TEST(Reports, CsvEscapesAndFailures) {
  ReportDocument doc("demo", json::object());
  doc.AddRow().Set("name", std::string("a,\"b\"")).Set("q", MakeRational(-3, 6)).Set("ok", true);
  doc.AddCheck(false, "first");
  doc.AddCheck(true, "second");
  EXPECT_FALSE(doc.all_passed());
  EXPECT_EQ(doc.checks_passed(), 1);
  const std::string csv = doc.ToCsv();
  std::istringstream in(csv);
  std::string header, line;
  std::getline(in, header);
  std::getline(in, line);
  EXPECT_EQ(CsvFields(header), (std::vector<std::string>{"name", "q", "q_decimal", "ok"}));
  const auto cells = CsvFields(line);
  EXPECT_EQ(cells[0], "a,\"b\"");
  EXPECT_EQ(cells[1], "-1/2");
  EXPECT_EQ(cells[2], "-0.500000");
  EXPECT_EQ(doc.ToJson()["checks"]["failures"][0], "first");
}

int RunCli(const std::string& args, std::string* output = nullptr) {
  const std::string out = TempPath("cli_out.txt");
  const int status = std::system((std::string(PARLAB_CLI) + " " + args + " > " + out + " 2>&1").c_str());
  if (output != nullptr) {
    std::ifstream in(out);
    std::stringstream ss;
    ss << in.rdbuf();
    *output = ss.str();
  }
  return WEXITSTATUS(status);
}

TEST(Cli, ExitCodesAndOutputs) {
  std::string out;
  EXPECT_EQ(RunCli("analyze --problem 2spa --k 4 --protocol bisection --par avg-objective", &out), 0);
  EXPECT_EQ(json::parse(out)["rows"][0]["value"], "3");
  EXPECT_EQ(RunCli("analyze --problem tpg:c=4 --k 3 --protocol tpg-ref --par avg-objective --format csv", &out), 0);
  EXPECT_THAT(out, HasSubstr("47/32"));
  EXPECT_EQ(RunCli("analyze --problem 2spa --k 3 --protocol bisection-protocol", &out), 2);
  EXPECT_NE(RunCli("analyze --problem 2spa --k 3 --protocol bisection --format xml"), 0);
  EXPECT_NE(RunCli("frobnicate"), 0);
  EXPECT_EQ(RunCli("inducible " + std::string(PARLAB_FIXTURE_DIR) + "/pinwheel.json", &out), 0);
  EXPECT_EQ(json::parse(out)["rows"][0]["inducible"], false);
  EXPECT_EQ(RunCli("sweep-g --k 3", &out), 0);
  EXPECT_THAT(out, HasSubstr("g,avg_objective"));
  const std::string file = TempPath("tables.json");
  EXPECT_EQ(RunCli("tables --which 2 --kmax 2 --out " + file), 0);
  std::ifstream in(file);
  EXPECT_TRUE(json::parse(in)["checks"]["failed"] == 0);
  EXPECT_EQ(RunCli("check-formulas --kmax 3"), 0);

  // Same flags, same bytes.
  std::string a, b;
  RunCli("dist-conjecture --k 3 --trials 4 --seed 5", &a);
  RunCli("dist-conjecture --k 3 --trials 4 --seed 5", &b);
  const json ja = json::parse(a), jb = json::parse(b);
  EXPECT_EQ(ja["rows"], jb["rows"]);
  EXPECT_EQ(ja["config"], jb["config"]);
}

TEST(Cli, KCapFromEnvironment) {
  EXPECT_EQ(RunCli("analyze --problem mp --k 13 --protocol sealed --par avg-objective"), 2);
  EXPECT_EQ(RunCli("analyze --problem mp --k 2 --protocol sealed --par avg-objective"), 0);
  EXPECT_EQ(std::system(("PARLAB_KCAP=1 " + std::string(PARLAB_CLI) +
                         " analyze --problem mp --k 2 --protocol sealed > /dev/null 2>&1")
                            .c_str()) >> 8,
            2);
}

}  // namespace
}  // namespace parlab
