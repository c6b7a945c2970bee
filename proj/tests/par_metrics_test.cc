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
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "oracle.h"
#include "parlab/builtin_protocols.h"
#include "parlab/distribution.h"
#include "parlab/formulas.h"
#include "parlab/measures.h"
#include "parlab/par.h"
#include "parlab/problems.h"
#include "parlab/protocol.h"

namespace parlab {
namespace {

struct Bench {
  ProblemSpec problem;
  FunctionTable table;
  Protocol protocol;
  Tiling tiling;
};

Bench Make(absl::string_view problem_text, std::optional<int> k, absl::string_view name,
           ProtocolParams params = {}) {
  auto problem = ProblemSpec::Parse(problem_text, k);
  EXPECT_TRUE(problem.ok()) << problem.status();
  auto table = BuildTable(*problem);
  EXPECT_TRUE(table.ok()) << table.status();
  auto protocol = MakeBuiltinProtocol(name, *problem, params);
  EXPECT_TRUE(protocol.ok()) << protocol.status();
  auto tiling = InducedTiling(*protocol, *table);
  EXPECT_TRUE(tiling.ok()) << tiling.status();
  return Bench{*problem, *std::move(table), *std::move(protocol), *std::move(tiling)};
}

ParReport Analyze(const Bench& b, const Distribution& dist) {
  auto r = AnalyzeTiling(b.tiling, IdealReference::FromTable(b.table), dist);
  EXPECT_TRUE(r.ok()) << r.status();
  return *std::move(r);
}

ParReport Analyze(const Bench& b) { return Analyze(b, Distribution::Uniform(b.table.shape())); }

Rational F(absl::string_view name, FormulaParams p) {
  auto v = Formula(name, p);
  EXPECT_TRUE(v.ok()) << name << ": " << v.status();
  return v.ok() ? *v : Rational(-1);
}

Rational Gen(const Tiling& tiling, const Partition& ideal, const Measure& m, ParScope scope, Aggregate agg,
             const Distribution& dist) {
  auto r = GeneralizedPar(tiling, ideal, m, scope, agg, dist);
  EXPECT_TRUE(r.ok()) << r.status();
  return r.ok() ? r->value : Rational(-1);
}

TEST(WorstCase, Examples) {
  EXPECT_EQ(Analyze(Make("2spa", 3, "sealed")).worst.objective, 8);
  EXPECT_EQ(Analyze(Make("2spa", 3, "english")).worst.objective, 1);
  ParReport ba = Analyze(Make("2spa", 3, "bisection-auction"));
  EXPECT_EQ(ba.worst.objective, 8);
  EXPECT_EQ(ba.worst_witness[0], (Cell{0, 0}));

  ParReport bp = Analyze(Make("mp", 4, "bisection"));
  EXPECT_GE(bp.worst.subjective, 4);
  EXPECT_EQ(bp.worst.subjective, 16);
  // Singleton tiles against the whole "1 wins" region, and its x2 = 0 column.
  ParReport sealed = Analyze(Make("mp", 3, "sealed"));
  EXPECT_EQ(sealed.worst.objective, 36);
  EXPECT_EQ(sealed.worst.wrt2, 8);
  EXPECT_EQ(sealed.worst.subjective, 8);
}

TEST(WorstCase, RejectsNonRefiningTiling) {
  Bench b = Make("mp", 2, "sealed");
  auto whole = Tiling::Create(b.table.shape(), {{ValueSet::Range(0, 3), ValueSet::Range(0, 3)}});
  ASSERT_TRUE(whole.ok());
  IdealReference ideal = IdealReference::FromTable(b.table);
  EXPECT_FALSE(WorstCasePar(*whole, ideal, ParScope::kObjective).ok());
  EXPECT_FALSE(AveragePar(*whole, ideal, ParScope::kObjective, Distribution::Uniform(b.table.shape())).ok());
  EXPECT_FALSE(AveragePar(b.tiling, ideal, ParScope::kObjective, Distribution::Uniform(Shape{2, 2})).ok());
}

TEST(AverageCase, Examples) {
  EXPECT_EQ(Analyze(Make("2spa", 4, "bisection")).average.objective, 3);
  EXPECT_EQ(Analyze(Make("2spa", 4, "bba", {2, std::nullopt})).average.objective, MakeRational(73, 32));
  EXPECT_EQ(Analyze(Make("mp", 1, "bisection")).average.objective, MakeRational(5, 2));
  ParReport ba = Analyze(Make("2spa", 3, "bisection"));
  EXPECT_EQ(ba.average.wrt1, MakeRational(23, 16));
  EXPECT_EQ(ba.average.wrt2, MakeRational(33, 16));
  EXPECT_EQ(ba.average.subjective, MakeRational(33, 16));
  EXPECT_EQ(Analyze(Make("mp", 2, "bisection")).average.subjective, 2);
}

// The per-tile path and a per-cell sum agree on non-uniform inputs.
TEST(AverageCase, NonUniformMatchesOracle) {
  for (int k = 1; k <= 4; ++k) {
    for (absl::string_view name : {"bisection", "sealed", "english", "bisection-auction"}) {
      Bench b = Make("2spa", k, name);
      auto dist = Distribution::SeededRandom(b.table.shape(), 7 + k);
      ASSERT_TRUE(dist.ok());
      std::vector<Rational> w;
      for (std::uint64_t i = 0; i < b.table.shape().cell_count(); ++i) w.push_back(dist->mass(b.table.shape().cell_at(i)));
      ParReport r = Analyze(b, *dist);
      oracle::CellData d = oracle::Collect(b.problem, b.protocol);
      EXPECT_EQ(r.average.objective, oracle::AveragePar(d, oracle::View::kOutsider, &w));
      EXPECT_EQ(r.average.wrt1, oracle::AveragePar(d, oracle::View::kParty1, &w));
      EXPECT_EQ(r.average.wrt2, oracle::AveragePar(d, oracle::View::kParty2, &w));
    }
  }
}

TEST(PerfectPrivacy, Examples) {
  const PrivacyMode modes[] = {PrivacyMode::kObjective, PrivacyMode::kWrt1, PrivacyMode::kWrt2,
                               PrivacyMode::kSubjective};
  for (int k = 1; k <= 5; ++k) {
    Bench english = Make("2spa", k, "english");
    Bench sealed = Make("2spa", k, "sealed");
    for (PrivacyMode m : modes) {
      EXPECT_TRUE(IsPerfectlyPrivate(english.tiling, english.table, m));
      // At k=1 every row of the table holds distinct labels.
      if (k >= 2 || m == PrivacyMode::kObjective || m == PrivacyMode::kWrt2) {
        EXPECT_FALSE(IsPerfectlyPrivate(sealed.tiling, sealed.table, m)) << "k=" << k << " " << ModeName(m);
      }
    }
  }
  Bench one = Make("2spa", 1, "sealed");
  EXPECT_TRUE(IsPerfectlyPrivate(one.tiling, one.table, PrivacyMode::kWrt1));
  // PAR 1 in a mode is equivalent to perfect privacy in that mode.
  for (const auto& [problem, name, g] : std::vector<std::tuple<std::string, std::string, int>>{
           {"2spa", "bba", 0}, {"2spa", "bba", 1}, {"2spa", "bba", 3}, {"mp", "bisection", 0},
           {"mp", "sealed", 0}, {"tpg:c=0", "tpg-ref", 0}, {"tpg:c=1", "tpg-ref", 0}, {"pg", "bisection", 0}}) {
    Bench b = Make(problem, 3, name, {g, std::nullopt});
    ParReport r = Analyze(b);
    for (PrivacyMode m : modes) {
      EXPECT_GE(r.average.get(m), 1);
      EXPECT_GE(r.worst.get(m), r.average.get(m));
      EXPECT_EQ(r.average.get(m) == 1, IsPerfectlyPrivate(b.tiling, b.table, m)) << problem << " " << name;
      EXPECT_EQ(r.worst.get(m) == 1, IsPerfectlyPrivate(b.tiling, b.table, m));
    }
    EXPECT_EQ(r.average.subjective, std::max(r.average.wrt1, r.average.wrt2));
    EXPECT_EQ(r.worst.subjective, std::max(r.worst.wrt1, r.worst.wrt2));
  }
}

TEST(MillionairesLowerBound, HoldsForEveryProtocol) {
  for (int k = 1; k <= 8; ++k) {
    const Rational bound = F("mp_lower_avg_obj", {.k = k});
    EXPECT_EQ(bound, Pow2(k) - MakeRational(1, 2) + Pow2(-(k + 1)));
    EXPECT_GE(Analyze(Make("mp", k, "bisection")).average.objective, bound);
    EXPECT_GE(Analyze(Make("mp", k, "sealed")).average.objective, bound);
  }
}

TEST(Distribution, Examples) {
  Distribution u = Distribution::Uniform(Shape::Square(2));
  for (std::uint32_t r = 0; r < 4; ++r) {
    for (std::uint32_t c = 0; c < 4; ++c) EXPECT_EQ(u.mass({r, c}), MakeRational(1, 16));
  }
  std::vector<Rational> half = {MakeRational(1, 2), MakeRational(1, 2)};
  std::vector<Rational> first = {MakeRational(1), MakeRational(0)};
  auto p = Distribution::Product(half, first);
  ASSERT_TRUE(p.ok());
  EXPECT_EQ(p->mass({1, 0}), MakeRational(1, 2));
  EXPECT_EQ(p->mass({0, 1}), 0);
  EXPECT_EQ(p->Mass(ValueSet::Range(0, 1), ValueSet::Single(0)), 1);

  std::vector<std::tuple<Cell, Rational>> entries;
  for (std::uint32_t i = 0; i < 63; ++i) entries.emplace_back(Shape::Square(3).cell_at(i), MakeRational(1, 64));
  EXPECT_FALSE(Distribution::FromEntries(Shape::Square(3), entries).ok());
  entries.emplace_back(Cell{7, 7}, MakeRational(1, 64));
  EXPECT_TRUE(Distribution::FromEntries(Shape::Square(3), entries).ok());
  std::vector<std::tuple<Cell, Rational>> negative = {{Cell{0, 0}, MakeRational(3, 2)},
                                                      {Cell{0, 1}, MakeRational(-1, 2)}};
  EXPECT_FALSE(Distribution::FromEntries(Shape::Square(1), negative).ok());
  std::vector<Rational> neg = {MakeRational(-1), MakeRational(2)};
  EXPECT_FALSE(Distribution::Product(neg, half).ok());
}

TEST(Distribution, SeededRandomIsDeterministicAndNormalized) {
  auto a = Distribution::SeededRandom(Shape::Square(3), 42);
  auto b = Distribution::SeededRandom(Shape::Square(3), 42);
  auto c = Distribution::SeededRandom(Shape::Square(3), 43);
  ASSERT_TRUE(a.ok() && b.ok() && c.ok());
  Rational total = 0;
  bool differs = false;
  for (std::uint64_t i = 0; i < 64; ++i) {
    const Cell cell = Shape::Square(3).cell_at(i);
    EXPECT_EQ(a->mass(cell), b->mass(cell));
    differs |= a->mass(cell) != c->mass(cell);
    EXPECT_GE(a->mass(cell), 0);
    total += a->mass(cell);
  }
  EXPECT_EQ(total, 1);
  EXPECT_TRUE(differs);
}

TEST(Distribution, JsonRoundTrip) {
  const Shape s = Shape::Square(2);
  auto doc = nlohmann::json::parse(R"({"type":"product","p1":["1/2","1/4","1/8","1/8"],"p2":["1","0","0","3"]})");
  auto p = DistributionFromJson(doc, s);
  ASSERT_TRUE(p.ok()) << p.status();
  EXPECT_EQ(p->mass({0, 3}), MakeRational(3, 8));
  auto back = DistributionFromJson(DistributionToJson(*p), s);
  ASSERT_TRUE(back.ok()) << back.status();
  for (std::uint64_t i = 0; i < 16; ++i) EXPECT_EQ(back->mass(s.cell_at(i)), p->mass(s.cell_at(i)));

  auto table = DistributionFromJson(
      nlohmann::json::parse(R"({"type":"table","entries":[[0,0,"1/3"],[3,3,"2/3"]]})"), s);
  ASSERT_TRUE(table.ok()) << table.status();
  EXPECT_EQ(table->mass({3, 3}), MakeRational(2, 3));
  auto table_back = DistributionFromJson(DistributionToJson(*table), s);
  ASSERT_TRUE(table_back.ok());
  EXPECT_EQ(table_back->mass({0, 0}), MakeRational(1, 3));

  EXPECT_TRUE(DistributionFromJson(nlohmann::json::parse(R"({"type":"uniform"})"), s).ok());
  EXPECT_FALSE(DistributionFromJson(nlohmann::json::parse(R"({"type":"table","entries":[[0,0,"1/2"]]})"), s).ok());
  EXPECT_FALSE(DistributionFromJson(nlohmann::json::parse(R"({"type":"gaussian"})"), s).ok());
}

TEST(Measures, Examples) {
  const Shape s = Shape::Square(2);
  std::vector<Cell> single = {{1, 1}};
  std::vector<Cell> all;
  for (std::uint64_t i = 0; i < 16; ++i) all.push_back(s.cell_at(i));
  auto discrete = NamedDistance("discrete");
  ASSERT_TRUE(discrete.ok());

  EXPECT_EQ(*MaxDistanceMeasure(*discrete).evaluate(single, single[0]), 1);
  EXPECT_EQ(*ProbabilityMassMeasure(Distribution::Uniform(s)).evaluate(all, all[0]), 1);
  EXPECT_EQ(*CardinalityMeasure().evaluate(all, all[0]), 16);
  EXPECT_EQ(*AdditiveDistanceMeasure(*discrete).evaluate(all, all[0]), 16);
  EXPECT_EQ(*MaxDistanceMeasure(*discrete).evaluate(all, all[0]), 2);

  auto l1 = NamedDistance("l1");
  ASSERT_TRUE(l1.ok());
  EXPECT_EQ(*AdditiveDistanceMeasure(*l1).evaluate(all, Cell{0, 0}), 1 + 48);
  EXPECT_EQ(*MaxDistanceMeasure(*l1).evaluate(all, Cell{0, 0}), 7);
  EXPECT_EQ(*RelativeDiameterMeasure(*l1).evaluate(all, Cell{0, 0}), 7);
  EXPECT_EQ(*RelativeDiameterMeasure(*l1).evaluate(all, Cell{3, 1}), MakeRational(7, 4));
  EXPECT_EQ(*RelativeDiameterMeasure(*l1).evaluate(single, single[0]), MakeRational(1, 2));

  auto pd = PlausibleDeniabilityMeasure(Distribution::Uniform(s), *discrete, 1);
  ASSERT_TRUE(pd.ok());
  EXPECT_EQ(*pd->evaluate(all, all[0]), 1);
  EXPECT_FALSE(PlausibleDeniabilityMeasure(Distribution::Uniform(s), *discrete, 0).ok());
  EXPECT_FALSE(PlausibleDeniabilityMeasure(Distribution::Uniform(s), *discrete, MakeRational(3, 2)).ok());
  auto point = Distribution::PointMass(s, {3, 3});
  ASSERT_TRUE(point.ok());
  auto pd_point = PlausibleDeniabilityMeasure(*point, *discrete, MakeRational(1, 2));
  ASSERT_TRUE(pd_point.ok());
  EXPECT_FALSE(pd_point->evaluate(single, single[0]).ok());
  EXPECT_FALSE(NamedDistance("hamming").ok());
  EXPECT_FALSE(NamedMeasure("entropy", Distribution::Uniform(s), *discrete, 1).ok());
}

// 1 + the largest d0 such that cells at distance >= d0 carry a t share.
Rational DeniabilityOracle(const std::vector<Cell>& block, const Cell& x, const Distribution& dist,
                           const Distance& d, const Rational& t) {
  Rational total = dist.Mass(block);
  Rational best = 0;
  for (const Cell& candidate : block) {
    const Rational d0 = d(x, candidate);
    Rational far = 0;
    for (const Cell& y : block) {
      if (d(x, y) >= d0) far += dist.mass(y);
    }
    if (far / total >= t && d0 > best) best = d0;
  }
  return best + 1;
}

TEST(Measures, PlausibleDeniabilityMatchesBruteForce) {
  const Shape s = Shape::Square(3);
  auto dist = Distribution::SeededRandom(s, 5, 4);
  ASSERT_TRUE(dist.ok());
  std::vector<Cell> block;
  for (std::uint32_t r = 1; r < 6; ++r) {
    for (std::uint32_t c = 2; c < 5; ++c) {
      if (dist->mass({r, c}) > 0) block.push_back({r, c});
    }
  }
  ASSERT_GE(block.size(), 3u);
  for (absl::string_view dn : {"discrete", "l1", "linf", "row", "col"}) {
    auto d = NamedDistance(dn);
    ASSERT_TRUE(d.ok());
    for (const Rational& t : {MakeRational(1, 10), MakeRational(1, 3), MakeRational(1, 2), MakeRational(9, 10),
                              MakeRational(1)}) {
      auto m = PlausibleDeniabilityMeasure(*dist, *d, t);
      ASSERT_TRUE(m.ok());
      for (const Cell& x : block) {
        auto v = m->evaluate(block, x);
        ASSERT_TRUE(v.ok());
        EXPECT_EQ(*v, DeniabilityOracle(block, x, *dist, *d, t)) << dn << " t=" << t.get_str();
      }
    }
  }
}

TEST(GeneralizedPar, CardinalityReproducesAveragePar) {
  for (int k = 1; k <= 4; ++k) {
    for (const auto& [problem, name] : std::vector<std::pair<std::string, std::string>>{
             {"mp", "bisection"}, {"mp", "sealed"}, {"2spa", "bisection"}, {"2spa", "english"}, {"pg", "bisection"}}) {
      Bench b = Make(problem, k, name);
      ParReport r = Analyze(b);
      Partition ideal = IdealPartition(b.table);
      Distribution u = Distribution::Uniform(b.table.shape());
      EXPECT_EQ(Gen(b.tiling, ideal, CardinalityMeasure(), ParScope::kObjective, Aggregate::kAverage, u),
                r.average.objective);
      EXPECT_EQ(Gen(b.tiling, ideal, CardinalityMeasure(), ParScope::kObjective, Aggregate::kWorst, u),
                r.worst.objective);
      EXPECT_EQ(Gen(b.tiling, ideal, CardinalityMeasure(), ParScope::kWrt1, Aggregate::kAverage, u), r.average.wrt1);
      EXPECT_EQ(Gen(b.tiling, ideal, CardinalityMeasure(), ParScope::kWrt2, Aggregate::kWorst, u), r.worst.wrt2);
      auto discrete = NamedDistance("discrete");
      EXPECT_EQ(Gen(b.tiling, ideal, AdditiveDistanceMeasure(*discrete), ParScope::kObjective, Aggregate::kAverage, u),
                r.average.objective);
    }
  }
}

Distribution Fig6(int n, const Rational& first_row_share) {
  const Shape s{static_cast<std::uint32_t>(n + 1), static_cast<std::uint32_t>(n)};
  std::vector<std::tuple<Cell, Rational>> entries;
  for (std::uint32_t i = 0; i < static_cast<std::uint32_t>(n); ++i) {
    entries.emplace_back(Cell{0, i}, first_row_share / n);
    for (std::uint32_t j = 1; j <= static_cast<std::uint32_t>(n); ++j) {
      entries.emplace_back(Cell{j, i}, (1 - first_row_share) / (n * n));
    }
  }
  auto d = Distribution::FromEntries(s, entries);
  EXPECT_TRUE(d.ok()) << d.status();
  return *std::move(d);
}

TEST(GeneralizedPar, ProbabilityMassCannotTellSkewedDistributionsApart) {
  for (int n : {4, 8}) {
    Bench b = Make("colid:n=" + std::to_string(n), std::nullopt, "zero-test");
    EXPECT_EQ(b.tiling.size(), 2u * n);
    Partition ideal = IdealPartition(b.table);
    for (const Rational& eps : {MakeRational(1, 8), MakeRational(1, 16)}) {
      Distribution d1 = Fig6(n, eps);
      Distribution d2 = Fig6(n, 1 - eps);
      EXPECT_EQ(Gen(b.tiling, ideal, ProbabilityMassMeasure(d1), ParScope::kObjective, Aggregate::kAverage, d1), 2);
      EXPECT_EQ(Gen(b.tiling, ideal, ProbabilityMassMeasure(d2), ParScope::kObjective, Aggregate::kAverage, d2), 2);
    }
  }
}

TEST(GeneralizedPar, ZeroMassCellsAndRatios) {
  Bench b = Make("mp", 2, "sealed");
  Partition ideal = IdealPartition(b.table);
  auto point = Distribution::PointMass(b.table.shape(), {0, 0});
  ASSERT_TRUE(point.ok());
  // Only (0,0) counts; its tile has zero mass under any other point.
  auto r = GeneralizedPar(b.tiling, ideal, CardinalityMeasure(), ParScope::kObjective, Aggregate::kWorst, *point);
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(r->value, 10);
  ASSERT_TRUE(r->witness.has_value());
  EXPECT_EQ(*r->witness, (Cell{0, 0}));

  // Only (3,3) carries weight below; it lies in the "1 wins" region.
  auto other = Distribution::PointMass(b.table.shape(), {3, 3});
  auto two_wins = Distribution::PointMass(b.table.shape(), {0, 3});
  ASSERT_TRUE(other.ok() && two_wins.ok());
  auto zero = GeneralizedPar(b.tiling, ideal, ProbabilityMassMeasure(*two_wins), ParScope::kObjective,
                             Aggregate::kAverage, *other);
  ASSERT_TRUE(zero.ok());
  EXPECT_EQ(zero->value, 1);
  EXPECT_EQ(zero->zero_over_zero, 1u);
  EXPECT_FALSE(zero->unbounded);

  auto unbounded = GeneralizedPar(b.tiling, ideal, ProbabilityMassMeasure(*point), ParScope::kObjective,
                                  Aggregate::kWorst, *other);
  ASSERT_TRUE(unbounded.ok());
  EXPECT_TRUE(unbounded->unbounded);
}

TEST(Formulas, Examples) {
  for (int k = 1; k <= 10; ++k) {
    EXPECT_EQ(F("spa_bba_avg_obj", {.k = k, .g = 0}), 1);
    EXPECT_EQ(F("spa_bba_avg_obj", {.k = k, .g = k}), MakeRational(k, 2) + 1);
    EXPECT_EQ(F("spa_bba_avg_obj", {.k = k, .g = k}), F("spa_ba_avg_obj", {.k = k}));
  }
  EXPECT_EQ(F("tpg_avg_obj", {.k = 3, .c = 4}), MakeRational(47, 32));
  EXPECT_EQ(F("spa_sealed_avg_obj", {.k = 3}), MakeRational(43, 8));
  EXPECT_EQ(F("spa_sealed_avg_subj", {.k = 3}), MakeRational(29, 8));
  EXPECT_EQ(F("mp_bisection_avg_obj", {.k = 3}), MakeRational(23, 2));
  EXPECT_EQ(F("mp_bisection_avg_subj", {.k = 3}), MakeRational(5, 2));
  EXPECT_EQ(F("spa_ba_wrt1", {.k = 3}), MakeRational(23, 16));
  EXPECT_EQ(F("spa_ba_wrt2", {.k = 3}), MakeRational(33, 16));
  EXPECT_EQ(F("spa_bba_avg_obj", {.k = 4, .g = 2}), MakeRational(73, 32));
  EXPECT_EQ(F("tiles_a", {.k = 4, .g = 2}), 60);
}

TEST(Formulas, DomainErrors) {
  EXPECT_FALSE(Formula("tpg_avg_obj", {.k = 3, .c = 0}).ok());
  EXPECT_FALSE(Formula("tpg_avg_obj", {.k = 3, .c = 8}).ok());
  EXPECT_FALSE(Formula("spa_bba_avg_obj", {.k = 3, .g = 4}).ok());
  EXPECT_FALSE(Formula("spa_bba_avg_obj", {.k = 3}).ok());
  EXPECT_FALSE(Formula("no_such_formula", {.k = 3}).ok());
  EXPECT_FALSE(Formula("mp_bisection_avg_obj", {.k = 0}).ok());
  for (const std::string& name : FormulaNames()) EXPECT_FALSE(Formula(name, {}).ok()) << name;
}

TEST(Formulas, TileCountClosedFormsMatchRecurrences) {
  for (int c = 0; c <= 10; ++c) {
    for (int i = 0; c + i <= 12; ++i) {
      for (TileQuantity q : kAllTileQuantities) {
        EXPECT_EQ(TileCountClosedForm(q, c, i), TileCountRecurrence(q, c, i))
            << TileQuantityLetter(q) << " c=" << c << " i=" << i;
      }
    }
  }
  EXPECT_EQ(TileCountClosedForm(TileQuantity::kA, 2, 2), 60);
}

TEST(TileCounts, MeasuredCountsMatchClosedForms) {
  for (int k = 1; k <= 7; ++k) {
    for (int g = 0; g <= k; ++g) {
      Bench b = Make("2spa", k, "bba", {g, std::nullopt});
      auto counts = CountAuctionTiles(b.tiling, b.table);
      ASSERT_TRUE(counts.ok());
      const std::uint64_t measured[] = {counts->tiles,          counts->tile_deficit,  counts->row_slices_two,
                                        counts->row_deficit_two, counts->row_slices_one, counts->col_slices_one,
                                        counts->col_deficit_one, counts->col_slices_two};
      int idx = 0;
      for (TileQuantity q : kAllTileQuantities) {
        EXPECT_EQ(Rational(static_cast<unsigned long>(measured[idx++])), TileCountClosedForm(q, g, k - g))
            << TileQuantityLetter(q) << " k=" << k << " g=" << g;
      }
      EXPECT_EQ(counts->tiles, b.tiling.size());
    }
  }
}

}  // namespace
}  // namespace parlab
