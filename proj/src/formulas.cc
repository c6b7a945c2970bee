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

#include "parlab/formulas.h"

#include <algorithm>
#include <functional>
#include <map>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace parlab {
namespace {

Rational R(std::int64_t v) { return MakeRational(v); }

// Sum of 1..m for m = 2^e (or 2^e - 1 when `minus_one`).
Rational TriangleOfPow2(int e, bool minus_one) {
  const Rational m = Pow2(e) - (minus_one ? 1 : 0);
  return m * (m + 1) / 2;
}

using Checked = std::function<absl::StatusOr<Rational>(const FormulaParams&)>;

absl::StatusOr<int> NeedK(const FormulaParams& p) {
  if (!p.k.has_value()) return absl::InvalidArgumentError("formula needs k");
  if (*p.k < 1 || *p.k > 62) return absl::InvalidArgumentError(absl::StrCat("k=", *p.k, " outside [1, 62]"));
  return *p.k;
}

absl::StatusOr<std::pair<int, int>> NeedKG(const FormulaParams& p) {
  absl::StatusOr<int> k = NeedK(p);
  if (!k.ok()) return k.status();
  if (!p.g.has_value()) return absl::InvalidArgumentError("formula needs g");
  if (*p.g < 0 || *p.g > *k) return absl::InvalidArgumentError(absl::StrCat("g=", *p.g, " outside [0, k]"));
  return std::make_pair(*k, *p.g);
}

absl::StatusOr<int> NeedN(const FormulaParams& p) {
  if (!p.n.has_value()) return absl::InvalidArgumentError("formula needs n");
  if (*p.n < 2 || *p.n > 62) return absl::InvalidArgumentError(absl::StrCat("n=", *p.n, " outside [2, 62]"));
  return *p.n;
}

Rational BbaObjective(int k, int g) {
  return Rational(g + 3) / 2 - Pow2(g) / Pow2(k + 1) + 1 / Pow2(k + 1) - 1 / Pow2(g + 1);
}
Rational BbaWrt1(int k, int g) {
  return Rational(g + 5) / 4 - 1 / Pow2(g + 2) - 1 / Pow2(k - g + 1) - Rational(g - 2) / Pow2(k + 2);
}
Rational BbaWrt2(int k, int g) { return Rational(g + 5) / 4 - 1 / Pow2(g + 2) + Rational(g) / Pow2(k + 2); }

template <typename F>
Checked OnK(F f) {
  return [f](const FormulaParams& p) -> absl::StatusOr<Rational> {
    absl::StatusOr<int> k = NeedK(p);
    if (!k.ok()) return k.status();
    return f(*k);
  };
}

template <typename F>
Checked OnKG(F f) {
  return [f](const FormulaParams& p) -> absl::StatusOr<Rational> {
    auto kg = NeedKG(p);
    if (!kg.ok()) return kg.status();
    return f(kg->first, kg->second);
  };
}

template <typename F>
Checked OnN(F f) {
  return [f](const FormulaParams& p) -> absl::StatusOr<Rational> {
    absl::StatusOr<int> n = NeedN(p);
    if (!n.ok()) return n.status();
    return f(*n);
  };
}

Checked TileFormula(TileQuantity q) {
  return OnKG([q](int k, int g) { return TileCountClosedForm(q, g, k - g); });
}

const std::map<std::string, Checked, std::less<>>& Registry() {
  static const auto* registry = new std::map<std::string, Checked, std::less<>>{
      // millionaires
      {"mp_lower_avg_obj", OnK([](int k) -> Rational { return Pow2(k) - MakeRational(1, 2) + Pow2(-(k + 1)); })},
      {"mp_bisection_avg_obj", OnK([](int k) -> Rational { return 3 * Pow2(k - 1) - MakeRational(1, 2); })},
      {"mp_bisection_avg_subj", OnK([](int k) -> Rational { return MakeRational(k, 2) + 1; })},
      {"mp_largest_avg_obj", OnK([](int k) -> Rational { return (Pow2(2 * k) + 1) / 2; })},
      {"mp_bisection_tiles_one", OnK([](int k) -> Rational { return Pow2(k + 1) - 1; })},
      {"mp_bisection_tiles_two", OnK([](int k) -> Rational { return Pow2(k) - 1; })},
      // second-price auction
      {"spa_english_avg_obj", OnK([](int) -> Rational { return R(1); })},
      {"spa_english_avg_subj", OnK([](int) -> Rational { return R(1); })},
      {"spa_bba_avg_obj", OnKG(BbaObjective)},
      {"spa_bba_wrt1", OnKG(BbaWrt1)},
      {"spa_bba_wrt2", OnKG(BbaWrt2)},
      {"spa_bba_avg_subj", OnKG(BbaWrt2)},
      {"spa_ba_avg_obj", OnK([](int k) -> Rational { return MakeRational(k, 2) + 1; })},
      {"spa_ba_wrt1", OnK([](int k) -> Rational { return MakeRational(k + 3, 4) - Rational(k - 1) / Pow2(k + 2); })},
      {"spa_ba_wrt2", OnK([](int k) -> Rational { return MakeRational(k + 5, 4) + Rational(k - 1) / Pow2(k + 2); })},
      {"spa_ba_avg_subj", OnK([](int k) -> Rational { return MakeRational(k + 5, 4) + Rational(k - 1) / Pow2(k + 2); })},
      {"spa_sealed_avg_obj", OnK([](int k) -> Rational { return Pow2(k + 1) / 3 + 1 / (3 * Pow2(k)); })},
      {"spa_sealed_avg_subj", OnK([](int k) -> Rational { return Pow2(k) / 3 + 1 - 1 / (3 * Pow2(k)); })},
      {"spa_sealed_wrt1", OnK([](int k) -> Rational {
         // Party-2 wins reveal the row slice {x1} x (x1, n); party-1 wins are single cells.
         const Rational n = Pow2(k);
         return (n * (n + 1) / 2 + (n - 1) * n * (2 * n - 1) / 6) / (n * n);
       })},
      // truthful public good
      {"tpg_avg_obj",
       [](const FormulaParams& p) -> absl::StatusOr<Rational> {
         absl::StatusOr<int> k = NeedK(p);
         if (!k.ok()) return k.status();
         if (!p.c.has_value()) return absl::InvalidArgumentError("formula needs c");
         const Rational c = MakeRational(*p.c);
         if (*p.c < 1 || c > Pow2(*k) - 1) {
           return absl::InvalidArgumentError(absl::StrCat("c=", *p.c, " outside [1, 2^k - 1]"));
         }
         return 1 + c * c * c * (1 - 1 / (c * c)) / Pow2(2 * *k + 1);
       }},
      {"tpg_pg_limit", OnK([](int k) -> Rational { return Pow2(k - 1) - MakeRational(1, 2) + Pow2(-k); })},
      // the floor(x/2) example
      {"appxa_p_avg_obj", OnN([](int) -> Rational { return MakeRational(3, 2); })},
      {"appxa_q_avg_obj", OnN([](int n) -> Rational { return Pow2(n - 3) + 1; })},
      {"appxa_tiles", OnN([](int n) -> Rational { return Pow2(n - 1) + 1; })},
      // bounded-bisection tile statistics, with g bisections and k - g residual bits
      {"tiles_a", TileFormula(TileQuantity::kA)},
      {"tiles_b", TileFormula(TileQuantity::kB)},
      {"tiles_x", TileFormula(TileQuantity::kX)},
      {"tiles_y", TileFormula(TileQuantity::kY)},
      {"tiles_z", TileFormula(TileQuantity::kZ)},
      {"tiles_u", TileFormula(TileQuantity::kU)},
      {"tiles_v", TileFormula(TileQuantity::kV)},
      {"tiles_w", TileFormula(TileQuantity::kW)},
  };
  return *registry;
}

}  // namespace

absl::StatusOr<Rational> Formula(absl::string_view name, const FormulaParams& params) {
  const auto& registry = Registry();
  auto it = registry.find(name);
  if (it == registry.end()) return absl::NotFoundError(absl::StrCat("unknown formula '", name, "'"));
  return it->second(params);
}

std::vector<std::string> FormulaNames() {
  std::vector<std::string> names;
  for (const auto& [name, unused] : Registry()) names.push_back(name);
  return names;
}

char TileQuantityLetter(TileQuantity q) { return "abxyzuvw"[static_cast<int>(q)]; }

Rational TileCountClosedForm(TileQuantity q, int c, int i) {
  const int k = c + i;
  switch (q) {
    case TileQuantity::kA:
      return Pow2(c) * (Pow2(i) * (c + 2) - 1);
    case TileQuantity::kB:
      return Pow2(k - 1) * ((1 + Pow2(c)) * (Pow2(i) - 1) + Pow2(k) * c);
    case TileQuantity::kX:
      return Pow2(c - 1) * (Pow2(i) * c + Pow2(i + 1) - 2);
    case TileQuantity::kY:
      return Pow2(k - 2) * (Pow2(k) * c + Pow2(k) + Pow2(i) - Pow2(c + 1) + c);
    case TileQuantity::kZ:
      return Pow2(k - 1) * (Pow2(k) + 1);
    case TileQuantity::kU:
      return Pow2(k - 1) * (c + 2);
    case TileQuantity::kV:
      return Pow2(k - 2) * (Pow2(k) * (c + 1) + Pow2(i) - c - 2);
    case TileQuantity::kW:
      return Pow2(k - 1) * (Pow2(k) - 1);
  }
  return 0;
}

Rational TileCountRecurrence(TileQuantity q, int c, int i) {
  Rational a = Pow2(i + 1) - 1;
  Rational b = (Pow2(i) - 1) * Pow2(i);
  Rational x = Pow2(i) - 1;
  Rational y = TriangleOfPow2(i, true);
  Rational z = TriangleOfPow2(i, false);
  Rational u = Pow2(i);
  Rational v = Pow2(i - 1) * (Pow2(i) - 1);
  for (int step = 0; step < c; ++step) {
    const Rational m = Pow2(step + i);
    b = 2 * b + a * m + m * m;
    a = 2 * a + 2 * m;
    y = 2 * y + TriangleOfPow2(step + i, false) + m * x;
    x = 2 * x + m;
    z = 2 * z + m * m;
    v = 2 * v + m / 2 * (m - 1) + m * u;
    u = 2 * u + m;
  }
  switch (q) {
    case TileQuantity::kA:
      return a;
    case TileQuantity::kB:
      return b;
    case TileQuantity::kX:
      return x;
    case TileQuantity::kY:
      return y;
    case TileQuantity::kZ:
      return z;
    case TileQuantity::kU:
      return u;
    case TileQuantity::kV:
      return v;
    case TileQuantity::kW:
      return Pow2(c + i - 1) * (Pow2(c + i) - 1);
  }
  return 0;
}

}  // namespace parlab
