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

#ifndef PARLAB_BUILTIN_PROTOCOLS_H_
#define PARLAB_BUILTIN_PROTOCOLS_H_

#include <cstdint>
#include <functional>
#include <optional>
#include "absl/strings/string_view.h"

#include "absl/status/statusor.h"
#include "parlab/outcome_label.h"
#include "parlab/problems.h"
#include "parlab/protocol.h"
#include "parlab/rational.h"

namespace parlab {

// Party 1 reveals its value bit by bit, then party 2 does; the output is
// read off the problem at the single remaining cell. Works for any problem.
Protocol SealedBid(const ProblemSpec& problem);

// Millionaires: both parties announce which half of the common interval
// holds their value (party 1 first) until the answers differ; equal values
// after k rounds go to party 1.
absl::StatusOr<Protocol> BisectionProtocol(int k);

// Second-price auction with an ascending price. At each price p, party 2
// reports whether its value is exactly p, then party 1 does; the first
// to drop out loses and the price is its value. Both at 2^k - 1 goes to
// party 1.
absl::StatusOr<Protocol> EnglishAuction(int k);

// Second-price auction: at most `g` bisection rounds on the common
// interval. Once the halves differ, the loser alone reveals its value by
// bisecting its own interval (these steps do not count against g). If the
// rounds run out first, an English auction finishes the residual interval.
// g = 0 is the English auction and g = k the bisection auction.
absl::StatusOr<Protocol> BoundedBisectionAuction(int k, int g);
absl::StatusOr<Protocol> BisectionAuction(int k);

// Bisection auction whose splits put max(1, floor(c |I|)) values in the
// lower part of an interval I. Requires 0 < c < 1; c = 1/2 is the plain
// bisection auction.
absl::StatusOr<Protocol> CBisectionAuction(int k, const Rational& c);

// The two protocols for the appxa:n function: P reveals x below 2^(n-1) and
// only "upper half" otherwise; Q reveals floor(x/2) except at x = 2^n - 1.
struct AppendixAProtocols {
  Protocol p;
  Protocol q;
};
absl::StatusOr<AppendixAProtocols> MakeAppendixAProtocols(int n);

// Truthful public good with cost c: party 2 reveals x2 when x2 < c and only
// "x2 >= c" otherwise; party 1 then reveals whether the bridge is built and,
// if so, x1 when x1 < c and only "x1 >= c" otherwise. Build regions stay
// whole and the do-not-build region splits into exactly c column tiles.
absl::StatusOr<Protocol> TpgReferenceProtocol(int k, std::int64_t c);

// On colid:n, party 1 says whether x1 = 0, then party 2 reveals x2.
absl::StatusOr<Protocol> ZeroTestProtocol(int n);

// Runs `inner` on the column-reflected input x2 -> cols - 1 - x2 and maps its
// outputs through `relabel`.
Protocol ReflectColumns(const Protocol& inner, std::string name,
                        std::function<OutcomeLabel(const OutcomeLabel&)> relabel);

// Millionaires bisection protocol lifted to the public-good problem via the
// column reflection.
absl::StatusOr<Protocol> PublicGoodBisectionProtocol(int k);

// CLI lookup. Names: sealed, bisection, bisection-protocol, bisection-auction,
// english, bba (needs g), c-bisection (needs c), appxa-p, appxa-q, tpg-ref,
// zero-test. Rejects protocols that do not solve `problem`.
struct ProtocolParams {
  std::optional<int> g;
  std::optional<Rational> c;
};
absl::StatusOr<Protocol> MakeBuiltinProtocol(absl::string_view name, const ProblemSpec& problem,
                                             const ProtocolParams& params = {});

}  // namespace parlab

#endif  // PARLAB_BUILTIN_PROTOCOLS_H_
