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

#include "parlab/builtin_protocols.h"

#include <limits>
#include <utility>
#include <vector>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "parlab/status_macros.h"

namespace parlab {
namespace {

absl::Status CheckBits(int k) {
  if (k < 1 || k > 30) return absl::InvalidArgumentError(absl::StrCat("k=", k, " outside [1, 30]"));
  return absl::OkStatus();
}

// ---------------------------------------------------------------------------
// Bisection family: bisection protocol, bisection / bounded-bisection /
// c-bisection auctions and the English auction share one state machine.

enum class Phase : std::uint8_t {
  kRoundFirst,   // rows == cols == common interval; party 1 announces its part
  kRoundSecond,  // party 2 announces its part of the common interval (cols)
  kLoserSearch,  // winner known; loser bisects its own interval
  kEnglishAsk2,  // rows == cols == [p, hi]; party 2 says whether x2 == p
  kEnglishAsk1,  // rows == [p, hi], cols == [p+1, hi]; party 1 says whether x1 == p
  kDone,
};

struct PhaseTag {
  Phase phase = Phase::kRoundFirst;
  int rounds = 0;
  int winner = 0;

  std::uint64_t Encode() const {
    return static_cast<std::uint64_t>(phase) | (static_cast<std::uint64_t>(rounds) << 8) |
           (static_cast<std::uint64_t>(winner) << 16);
  }
  static PhaseTag Decode(std::uint64_t tag) {
    return PhaseTag{static_cast<Phase>(tag & 0xff), static_cast<int>((tag >> 8) & 0xff),
                    static_cast<int>((tag >> 16) & 0xff)};
  }
};

class BisectionFamily {
 public:
  BisectionFamily(int max_rounds, Rational lower_fraction, bool auction)
      : max_rounds_(max_rounds), lower_fraction_(std::move(lower_fraction)), auction_(auction) {}

  Step operator()(const ProtocolState& state) const {
    const PhaseTag tag = PhaseTag::Decode(state.tag);
    switch (tag.phase) {
      case Phase::kRoundFirst: {
        const ValueSet& common = state.rows;
        if (common.size() == 1) return Leaf{Outcome(1, state)};
        if (tag.rounds >= max_rounds_) {
          ProtocolState english = state;
          english.tag = PhaseTag{Phase::kEnglishAsk2}.Encode();
          return (*this)(english);
        }
        const std::uint64_t low = LowerSize(common.size());
        const std::uint64_t next = PhaseTag{Phase::kRoundSecond, tag.rounds}.Encode();
        return Split{Party::kOne, common.Prefix(low), common.Suffix(low), next, next};
      }
      case Phase::kRoundSecond: {
        const ValueSet& common = state.cols;
        const std::uint64_t low = LowerSize(common.size());
        ValueSet lower = common.Prefix(low);
        ValueSet upper = common.Suffix(low);
        const bool row_in_lower = state.rows == lower;
        const std::uint64_t same = PhaseTag{Phase::kRoundFirst, tag.rounds + 1}.Encode();
        const Phase separated = auction_ ? Phase::kLoserSearch : Phase::kDone;
        return Split{Party::kTwo, std::move(lower), std::move(upper),
                     row_in_lower ? same : PhaseTag{separated, tag.rounds, 1}.Encode(),
                     row_in_lower ? PhaseTag{separated, tag.rounds, 2}.Encode() : same};
      }
      case Phase::kLoserSearch: {
        const Party loser = tag.winner == 1 ? Party::kTwo : Party::kOne;
        const ValueSet& candidates = state.side(loser);
        if (candidates.size() == 1) return Leaf{Outcome(tag.winner, state)};
        const std::uint64_t low = LowerSize(candidates.size());
        return Split{loser, candidates.Prefix(low), candidates.Suffix(low), state.tag, state.tag};
      }
      case Phase::kEnglishAsk2: {
        const ValueSet& remaining = state.cols;
        if (remaining.size() == 1) return Leaf{Outcome(1, state)};
        return Split{Party::kTwo, remaining.Prefix(1), remaining.Suffix(1), PhaseTag{Phase::kDone, 0, 1}.Encode(),
                     PhaseTag{Phase::kEnglishAsk1}.Encode()};
      }
      case Phase::kEnglishAsk1: {
        const ValueSet& remaining = state.rows;
        return Split{Party::kOne, remaining.Prefix(1), remaining.Suffix(1), PhaseTag{Phase::kDone, 0, 2}.Encode(),
                     PhaseTag{Phase::kEnglishAsk2}.Encode()};
      }
      case Phase::kDone:
        return Leaf{Outcome(tag.winner, state)};
    }
    return Leaf{OutcomeLabel::Value(-1)};
  }

 private:
  std::uint64_t LowerSize(std::uint64_t n) const {
    Rational scaled = lower_fraction_ * Rational(mpz_class(static_cast<unsigned long>(n)));
    mpz_class low;
    mpz_fdiv_q(low.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
    return std::max<std::uint64_t>(1, low.get_ui());
  }

  // The loser's candidate set is a single value whenever a leaf is reached.
  OutcomeLabel Outcome(int winner, const ProtocolState& state) const {
    if (!auction_) return OutcomeLabel::Winner(winner);
    return winner == 1 ? OutcomeLabel::WinnerPrice(1, state.cols.min()) : OutcomeLabel::WinnerPrice(2, state.rows.min());
  }

  int max_rounds_;
  Rational lower_fraction_;
  bool auction_;
};

constexpr int kUnboundedRounds = std::numeric_limits<std::uint8_t>::max();

// ---------------------------------------------------------------------------
// Class-reveal protocols: in each stage one party announces which class of
// a fixed partition holds its value, by halving the list of classes. A
// stage's classes may depend only on the silent party's candidates, which
// stay fixed while the speaker talks.

struct RevealStage {
  Party speaker;
  std::vector<ValueSet> classes;
};
using StagePlan = std::function<std::optional<RevealStage>(int stage, const ProtocolState& state)>;
using LeafLabel = std::function<OutcomeLabel(const ProtocolState& state)>;

constexpr std::uint64_t kClassMask = (std::uint64_t{1} << 28) - 1;

std::uint64_t EncodeReveal(int stage, std::uint64_t lo, std::uint64_t hi) {
  return static_cast<std::uint64_t>(stage) | (lo << 8) | (hi << 36);
}

Protocol ClassReveal(std::string name, Shape shape, StagePlan plan, LeafLabel label) {
  auto expand = [plan = std::move(plan), label = std::move(label)](const ProtocolState& state) -> Step {
    int stage = static_cast<int>(state.tag & 0xff);
    std::uint64_t lo = (state.tag >> 8) & kClassMask;
    std::uint64_t hi = (state.tag >> 36) & kClassMask;
    while (true) {
      std::optional<RevealStage> current = plan(stage, state);
      if (!current.has_value()) return Leaf{label(state)};
      if (hi == 0) {
        lo = 0;
        hi = current->classes.size();
      }
      if (hi - lo <= 1) {
        ++stage;
        lo = hi = 0;
        continue;
      }
      const std::uint64_t mid = (lo + hi) / 2;
      ValueSet b0;
      ValueSet b1;
      for (std::uint64_t i = lo; i < mid; ++i) b0 = b0.Union(current->classes[i]);
      for (std::uint64_t i = mid; i < hi; ++i) b1 = b1.Union(current->classes[i]);
      return Split{current->speaker, std::move(b0), std::move(b1), EncodeReveal(stage, lo, mid),
                   EncodeReveal(stage, mid, hi)};
    }
  };
  return Protocol(std::move(name), shape, std::move(expand));
}

std::vector<ValueSet> Singletons(std::uint32_t lo, std::uint32_t hi_exclusive) {
  std::vector<ValueSet> out;
  for (std::uint32_t v = lo; v < hi_exclusive; ++v) out.push_back(ValueSet::Single(v));
  return out;
}

}  // namespace

Protocol SealedBid(const ProblemSpec& problem) {
  auto expand = [problem](const ProtocolState& state) -> Step {
    for (Party p : {Party::kOne, Party::kTwo}) {
      const ValueSet& mine = state.side(p);
      if (mine.size() > 1) {
        const std::uint64_t half = mine.size() / 2;
        return Split{p, mine.Prefix(half), mine.Suffix(half)};
      }
    }
    return Leaf{problem.Evaluate(state.rect().first_cell())};
  };
  return Protocol("sealed", problem.shape(), std::move(expand));
}

absl::StatusOr<Protocol> BisectionProtocol(int k) {
  PARLAB_RETURN_IF_ERROR(CheckBits(k));
  return Protocol("bisection-protocol", Shape::Square(k), BisectionFamily(kUnboundedRounds, MakeRational(1, 2), false));
}

absl::StatusOr<Protocol> EnglishAuction(int k) {
  PARLAB_RETURN_IF_ERROR(CheckBits(k));
  return Protocol("english", Shape::Square(k), BisectionFamily(0, MakeRational(1, 2), true));
}

absl::StatusOr<Protocol> BoundedBisectionAuction(int k, int g) {
  PARLAB_RETURN_IF_ERROR(CheckBits(k));
  if (g < 0 || g > k) return absl::InvalidArgumentError(absl::StrCat("g=", g, " outside [0, k=", k, "]"));
  return Protocol(absl::StrCat("bba:g=", g), Shape::Square(k), BisectionFamily(g, MakeRational(1, 2), true));
}

absl::StatusOr<Protocol> BisectionAuction(int k) {
  PARLAB_RETURN_IF_ERROR(CheckBits(k));
  return Protocol("bisection-auction", Shape::Square(k), BisectionFamily(k, MakeRational(1, 2), true));
}

absl::StatusOr<Protocol> CBisectionAuction(int k, const Rational& c) {
  PARLAB_RETURN_IF_ERROR(CheckBits(k));
  if (c <= 0 || c >= 1) {
    return absl::InvalidArgumentError(absl::StrCat("c-bisection needs 0 < c < 1, got ", FormatRational(c)));
  }
  return Protocol(absl::StrCat("c-bisection:c=", FormatRational(c)), Shape::Square(k),
                  BisectionFamily(kUnboundedRounds, c, true));
}

absl::StatusOr<AppendixAProtocols> MakeAppendixAProtocols(int n) {
  PARLAB_ASSIGN_OR_RETURN(ProblemSpec problem, ProblemSpec::AppendixA(n));
  const std::uint32_t size = std::uint32_t{1} << n;
  const std::uint32_t half = size / 2;
  auto label = [problem](const ProtocolState& state) { return problem.Evaluate(state.rect().first_cell()); };

  std::vector<ValueSet> p_classes = Singletons(0, half);
  p_classes.push_back(ValueSet::Range(half, size - 1));
  std::vector<ValueSet> q_classes;
  for (std::uint32_t x = 0; x + 2 < size; x += 2) q_classes.push_back(ValueSet::Range(x, x + 1));
  q_classes.push_back(ValueSet::Single(size - 2));
  q_classes.push_back(ValueSet::Single(size - 1));

  auto one_stage = [](std::vector<ValueSet> classes) -> StagePlan {
    return [classes = std::move(classes)](int stage, const ProtocolState&) -> std::optional<RevealStage> {
      if (stage > 0) return std::nullopt;
      return RevealStage{Party::kOne, classes};
    };
  };
  return AppendixAProtocols{
      ClassReveal("appxa-p", problem.shape(), one_stage(std::move(p_classes)), label),
      ClassReveal("appxa-q", problem.shape(), one_stage(std::move(q_classes)), label)};
}

absl::StatusOr<Protocol> TpgReferenceProtocol(int k, std::int64_t c) {
  PARLAB_ASSIGN_OR_RETURN(ProblemSpec problem, ProblemSpec::TruthfulPublicGood(k, c));
  const std::uint32_t size = std::uint32_t{1} << k;
  const std::uint32_t cost = static_cast<std::uint32_t>(c);
  StagePlan plan = [size, cost](int stage, const ProtocolState& state) -> std::optional<RevealStage> {
    if (stage == 0) {
      std::vector<ValueSet> classes = Singletons(0, cost);
      classes.push_back(ValueSet::Range(cost, size - 1));
      return RevealStage{Party::kTwo, std::move(classes)};
    }
    if (stage == 1) {
      std::vector<ValueSet> classes;
      std::uint32_t first_build = 0;
      if (state.cols.size() == 1 && state.cols.min() < cost) {
        first_build = cost - state.cols.min();
        classes.push_back(ValueSet::Range(0, first_build - 1));  // do not build
      }
      for (ValueSet& s : Singletons(first_build, cost)) classes.push_back(std::move(s));
      classes.push_back(ValueSet::Range(cost, size - 1));
      return RevealStage{Party::kOne, std::move(classes)};
    }
    return std::nullopt;
  };
  auto label = [problem](const ProtocolState& state) { return problem.Evaluate(state.rect().first_cell()); };
  return ClassReveal(absl::StrCat("tpg-ref:c=", c), problem.shape(), std::move(plan), std::move(label));
}

absl::StatusOr<Protocol> ZeroTestProtocol(int n) {
  PARLAB_ASSIGN_OR_RETURN(ProblemSpec problem, ProblemSpec::ColumnIdentity(n));
  const std::uint32_t top = static_cast<std::uint32_t>(n);
  StagePlan plan = [top](int stage, const ProtocolState&) -> std::optional<RevealStage> {
    if (stage == 0) return RevealStage{Party::kOne, {ValueSet::Single(0), ValueSet::Range(1, top)}};
    if (stage == 1) return RevealStage{Party::kTwo, Singletons(0, top)};
    return std::nullopt;
  };
  auto label = [problem](const ProtocolState& state) { return problem.Evaluate(state.rect().first_cell()); };
  return ClassReveal("zero-test", problem.shape(), std::move(plan), std::move(label));
}

Protocol ReflectColumns(const Protocol& inner, std::string name,
                        std::function<OutcomeLabel(const OutcomeLabel&)> relabel) {
  const std::uint32_t cols = inner.shape().cols;
  auto expand = [inner, cols, relabel = std::move(relabel)](const ProtocolState& state) -> Step {
    ProtocolState mirrored = state;
    mirrored.cols = state.cols.Reflect(cols);
    Step step = inner.Expand(mirrored);
    if (Leaf* leaf = std::get_if<Leaf>(&step)) return Leaf{relabel(leaf->output)};
    Split split = std::get<Split>(std::move(step));
    if (split.speaker == Party::kTwo) {
      split.branch0 = split.branch0.Reflect(cols);
      split.branch1 = split.branch1.Reflect(cols);
    }
    return split;
  };
  return Protocol(std::move(name), inner.shape(), std::move(expand), inner.root().tag);
}

absl::StatusOr<Protocol> PublicGoodBisectionProtocol(int k) {
  PARLAB_ASSIGN_OR_RETURN(Protocol mp, BisectionProtocol(k));
  return ReflectColumns(mp, "pg-bisection", [](const OutcomeLabel& l) {
    return l.winner() == 1 ? OutcomeLabel::Build() : OutcomeLabel::DoNotBuild();
  });
}

absl::StatusOr<Protocol> MakeBuiltinProtocol(absl::string_view name, const ProblemSpec& problem,
                                             const ProtocolParams& params) {
  const ProblemKind kind = problem.kind();
  const int k = problem.k();
  auto mismatch = [&] {
    return absl::InvalidArgumentError(
        absl::StrCat("protocol '", name, "' does not solve problem '", problem.name(), "'"));
  };
  if (name == "sealed") return SealedBid(problem);
  if (name == "bisection" || name == "bisection-protocol") {
    if (kind == ProblemKind::kMillionaires) return BisectionProtocol(k);
    if (kind == ProblemKind::kPublicGood) return PublicGoodBisectionProtocol(k);
    if (kind == ProblemKind::kSecondPrice && name == "bisection") return BisectionAuction(k);
    return mismatch();
  }
  if (name == "bisection-auction" || name == "english" || name == "bba" || name == "c-bisection") {
    if (kind != ProblemKind::kSecondPrice) return mismatch();
    if (name == "bisection-auction") return BisectionAuction(k);
    if (name == "english") return EnglishAuction(k);
    if (name == "bba") {
      if (!params.g.has_value()) return absl::InvalidArgumentError("protocol 'bba' needs --g");
      return BoundedBisectionAuction(k, *params.g);
    }
    if (!params.c.has_value()) return absl::InvalidArgumentError("protocol 'c-bisection' needs --c");
    return CBisectionAuction(k, *params.c);
  }
  if (name == "appxa-p" || name == "appxa-q") {
    if (kind != ProblemKind::kAppendixA) return mismatch();
    PARLAB_ASSIGN_OR_RETURN(AppendixAProtocols pq, MakeAppendixAProtocols(problem.n()));
    return name == "appxa-p" ? pq.p : pq.q;
  }
  if (name == "tpg-ref") {
    if (kind != ProblemKind::kTruthfulPublicGood) return mismatch();
    return TpgReferenceProtocol(k, problem.c());
  }
  if (name == "zero-test") {
    if (kind != ProblemKind::kColumnIdentity) return mismatch();
    return ZeroTestProtocol(problem.n());
  }
  return absl::InvalidArgumentError(absl::StrCat("unknown protocol '", name, "'"));
}

}  // namespace parlab
