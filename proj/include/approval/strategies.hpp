// Copyright 2026 The Approval Heuristics Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Ballot constructors for the truthful vote and the two fast-and-frugal
// heuristics (take-the-X-best, follow-the-leader), the exhaustive best
// response, and a classifier that labels an observed ballot with every
// strategy that would have produced it.

#ifndef APPROVAL_STRATEGIES_HPP
#define APPROVAL_STRATEGIES_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "approval/election.hpp"
#include "approval/error.hpp"
#include "approval/scalar.hpp"
#include "approval/uncertainty.hpp"

namespace approval {

/// Utilities at or below this are "trivial" for the truthful-nontrivial vote.
inline constexpr double kTrivialUtility = 0.01;

/// Exhaustive search visits 2^m ballots.
inline constexpr std::size_t kMaxBestResponseCandidates = 25;

struct StrategyKind {
  // Declaration order is the display order of classifier labels.
  enum class Tag {
    kBestResponse,
    kTruthful,
    kTruthfulNontrivial,
    kTakeXBest,
    kFollowTheLeader,
    kLeaderPlusBest,
    kAbstain,
    kOther,
  };

  Tag tag = Tag::kOther;
  int x = 0;
  double epsilon = 0.0;

  static StrategyKind best_response() { return {Tag::kBestResponse}; }
  static StrategyKind truthful() { return {Tag::kTruthful}; }
  static StrategyKind truthful_nontrivial(double eps) { return {Tag::kTruthfulNontrivial, 0, eps}; }
  static StrategyKind take_x_best(int x) { return {Tag::kTakeXBest, x}; }
  static StrategyKind follow_the_leader() { return {Tag::kFollowTheLeader}; }
  static StrategyKind leader_plus_best() { return {Tag::kLeaderPlusBest}; }
  static StrategyKind abstain() { return {Tag::kAbstain}; }
  static StrategyKind other() { return {Tag::kOther}; }

  std::string label() const {
    switch (tag) {
      case Tag::kBestResponse: return "optimal";
      case Tag::kTruthful: return "truthful";
      case Tag::kTruthfulNontrivial: return "truthful-nontrivial";
      case Tag::kTakeXBest: return "take-x-best(" + std::to_string(x) + ")";
      case Tag::kFollowTheLeader: return "follow-the-leader";
      case Tag::kLeaderPlusBest: return "leader-plus-best";
      case Tag::kAbstain: return "abstain";
      case Tag::kOther: return "other";
    }
    return "other";
  }

  friend auto operator<=>(const StrategyKind&, const StrategyKind&) = default;
};

struct ClassificationResult {
  std::vector<StrategyKind> labels;

  bool has(StrategyKind::Tag tag) const {
    return std::any_of(labels.begin(), labels.end(), [&](const StrategyKind& k) { return k.tag == tag; });
  }

  /// Labels joined with ';' in display order, e.g. "optimal;take-x-best(1)".
  std::string joined(char sep = ';') const {
    std::string out;
    for (const auto& k : labels) {
      if (!out.empty()) out += sep;
      out += k.label();
    }
    return out;
  }
};

/// Approves every candidate with strictly positive utility.
inline Ballot truthful(const UtilityFunction& u) {
  Ballot b;
  for (std::size_t c = 0; c < u.size(); ++c) {
    if (u.micros(c) > 0) b.insert(c);
  }
  return b;
}

/// Truthful vote that ignores utilities at or below `epsilon`.
inline Ballot truthful_nontrivial(const UtilityFunction& u, double epsilon = kTrivialUtility) {
  if (!(epsilon >= 0.0)) {
    throw Error(ErrorCode::kDomain, "epsilon must be non-negative");
  }
  Ballot b;
  for (std::size_t c = 0; c < u.size(); ++c) {
    if (u.micros(c) > 0 && u.value(c) > epsilon) b.insert(c);
  }
  return b;
}

enum class XBound {
  kPermissive,   ///< 1 <= X <= #positive
  kStrict,  ///< 1 <= X < #positive
};

/// Positive-utility candidates ordered best first; utility ties go to the
/// candidate earlier in `priority`.
inline std::vector<std::size_t> preference_order(const UtilityFunction& u,
                                                 const std::vector<std::size_t>& priority) {
  std::vector<std::size_t> rank(u.size(), u.size());
  for (std::size_t pos = 0; pos < priority.size(); ++pos) {
    if (priority[pos] < rank.size()) rank[priority[pos]] = pos;
  }
  std::vector<std::size_t> order;
  for (std::size_t c = 0; c < u.size(); ++c) {
    if (u.micros(c) > 0) order.push_back(c);
  }
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (u.micros(a) != u.micros(b)) return u.micros(a) > u.micros(b);
    return rank[a] < rank[b];
  });
  return order;
}

/// The X highest-utility positive candidates.
inline Ballot take_x_best(const UtilityFunction& u, int x, const std::vector<std::size_t>& priority,
                          XBound bound = XBound::kPermissive) {
  const std::vector<std::size_t> order = preference_order(u, priority);
  const int positives = static_cast<int>(order.size());
  const int upper = bound == XBound::kPermissive ? positives : positives - 1;
  if (x < 1 || x > upper) {
    throw Error(ErrorCode::kDomain,
                "take-the-X-best needs 1 <= X " + std::string(bound == XBound::kPermissive ? "<=" : "<") +
                    " number of positive-utility candidates (" + std::to_string(positives) +
                    "), got X = " + std::to_string(x));
  }
  Ballot b;
  for (int i = 0; i < x; ++i) b.insert(order[static_cast<std::size_t>(i)]);
  return b;
}

inline Ballot take_x_best(const UtilityFunction& u, int x, const ElectionState& state,
                          XBound bound = XBound::kPermissive) {
  check_utilities(state, u);
  return take_x_best(u, x, state.priority(), bound);
}

/// Number of positive-utility candidates, i.e. the largest permissive X.
inline int max_x(const UtilityFunction& u) { return static_cast<int>(truthful(u).size()); }

/// Every candidate currently holding the maximum tally.
inline Ballot follow_the_leader(const ElectionState& state) {
  Ballot leaders;
  if (state.candidate_count() == 0) return leaders;
  const auto top = *std::max_element(state.tallies().begin(), state.tallies().end());
  for (std::size_t c = 0; c < state.candidate_count(); ++c) {
    if (state.tally(c) == top) leaders.insert(c);
  }
  return leaders;
}

/// {L ∪ {best} : L a non-empty subset of the current leaders}, deduplicated
/// and in canonical order. Empty if no candidate has positive utility.
inline std::vector<Ballot> leader_plus_best(const ElectionState& state, const UtilityFunction& u) {
  check_utilities(state, u);
  std::vector<Ballot> family;
  if (max_x(u) == 0) return family;
  const Ballot best = take_x_best(u, 1, state);
  const std::uint64_t leaders = follow_the_leader(state).mask();
  // Non-empty submasks of the leader mask.
  for (std::uint64_t sub = leaders; sub != 0; sub = (sub - 1) & leaders) {
    const Ballot b = CandidateSet::from_mask(sub) | best;
    if (std::find(family.begin(), family.end(), b) == family.end()) family.push_back(b);
  }
  std::sort(family.begin(), family.end(), canonical_less);
  return family;
}

template <typename Scalar>
struct BasicBestResponse {
  /// All maximizing ballots, canonical order (fewest approvals first).
  std::vector<Ballot> argmax;
  Scalar value{};
  /// Number of ballots searched (2^m).
  std::uint64_t searched = 0;

  Ballot canonical() const { return argmax.front(); }
  bool contains(Ballot b) const { return std::find(argmax.begin(), argmax.end(), b) != argmax.end(); }
  /// True when every possible ballot attains the maximum, i.e. the vote cannot
  /// change the voter's expected outcome.
  bool degenerate() const { return argmax.size() == searched; }
};

using BestResponse = BasicBestResponse<double>;

/// Expected utility of every ballot, indexed by ballot mask.
template <typename Scalar = double>
std::vector<Scalar> ballot_values(const ElectionState& state, const UtilityFunction& u,
                                  const BasicFutureModel<Scalar>& model,
                                  const SimulationLimits& limits = {}) {
  check_utilities(state, u);
  const std::size_t m = state.candidate_count();
  if (m > kMaxBestResponseCandidates) {
    throw Error(ErrorCode::kCapacity,
                std::to_string(m) + " candidates exceeds the exhaustive-search bound of " +
                    std::to_string(kMaxBestResponseCandidates) +
                    "; a polynomial-time manipulation algorithm would be needed");
  }
  validate_model(model, m, limits);
  const std::uint64_t count = std::uint64_t{1} << m;
  std::vector<Scalar> values;
  values.reserve(count);
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    values.push_back(expected_utility<Scalar>(state, Ballot::from_mask(mask), u, model, limits));
  }
  return values;
}

/// Every ballot maximizing expected utility under the state's tie-break rule
/// and the given future model.
template <typename Scalar = double>
BasicBestResponse<Scalar> best_response(const ElectionState& state, const UtilityFunction& u,
                                        const BasicFutureModel<Scalar>& model = {0},
                                        const SimulationLimits& limits = {}) {
  const std::vector<Scalar> values = ballot_values<Scalar>(state, u, model, limits);
  BasicBestResponse<Scalar> br;
  br.searched = values.size();
  br.value = *std::max_element(values.begin(), values.end());
  for (std::uint64_t mask = 0; mask < values.size(); ++mask) {
    if (tied(values[mask], br.value)) br.argmax.push_back(Ballot::from_mask(mask));
  }
  std::sort(br.argmax.begin(), br.argmax.end(), canonical_less);
  return br;
}

/// Labels `ballot` with every strategy that produces it in this election.
/// Optimality is judged with no remaining voters under the state's own
/// tie-break rule, and only when some ballots do better than others.
inline ClassificationResult classify(Ballot ballot, const ElectionState& state, const UtilityFunction& u,
                                     double epsilon = kTrivialUtility) {
  check_ballot(state, ballot);
  check_utilities(state, u);
  ClassificationResult result;

  const auto br = best_response<double>(state, u, FutureModel{0});
  if (!br.degenerate() && br.contains(ballot)) result.labels.push_back(StrategyKind::best_response());

  const Ballot honest = truthful(u);
  if (ballot == honest) result.labels.push_back(StrategyKind::truthful());

  const Ballot nontrivial = truthful_nontrivial(u, epsilon);
  if (nontrivial != honest && ballot == nontrivial) {
    result.labels.push_back(StrategyKind::truthful_nontrivial(epsilon));
  }

  for (int x = 1; x <= max_x(u); ++x) {
    const Ballot top = take_x_best(u, x, state);
    if (top != honest && ballot == top) result.labels.push_back(StrategyKind::take_x_best(x));
  }

  if (!ballot.empty() && ballot.is_subset_of(follow_the_leader(state))) {
    result.labels.push_back(StrategyKind::follow_the_leader());
  }

  const auto family = leader_plus_best(state, u);
  if (std::find(family.begin(), family.end(), ballot) != family.end()) {
    result.labels.push_back(StrategyKind::leader_plus_best());
  }

  if (ballot.empty()) result.labels.push_back(StrategyKind::abstain());
  if (result.labels.empty()) result.labels.push_back(StrategyKind::other());
  std::sort(result.labels.begin(), result.labels.end());
  return result;
}

}  // namespace approval

#endif  // APPROVAL_STRATEGIES_HPP
