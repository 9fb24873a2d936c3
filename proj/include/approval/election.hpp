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

// Multi-winner approval elections over aggregate tallies.
//
// An election is a list of labelled candidates, the approval count each has
// received so far, the number of seats k, and a tie-break rule. The k
// candidates with the highest counts win. Ties at the seat boundary are broken
// either by a fixed priority order or uniformly at random over every
// maximal-score k-subset. The random rule is evaluated in closed form: every
// candidate strictly above the k-th highest tally wins, and the remaining
// seats are shared evenly among the candidates sitting exactly at it.

#ifndef APPROVAL_ELECTION_HPP
#define APPROVAL_ELECTION_HPP

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "approval/error.hpp"
#include "approval/scalar.hpp"

namespace approval {

/// A set of candidate indices, stored as a bit mask. Used both for approval
/// ballots and for winning sets.
class CandidateSet {
 public:
  static constexpr std::size_t kMaxCandidates = 64;

  constexpr CandidateSet() = default;
  constexpr CandidateSet(std::initializer_list<std::size_t> members) {
    for (std::size_t c : members) insert(c);
  }

  static constexpr CandidateSet from_mask(std::uint64_t mask) {
    CandidateSet s;
    s.mask_ = mask;
    return s;
  }

  /// {0, 1, ..., count - 1}
  static constexpr CandidateSet first_n(std::size_t count) {
    return from_mask(count >= kMaxCandidates ? ~std::uint64_t{0}
                                             : (std::uint64_t{1} << count) - 1);
  }

  constexpr std::uint64_t mask() const { return mask_; }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr std::size_t size() const {
    return static_cast<std::size_t>(std::popcount(mask_));
  }

  constexpr bool contains(std::size_t c) const {
    return c < kMaxCandidates && ((mask_ >> c) & 1U) != 0;
  }
  constexpr void insert(std::size_t c) {
    if (c >= kMaxCandidates) {
      throw Error(ErrorCode::kCapacity, "candidate index exceeds 63");
    }
    mask_ |= std::uint64_t{1} << c;
  }
  constexpr void erase(std::size_t c) {
    if (c < kMaxCandidates) mask_ &= ~(std::uint64_t{1} << c);
  }

  constexpr bool is_subset_of(CandidateSet other) const {
    return (mask_ & ~other.mask_) == 0;
  }
  constexpr CandidateSet operator|(CandidateSet other) const {
    return from_mask(mask_ | other.mask_);
  }

  /// Largest member index + 1, or 0 for the empty set.
  constexpr std::size_t extent() const {
    return kMaxCandidates - static_cast<std::size_t>(std::countl_zero(mask_));
  }

  std::vector<std::size_t> members() const {
    std::vector<std::size_t> out;
    out.reserve(size());
    for (std::uint64_t m = mask_; m != 0; m &= m - 1) {
      out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
    }
    return out;
  }

  friend constexpr bool operator==(CandidateSet, CandidateSet) = default;

 private:
  std::uint64_t mask_ = 0;
};

using Ballot = CandidateSet;

/// Fewest members first, then the lexicographically earliest ascending index
/// sequence ({A,C} before {B,C}).
inline bool canonical_less(CandidateSet a, CandidateSet b) {
  if (a.size() != b.size()) return a.size() < b.size();
  const auto ma = a.members();
  const auto mb = b.members();
  return std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(), mb.end());
}

enum class TieBreakKind { kLexicographic, kRandomUniform };

constexpr std::string_view to_string(TieBreakKind kind) {
  return kind == TieBreakKind::kLexicographic ? "lex" : "random";
}

/// Per-candidate utilities of the focal voter, held in micro-units.
class UtilityFunction {
 public:
  UtilityFunction() = default;

  explicit UtilityFunction(const std::vector<double>& values) {
    micros_.reserve(values.size());
    for (double v : values) micros_.push_back(to_micros(v));
  }

  static UtilityFunction from_micros(std::vector<Micros> micros) {
    UtilityFunction u;
    u.micros_ = std::move(micros);
    return u;
  }

  std::size_t size() const { return micros_.size(); }
  Micros micros(std::size_t c) const { return micros_.at(c); }
  double value(std::size_t c) const { return approval::from_micros(micros_.at(c)); }
  const std::vector<Micros>& all_micros() const { return micros_; }

  std::vector<double> values() const {
    std::vector<double> out;
    out.reserve(micros_.size());
    for (Micros m : micros_) out.push_back(approval::from_micros(m));
    return out;
  }

  friend bool operator==(const UtilityFunction&, const UtilityFunction&) = default;

 private:
  std::vector<Micros> micros_;
};

/// Candidates, current tallies, seat count and tie-break rule.
///
/// A priority order is always present: lexicographic tie-breaking uses it
/// directly and utility ties inside the heuristics fall back to it. When none
/// is given it defaults to candidate order.
class ElectionState {
 public:
  ElectionState(std::vector<std::string> labels, std::vector<std::int64_t> tallies,
                std::size_t seats,
                TieBreakKind tiebreak = TieBreakKind::kLexicographic,
                std::vector<std::size_t> priority = {})
      : labels_(std::move(labels)),
        tallies_(std::move(tallies)),
        seats_(seats),
        tiebreak_(tiebreak),
        priority_(std::move(priority)) {
    const std::size_t m = labels_.size();
    if (m > CandidateSet::kMaxCandidates) {
      throw Error(ErrorCode::kCapacity, "at most 64 candidates are supported");
    }
    if (tallies_.size() != m) {
      throw Error(ErrorCode::kLengthMismatch,
                  "tallies has " + std::to_string(tallies_.size()) +
                      " entries for " + std::to_string(m) + " candidates");
    }
    if (seats_ > m) {
      throw Error(ErrorCode::kInvalidArgument,
                  "seats (" + std::to_string(seats_) +
                      ") exceeds the number of candidates (" + std::to_string(m) + ")");
    }
    for (std::size_t i = 0; i < m; ++i) {
      if (labels_[i].empty()) {
        throw Error(ErrorCode::kInvalidArgument, "empty candidate label");
      }
      for (std::size_t j = 0; j < i; ++j) {
        if (labels_[i] == labels_[j]) {
          throw Error(ErrorCode::kInvalidArgument, "duplicate candidate label '" + labels_[i] + "'");
        }
      }
      if (tallies_[i] < 0) {
        throw Error(ErrorCode::kInvalidArgument, "negative tally for '" + labels_[i] + "'");
      }
    }
    if (priority_.empty()) {
      priority_.resize(m);
      std::iota(priority_.begin(), priority_.end(), std::size_t{0});
    }
    if (priority_.size() != m) {
      throw Error(ErrorCode::kLengthMismatch, "priority order must list every candidate once");
    }
    rank_.assign(m, m);
    for (std::size_t pos = 0; pos < m; ++pos) {
      const std::size_t c = priority_[pos];
      if (c >= m || rank_[c] != m) {
        throw Error(ErrorCode::kInvalidArgument, "priority order is not a permutation");
      }
      rank_[c] = pos;
    }
  }

  std::size_t candidate_count() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t c) const { return labels_.at(c); }
  const std::vector<std::int64_t>& tallies() const { return tallies_; }
  std::int64_t tally(std::size_t c) const { return tallies_.at(c); }
  std::size_t seats() const { return seats_; }
  TieBreakKind tiebreak() const { return tiebreak_; }
  /// priority()[0] is the most preferred candidate under lexicographic ties.
  const std::vector<std::size_t>& priority() const { return priority_; }
  /// Position of candidate c in the priority order (0 = highest).
  std::size_t rank(std::size_t c) const { return rank_.at(c); }

  CandidateSet all_candidates() const { return CandidateSet::first_n(candidate_count()); }

  std::optional<std::size_t> index_of(std::string_view label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      if (labels_[i] == label) return i;
    }
    return std::nullopt;
  }

  ElectionState with_tiebreak(TieBreakKind kind) const {
    ElectionState copy = *this;
    copy.tiebreak_ = kind;
    return copy;
  }

  ElectionState with_seats(std::size_t seats) const {
    return ElectionState(labels_, tallies_, seats, tiebreak_, priority_);
  }

  /// Copy with tallies[c] += increments[c].
  ElectionState with_increments(const std::vector<std::int64_t>& increments) const {
    if (increments.size() != tallies_.size()) {
      throw Error(ErrorCode::kLengthMismatch, "increment vector length differs from candidate count");
    }
    ElectionState copy = *this;
    for (std::size_t c = 0; c < tallies_.size(); ++c) copy.tallies_[c] += increments[c];
    return copy;
  }

  friend bool operator==(const ElectionState&, const ElectionState&) = default;

 private:
  std::vector<std::string> labels_;
  std::vector<std::int64_t> tallies_;
  std::size_t seats_;
  TieBreakKind tiebreak_;
  std::vector<std::size_t> priority_;
  std::vector<std::size_t> rank_;
};

inline void check_ballot(const ElectionState& state, Ballot ballot) {
  if (!ballot.is_subset_of(state.all_candidates())) {
    throw Error(ErrorCode::kInvalidBallot,
                "ballot names candidate index " + std::to_string(ballot.extent() - 1) +
                    " but the election has " + std::to_string(state.candidate_count()) +
                    " candidates");
  }
}

inline void check_utilities(const ElectionState& state, const UtilityFunction& u) {
  if (u.size() != state.candidate_count()) {
    throw Error(ErrorCode::kLengthMismatch,
                "utility function has " + std::to_string(u.size()) + " entries for " +
                    std::to_string(state.candidate_count()) + " candidates");
  }
}

/// "[A,B,E]" style rendering; "[]" for the empty set.
inline std::string format_set(CandidateSet set, const std::vector<std::string>& labels) {
  std::string out = "[";
  bool first = true;
  for (std::size_t c : set.members()) {
    if (!first) out += ',';
    out += c < labels.size() ? labels[c] : std::to_string(c);
    first = false;
  }
  out += ']';
  return out;
}

/// Comma-joined labels without brackets ("A,B,E"; "" for the empty set).
inline std::string join_labels(CandidateSet set, const std::vector<std::string>& labels) {
  std::string s = format_set(set, labels);
  return s.substr(1, s.size() - 2);
}

/// Parses a comma-separated label list such as "A,B,E" or "[A, B]". The empty
/// string (or "[]") is the empty ballot.
inline Ballot parse_ballot(std::string_view text, const std::vector<std::string>& labels) {
  auto trim = [](std::string_view s) {
    const auto is_space = [](char ch) { return ch == ' ' || ch == '\t' || ch == '\r' || ch == '\n'; };
    while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
    while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (!text.empty() && text.front() == '[' && text.back() == ']') {
    text = trim(text.substr(1, text.size() - 2));
  }
  Ballot ballot;
  if (text.empty()) return ballot;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::string_view token =
        trim(text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
    if (token.empty()) {
      throw Error(ErrorCode::kInvalidBallot, "empty candidate label in ballot '" + std::string(text) + "'");
    }
    const auto it = std::find(labels.begin(), labels.end(), token);
    if (it == labels.end()) {
      throw Error(ErrorCode::kInvalidBallot, "unknown candidate '" + std::string(token) + "'");
    }
    const auto c = static_cast<std::size_t>(it - labels.begin());
    if (ballot.contains(c)) {
      throw Error(ErrorCode::kInvalidBallot, "candidate '" + std::string(token) + "' listed twice");
    }
    ballot.insert(c);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return ballot;
}

/// The focal voter casts `ballot`: +1 for every approved candidate.
inline ElectionState apply_ballot(const ElectionState& state, Ballot ballot) {
  check_ballot(state, ballot);
  std::vector<std::int64_t> inc(state.candidate_count(), 0);
  for (std::size_t c : ballot.members()) inc[c] = 1;
  return state.with_increments(inc);
}

/// Winners under the state's priority order: highest tallies first, equal
/// tallies resolved by priority.
inline CandidateSet winners_lex(const ElectionState& state) {
  std::vector<std::size_t> order(state.candidate_count());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (state.tally(a) != state.tally(b)) return state.tally(a) > state.tally(b);
    return state.rank(a) < state.rank(b);
  });
  CandidateSet winners;
  for (std::size_t i = 0; i < state.seats(); ++i) winners.insert(order[i]);
  return winners;
}

inline Micros outcome_utility_micros(CandidateSet winners, const UtilityFunction& u) {
  Micros total = 0;
  for (std::size_t c : winners.members()) total += u.micros(c);
  return total;
}

/// Sum of the voter's utilities over the winning set.
inline double outcome_utility(CandidateSet winners, const UtilityFunction& u) {
  return from_micros(outcome_utility_micros(winners, u));
}

/// Shape of the seat boundary: who wins for sure, who is tied at the k-th
/// highest tally, and how many seats those tied candidates share.
struct SeatBoundary {
  CandidateSet sure_winners;
  CandidateSet boundary_ties;
  std::size_t open_seats = 0;
};

inline SeatBoundary seat_boundary(const ElectionState& state) {
  SeatBoundary b;
  const std::size_t k = state.seats();
  if (k == 0) return b;
  std::vector<std::int64_t> sorted = state.tallies();
  std::nth_element(sorted.begin(), sorted.begin() + static_cast<std::ptrdiff_t>(k - 1), sorted.end(),
                   std::greater<>());
  const std::int64_t threshold = sorted[k - 1];
  for (std::size_t c = 0; c < state.candidate_count(); ++c) {
    if (state.tally(c) > threshold) {
      b.sure_winners.insert(c);
    } else if (state.tally(c) == threshold) {
      b.boundary_ties.insert(c);
    }
  }
  b.open_seats = k - b.sure_winners.size();
  return b;
}

template <typename Scalar>
struct BasicOutcomeDistribution {
  std::vector<Scalar> win_prob;
  Scalar expected_utility{};
  CandidateSet sure_winners;
  CandidateSet boundary_ties;
  std::size_t open_seats = 0;
};

using OutcomeDistribution = BasicOutcomeDistribution<double>;

/// Win probabilities under uniformly random tie-breaking, whatever rule the
/// state itself carries. `expected_utility` is left at zero; use the overload
/// taking a utility function to fill it.
template <typename Scalar = double>
BasicOutcomeDistribution<Scalar> outcome_distribution(const ElectionState& state) {
  const SeatBoundary b = seat_boundary(state);
  BasicOutcomeDistribution<Scalar> d;
  d.sure_winners = b.sure_winners;
  d.boundary_ties = b.boundary_ties;
  d.open_seats = b.open_seats;
  d.win_prob.assign(state.candidate_count(), Scalar(0));
  const auto ties = static_cast<std::int64_t>(b.boundary_ties.size());
  for (std::size_t c = 0; c < state.candidate_count(); ++c) {
    if (b.sure_winners.contains(c)) {
      d.win_prob[c] = Scalar(1);
    } else if (b.boundary_ties.contains(c)) {
      d.win_prob[c] = ratio<Scalar>(static_cast<std::int64_t>(b.open_seats), ties);
    }
  }
  return d;
}

/// Expected outcome utility under the state's own tie-break rule. Computed as
/// one exact integer ratio, so `double` results are correctly rounded.
template <typename Scalar = double>
Scalar expected_outcome_utility(const ElectionState& state, const UtilityFunction& u) {
  check_utilities(state, u);
  if (state.tiebreak() == TieBreakKind::kLexicographic) {
    return ratio<Scalar>(outcome_utility_micros(winners_lex(state), u), kMicrosPerUnit);
  }
  const SeatBoundary b = seat_boundary(state);
  if (b.boundary_ties.empty()) {
    return ratio<Scalar>(outcome_utility_micros(b.sure_winners, u), kMicrosPerUnit);
  }
  const auto ties = static_cast<std::int64_t>(b.boundary_ties.size());
  const Micros sure = outcome_utility_micros(b.sure_winners, u);
  const Micros tied_sum = outcome_utility_micros(b.boundary_ties, u);
  return ratio<Scalar>(sure * ties + static_cast<std::int64_t>(b.open_seats) * tied_sum,
                       ties * kMicrosPerUnit);
}

template <typename Scalar = double>
BasicOutcomeDistribution<Scalar> outcome_distribution(const ElectionState& state,
                                                      const UtilityFunction& u) {
  auto d = outcome_distribution<Scalar>(state);
  d.expected_utility = expected_outcome_utility<Scalar>(state.with_tiebreak(TieBreakKind::kRandomUniform), u);
  return d;
}

/// Per-candidate win probabilities under the state's own rule: 0/1 for the
/// lexicographic rule, the boundary-sharing distribution for the random rule.
template <typename Scalar = double>
std::vector<Scalar> win_probabilities(const ElectionState& state) {
  if (state.tiebreak() == TieBreakKind::kRandomUniform) {
    return outcome_distribution<Scalar>(state).win_prob;
  }
  std::vector<Scalar> p(state.candidate_count(), Scalar(0));
  for (std::size_t c : winners_lex(state).members()) p[c] = Scalar(1);
  return p;
}

}  // namespace approval

#endif  // APPROVAL_ELECTION_HPP
