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

// Exact expected utilities when r unknown voters still vote after the focal
// voter. Each remaining voter approves each candidate independently with
// probability p, so the extra approvals a candidate receives are
// Binomial(r, p) and independent across candidates.
//
// Two evaluation routes are provided and must agree exactly:
//
//   * expected_utility: for every candidate c and every final tally v of c,
//     a small dynamic program over the other candidates yields the
//     distribution of (#strictly above v, #tied at v), from which the
//     probability that c takes a seat follows in closed form. Cost is
//     polynomial in m and r.
//   * expected_utility_by_increments: enumerates all (r+1)^m increment
//     vectors with their product-of-binomials probabilities and evaluates the
//     tie-broken outcome of each.
//
// All functions are templated on the scalar type. `double` is the default;
// any exact field type with the usual operators (e.g. a multiprecision
// rational) gives bit-exact results.

#ifndef APPROVAL_UNCERTAINTY_HPP
#define APPROVAL_UNCERTAINTY_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "approval/election.hpp"
#include "approval/error.hpp"
#include "approval/scalar.hpp"

namespace approval {

struct SimulationLimits {
  int max_remaining_voters = 8;
  std::size_t max_candidates = 12;
  /// Upper bound on materialized increment vectors.
  std::size_t max_support = std::size_t{1} << 22;
};

template <typename Scalar>
struct BasicFutureModel {
  int remaining_voters = 0;
  Scalar approval_prob = Scalar(1) / Scalar(2);
};

using FutureModel = BasicFutureModel<double>;

template <typename Scalar>
void validate_model(const BasicFutureModel<Scalar>& model, std::size_t candidate_count,
                    const SimulationLimits& limits) {
  if (model.remaining_voters < 0) {
    throw Error(ErrorCode::kInvalidArgument, "remaining voters must be non-negative");
  }
  if (model.remaining_voters > limits.max_remaining_voters) {
    throw Error(ErrorCode::kCapacity, "remaining voters " + std::to_string(model.remaining_voters) +
                                          " exceeds the exact-enumeration cap of " +
                                          std::to_string(limits.max_remaining_voters));
  }
  if (!(model.approval_prob >= Scalar(0) && model.approval_prob <= Scalar(1))) {
    throw Error(ErrorCode::kInvalidArgument, "approval probability must lie in [0, 1]");
  }
  if (model.remaining_voters > 0 && candidate_count > limits.max_candidates) {
    throw Error(ErrorCode::kCapacity, std::to_string(candidate_count) +
                                          " candidates exceeds the exact-enumeration cap of " +
                                          std::to_string(limits.max_candidates));
  }
}

/// P(X = i) for X ~ Binomial(r, p), i = 0..r.
template <typename Scalar>
std::vector<Scalar> binomial_pmf(int r, const Scalar& p) {
  const Scalar q = Scalar(1) - p;
  std::vector<Scalar> pmf(static_cast<std::size_t>(r) + 1);
  std::int64_t choose = 1;
  for (int i = 0; i <= r; ++i) {
    Scalar term(choose);
    for (int j = 0; j < i; ++j) term *= p;
    for (int j = i; j < r; ++j) term *= q;
    pmf[static_cast<std::size_t>(i)] = term;
    choose = choose * (r - i) / (i + 1);
  }
  return pmf;
}

template <typename Scalar>
struct BasicIncrementDistribution {
  struct Entry {
    std::vector<std::int64_t> increments;
    Scalar probability;
  };
  std::vector<Entry> support;

  Scalar total_probability() const {
    Scalar sum(0);
    for (const auto& e : support) sum += e.probability;
    return sum;
  }
};

using IncrementDistribution = BasicIncrementDistribution<double>;

/// Joint distribution of the extra approvals each of m candidates receives.
/// Vectors are listed in lexicographic order; zero-probability vectors (only
/// possible for p in {0, 1}) are omitted.
template <typename Scalar = double>
BasicIncrementDistribution<Scalar> increment_distribution(const BasicFutureModel<Scalar>& model,
                                                          std::size_t m,
                                                          const SimulationLimits& limits = {}) {
  validate_model(model, m, limits);
  const int r = model.remaining_voters;
  const std::vector<Scalar> pmf = binomial_pmf(r, model.approval_prob);

  std::vector<std::int64_t> values;
  for (int i = 0; i <= r; ++i) {
    if (pmf[static_cast<std::size_t>(i)] != Scalar(0)) values.push_back(i);
  }
  std::size_t support_size = 1;
  for (std::size_t c = 0; c < m; ++c) {
    if (support_size > limits.max_support / values.size()) {
      throw Error(ErrorCode::kCapacity, "increment distribution support exceeds " +
                                            std::to_string(limits.max_support) + " vectors");
    }
    support_size *= values.size();
  }

  BasicIncrementDistribution<Scalar> dist;
  dist.support.reserve(support_size);
  std::vector<std::size_t> digit(m, 0);
  for (std::size_t n = 0; n < support_size; ++n) {
    typename BasicIncrementDistribution<Scalar>::Entry e{std::vector<std::int64_t>(m), Scalar(1)};
    for (std::size_t c = 0; c < m; ++c) {
      e.increments[c] = values[digit[c]];
      e.probability *= pmf[static_cast<std::size_t>(values[digit[c]])];
    }
    dist.support.push_back(std::move(e));
    for (std::size_t c = m; c-- > 0;) {
      if (++digit[c] < values.size()) break;
      digit[c] = 0;
    }
  }
  return dist;
}

namespace detail {

/// Final tally of one candidate is base + Binomial(r, p).
template <typename Scalar>
struct TallyLaw {
  std::int64_t base = 0;
  const std::vector<Scalar>* pmf = nullptr;

  Scalar prob_equal(std::int64_t v) const {
    const std::int64_t i = v - base;
    if (i < 0 || i >= static_cast<std::int64_t>(pmf->size())) return Scalar(0);
    return (*pmf)[static_cast<std::size_t>(i)];
  }
  Scalar prob_greater(std::int64_t v) const {
    Scalar s(0);
    for (std::size_t i = 0; i < pmf->size(); ++i) {
      if (base + static_cast<std::int64_t>(i) > v) s += (*pmf)[i];
    }
    return s;
  }
};

/// P(candidate c wins | its final tally is v), lexicographic rule: c wins
/// iff fewer than k others finish above it or level with higher priority.
template <typename Scalar>
Scalar win_given_tally_lex(const ElectionState& state, const std::vector<TallyLaw<Scalar>>& laws,
                           std::size_t c, std::int64_t v) {
  const std::size_t k = state.seats();
  // dist[j] = P(j others beat c so far), j < k; dist[k] absorbs "k or more".
  std::vector<Scalar> dist(k + 1, Scalar(0));
  dist[0] = Scalar(1);
  for (std::size_t d = 0; d < state.candidate_count(); ++d) {
    if (d == c) continue;
    Scalar beat = laws[d].prob_greater(v);
    if (state.rank(d) < state.rank(c)) beat += laws[d].prob_equal(v);
    const Scalar stay = Scalar(1) - beat;
    std::vector<Scalar> next(k + 1, Scalar(0));
    for (std::size_t j = 0; j < k; ++j) {
      if (dist[j] == Scalar(0)) continue;
      next[j] += dist[j] * stay;
      next[j + 1] += dist[j] * beat;
    }
    next[k] += dist[k];
    dist = std::move(next);
  }
  Scalar win(0);
  for (std::size_t j = 0; j < k; ++j) win += dist[j];
  return win;
}

/// P(candidate c wins | its final tally is v), random rule. With g others
/// strictly above and e others level, c wins surely if g + e + 1 <= k, never
/// if g >= k, and otherwise shares k - g seats among e + 1 tied candidates.
template <typename Scalar>
Scalar win_given_tally_random(const ElectionState& state, const std::vector<TallyLaw<Scalar>>& laws,
                              std::size_t c, std::int64_t v) {
  const std::size_t k = state.seats();
  const std::size_t m = state.candidate_count();
  // dist[g][e] for g < k; mass with g >= k is dropped (c loses).
  std::vector<std::vector<Scalar>> dist(k, std::vector<Scalar>(m, Scalar(0)));
  if (k == 0) return Scalar(0);
  dist[0][0] = Scalar(1);
  for (std::size_t d = 0; d < m; ++d) {
    if (d == c) continue;
    const Scalar above = laws[d].prob_greater(v);
    const Scalar level = laws[d].prob_equal(v);
    const Scalar below = Scalar(1) - above - level;
    std::vector<std::vector<Scalar>> next(k, std::vector<Scalar>(m, Scalar(0)));
    for (std::size_t g = 0; g < k; ++g) {
      for (std::size_t e = 0; e + 1 < m; ++e) {
        const Scalar& mass = dist[g][e];
        if (mass == Scalar(0)) continue;
        next[g][e] += mass * below;
        next[g][e + 1] += mass * level;
        if (g + 1 < k) next[g + 1][e] += mass * above;
      }
    }
    dist = std::move(next);
  }
  Scalar win(0);
  for (std::size_t g = 0; g < k; ++g) {
    for (std::size_t e = 0; e < m; ++e) {
      if (dist[g][e] == Scalar(0)) continue;
      if (g + e + 1 <= k) {
        win += dist[g][e];
      } else {
        win += dist[g][e] * ratio<Scalar>(static_cast<std::int64_t>(k - g),
                                          static_cast<std::int64_t>(e + 1));
      }
    }
  }
  return win;
}

}  // namespace detail

/// Expected outcome utility of casting `ballot` now, with `model.remaining_voters`
/// voters still to come, under the state's tie-break rule.
template <typename Scalar = double>
Scalar expected_utility(const ElectionState& state, Ballot ballot, const UtilityFunction& u,
                        const BasicFutureModel<Scalar>& model, const SimulationLimits& limits = {}) {
  check_ballot(state, ballot);
  check_utilities(state, u);
  validate_model(model, state.candidate_count(), limits);
  const ElectionState after = apply_ballot(state, ballot);
  const int r = model.remaining_voters;
  if (r == 0 || model.approval_prob == Scalar(0)) {
    return expected_outcome_utility<Scalar>(after, u);
  }
  if (model.approval_prob == Scalar(1)) {
    return expected_outcome_utility<Scalar>(
        after.with_increments(std::vector<std::int64_t>(state.candidate_count(), r)), u);
  }

  const std::vector<Scalar> pmf = binomial_pmf(r, model.approval_prob);
  std::vector<detail::TallyLaw<Scalar>> laws(state.candidate_count());
  for (std::size_t c = 0; c < laws.size(); ++c) laws[c] = {after.tally(c), &pmf};

  Scalar total(0);
  for (std::size_t c = 0; c < state.candidate_count(); ++c) {
    if (u.micros(c) == 0) continue;
    Scalar p_win(0);
    for (int i = 0; i <= r; ++i) {
      const Scalar& p_tally = pmf[static_cast<std::size_t>(i)];
      if (p_tally == Scalar(0)) continue;
      const std::int64_t v = after.tally(c) + i;
      p_win += p_tally * (after.tiebreak() == TieBreakKind::kLexicographic
                              ? detail::win_given_tally_lex(after, laws, c, v)
                              : detail::win_given_tally_random(after, laws, c, v));
    }
    total += Scalar(u.micros(c)) * p_win;
  }
  return total / Scalar(kMicrosPerUnit);
}

/// Same quantity as expected_utility, summed over the enumerated increment
/// distribution. Exponential in m; intended for cross-checking.
template <typename Scalar = double>
Scalar expected_utility_by_increments(const ElectionState& state, Ballot ballot,
                                      const UtilityFunction& u,
                                      const BasicFutureModel<Scalar>& model,
                                      const SimulationLimits& limits = {}) {
  check_ballot(state, ballot);
  check_utilities(state, u);
  const ElectionState after = apply_ballot(state, ballot);
  const auto dist = increment_distribution(model, state.candidate_count(), limits);
  Scalar total(0);
  for (const auto& entry : dist.support) {
    total += entry.probability * expected_outcome_utility<Scalar>(after.with_increments(entry.increments), u);
  }
  return total;
}

}  // namespace approval

#endif  // APPROVAL_UNCERTAINTY_HPP
