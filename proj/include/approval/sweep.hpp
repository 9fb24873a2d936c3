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

// Strategy panels and expected-utility sweeps over the number of remaining
// voters, with random tie-breaking throughout.

#ifndef APPROVAL_SWEEP_HPP
#define APPROVAL_SWEEP_HPP

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <string>
#include <tuple>
#include <vector>

#include "approval/election.hpp"
#include "approval/error.hpp"
#include "approval/scenario.hpp"
#include "approval/strategies.hpp"
#include "approval/uncertainty.hpp"

namespace approval {

inline constexpr const char* kLabelTruthful = "truthful";
inline constexpr const char* kLabelTruthStar = "truth*";
inline constexpr const char* kLabelStaticMax = "Max*";
inline constexpr const char* kLabelMax = "Max";

inline std::string take_x_label(int x) { return "X=" + std::to_string(x); }

struct PanelEntry {
  std::string label;
  Ballot ballot;

  friend bool operator==(const PanelEntry&, const PanelEntry&) = default;
};

/// The ballot that is optimal with nobody left to vote. Ties at r = 0 go to
/// the ballot with the best expected utility when one more voter follows
/// (approval probability p), then to the canonical order.
template <typename Scalar = double>
Ballot static_maximizer(const ElectionState& state, const UtilityFunction& u, const Scalar& p,
                        const SimulationLimits& limits = {}) {
  const auto at_zero = best_response<Scalar>(state, u, BasicFutureModel<Scalar>{0, p}, limits);
  if (at_zero.argmax.size() == 1 || p == Scalar(0) || p == Scalar(1) ||
      state.candidate_count() > limits.max_candidates) {
    return at_zero.canonical();
  }
  const BasicFutureModel<Scalar> one{1, p};
  std::vector<Scalar> values;
  values.reserve(at_zero.argmax.size());
  for (Ballot b : at_zero.argmax) values.push_back(expected_utility<Scalar>(state, b, u, one, limits));
  const Scalar best = *std::max_element(values.begin(), values.end());
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (tied(values[i], best)) return at_zero.argmax[i];
  }
  return at_zero.canonical();
}

/// Truthful, X = 1, X = 2, Max*, plus truth* when some utility lies in
/// (0, 0.01]. X entries are dropped when fewer candidates have positive
/// utility.
inline std::vector<PanelEntry> strategy_panel(const Scenario& scenario, std::size_t seats, double p = 0.5,
                                              const SimulationLimits& limits = {}) {
  const ElectionState state = scenario.state(seats, TieBreakKind::kRandomUniform);
  const UtilityFunction& u = scenario.utilities;
  std::vector<PanelEntry> panel;
  panel.push_back({kLabelTruthful, truthful(u)});
  for (int x = 1; x <= std::min(2, max_x(u)); ++x) panel.push_back({take_x_label(x), take_x_best(u, x, state)});
  panel.push_back({kLabelStaticMax, static_maximizer<double>(state, u, p, limits)});
  bool trivial = false;
  for (std::size_t c = 0; c < u.size(); ++c) trivial = trivial || (u.micros(c) > 0 && u.value(c) <= kTrivialUtility);
  if (trivial) panel.push_back({kLabelTruthStar, truthful_nontrivial(u, kTrivialUtility)});
  return panel;
}

struct SweepRow {
  std::string scenario_id;
  std::size_t k = 0;
  std::string strategy;
  int r = 0;
  double p = 0.5;
  double expected_utility = 0.0;

  friend bool operator==(const SweepRow&, const SweepRow&) = default;
};

/// One row per panel strategy and per r, plus a "Max" row holding the
/// best-response value recomputed at each r. Sorted by (strategy, r).
inline std::vector<SweepRow> sweep(const Scenario& scenario, std::size_t seats, std::vector<int> r_values,
                                   double p = 0.5, const SimulationLimits& limits = {}) {
  const ElectionState state = scenario.state(seats, TieBreakKind::kRandomUniform);
  std::sort(r_values.begin(), r_values.end());
  if (std::adjacent_find(r_values.begin(), r_values.end()) != r_values.end()) {
    throw Error(ErrorCode::kInvalidArgument, "duplicate value in remaining-voter list");
  }
  for (int r : r_values) validate_model(FutureModel{r, p}, state.candidate_count(), limits);

  const auto panel = strategy_panel(scenario, seats, p, limits);
  std::vector<SweepRow> rows;
  rows.reserve((panel.size() + 1) * r_values.size());
  for (int r : r_values) {
    const FutureModel model{r, p};
    for (const auto& entry : panel) {
      rows.push_back({scenario.id, seats, entry.label, r, p,
                      expected_utility(state, entry.ballot, scenario.utilities, model, limits)});
    }
    rows.push_back({scenario.id, seats, kLabelMax, r, p,
                    best_response(state, scenario.utilities, model, limits).value});
  }
  std::sort(rows.begin(), rows.end(), [](const SweepRow& a, const SweepRow& b) {
    return std::tie(a.strategy, a.r) < std::tie(b.strategy, b.r);
  });
  return rows;
}

/// Fixed six-decimal rendering; negative zero prints as 0.000000.
inline std::string format_utility(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", value);
  std::string s = buf;
  if (s == "-0.000000") s = "0.000000";
  return s;
}

inline std::string format_probability(double p) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%g", p);
  return buf;
}

inline constexpr const char* kSweepCsvHeader = "scenario,k,strategy,r,p,expected_utility";

inline void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << kSweepCsvHeader << '\n';
  for (const auto& row : rows) {
    out << row.scenario_id << ',' << row.k << ',' << row.strategy << ',' << row.r << ','
        << format_probability(row.p) << ',' << format_utility(row.expected_utility) << '\n';
  }
}

}  // namespace approval

#endif  // APPROVAL_SWEEP_HPP
