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

#include "approval/sweep.hpp"

#include <gtest/gtest.h>

#include <map>
#include <sstream>

#include "test_support.hpp"

namespace approval {
namespace {

using testing::Rational;

constexpr std::size_t A = 0, B = 1, C = 2, E = 4;
const std::vector<int> kFullRange = {0, 1, 2, 3};

/// strategy -> r -> value
std::map<std::string, std::map<int, double>> by_strategy(const std::vector<SweepRow>& rows) {
  std::map<std::string, std::map<int, double>> out;
  for (const auto& row : rows) out[row.strategy][row.r] = row.expected_utility;
  return out;
}

Ballot panel_ballot(const std::vector<PanelEntry>& panel, const std::string& label) {
  for (const auto& e : panel) {
    if (e.label == label) return e.ballot;
  }
  ADD_FAILURE() << "no panel entry " << label;
  return {};
}

TEST(StrategyPanelTest, ScenarioOneHasFourEntries) {
  const auto panel = strategy_panel(builtin("s1"), 2);
  ASSERT_EQ(panel.size(), 4U);
  EXPECT_EQ(panel[0], (PanelEntry{"truthful", {A, B, E}}));
  EXPECT_EQ(panel[1], (PanelEntry{"X=1", {E}}));
  EXPECT_EQ(panel[2], (PanelEntry{"X=2", {B, E}}));
  EXPECT_EQ(panel[3].label, "Max*");
}

TEST(StrategyPanelTest, TrivialUtilityAddsTruthStar) {
  const auto panel = strategy_panel(builtin("s2"), 3);
  ASSERT_EQ(panel.size(), 5U);
  EXPECT_EQ(panel_ballot(panel, "truthful"), (Ballot{A, B, C, E}));
  EXPECT_EQ(panel_ballot(panel, "truth*"), (Ballot{A, B, E}));
}

TEST(StrategyPanelTest, StaticMaximizerRefinesTiesWithOneMoreVoter) {
  // Four ballots tie at 0.25 for s4 with two seats; {A,B,C,E} is best once
  // one more voter may arrive.
  EXPECT_EQ(panel_ballot(strategy_panel(builtin("s4"), 2), "Max*"), (Ballot{A, B, C, E}));
  EXPECT_EQ(panel_ballot(strategy_panel(builtin("s4"), 3), "Max*"), (Ballot{A, B, C, E}));
  // Four ballots stay tied at r = 1 for s3 with three seats; canonical order picks {E}.
  EXPECT_EQ(panel_ballot(strategy_panel(builtin("s3"), 3), "Max*"), (Ballot{E}));
  EXPECT_EQ(panel_ballot(strategy_panel(builtin("s1"), 2), "Max*"), (Ballot{E}));
  EXPECT_EQ(panel_ballot(strategy_panel(builtin("s1"), 3), "Max*"), (Ballot{B, E}));
}

TEST(StrategyPanelTest, RationalAndDoubleMaximizersAgree) {
  for (const auto& id : builtin_ids()) {
    const auto s = builtin(id);
    for (std::size_t k : {2U, 3U}) {
      const auto state = s.state(k, TieBreakKind::kRandomUniform);
      EXPECT_EQ(static_maximizer<double>(state, s.utilities, 0.5),
                static_maximizer<Rational>(state, s.utilities, Rational(1, 2)))
          << id << " k=" << k;
    }
  }
}

TEST(SweepTest, RowCountAndOrder) {
  const auto rows = sweep(builtin("s1"), 2, kFullRange);
  ASSERT_EQ(rows.size(), 20U);
  const std::vector<std::string> order = {"Max", "Max*", "X=1", "X=2", "truthful"};
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(rows[i].strategy, order[i / 4]);
    EXPECT_EQ(rows[i].r, static_cast<int>(i % 4));
    EXPECT_EQ(rows[i].scenario_id, "s1");
    EXPECT_EQ(rows[i].k, 2U);
    EXPECT_EQ(rows[i].p, 0.5);
  }
  EXPECT_EQ(sweep(builtin("s2"), 2, kFullRange).size(), 24U);
}

TEST(SweepTest, IsDeterministic) {
  EXPECT_EQ(sweep(builtin("s4"), 3, kFullRange), sweep(builtin("s4"), 3, {3, 1, 2, 0}));
}

TEST(SweepTest, RejectsBadRemainingVoterLists) {
  EXPECT_THROW((void)sweep(builtin("s1"), 2, {0, 1, 1}), Error);
  EXPECT_THROW((void)sweep(builtin("s1"), 2, {-1}), Error);
  EXPECT_THROW((void)sweep(builtin("s1"), 2, {9}), Error);
  EXPECT_THROW((void)sweep(builtin("s1"), 2, {1}, 1.5), Error);
}

TEST(SweepTest, MaxDominatesEveryRowAndStartsAtStaticMaximum) {
  for (const auto& id : builtin_ids()) {
    for (std::size_t k : {2U, 3U}) {
      const auto table = by_strategy(sweep(builtin(id), k, kFullRange));
      for (const auto& [strategy, values] : table) {
        for (const auto& [r, v] : values) {
          EXPECT_LE(v, table.at("Max").at(r) + kFloatingTieTolerance) << id << " " << strategy << " r=" << r;
        }
      }
      EXPECT_NEAR(table.at("Max*").at(0), table.at("Max").at(0), kFloatingTieTolerance) << id;
    }
  }
}

TEST(SweepTest, ValuesWithinUtilityBounds) {
  for (const auto& id : builtin_ids()) {
    const auto s = builtin(id);
    double low = 0, high = 0;
    for (double v : s.utilities.values()) {
      low += std::min(v, 0.0);
      high += std::max(v, 0.0);
    }
    for (std::size_t k : {2U, 3U}) {
      for (const auto& row : sweep(s, k, kFullRange)) {
        EXPECT_GE(row.expected_utility, low - kFloatingTieTolerance) << id << " " << row.strategy;
        EXPECT_LE(row.expected_utility, high + kFloatingTieTolerance) << id << " " << row.strategy;
      }
    }
  }
}

TEST(SweepTest, QualitativeOrderings) {
  for (const char* id : {"s1", "s2"}) {
    const auto t = by_strategy(sweep(builtin(id), 3, kFullRange));
    for (int r : kFullRange) EXPECT_GE(t.at("X=2").at(r), t.at("truthful").at(r)) << id << " r=" << r;
  }
  const auto s3k2 = by_strategy(sweep(builtin("s3"), 2, kFullRange));
  for (int r : kFullRange) {
    EXPECT_GE(s3k2.at("truthful").at(r), s3k2.at("X=1").at(r)) << r;
    EXPECT_GE(s3k2.at("truthful").at(r), s3k2.at("X=2").at(r)) << r;
  }
  const auto s3k3 = by_strategy(sweep(builtin("s3"), 3, kFullRange));
  EXPECT_EQ(s3k3.at("Max*"), s3k3.at("X=1"));
}

TEST(SweepTest, KnownCurveValues) {
  const auto t = by_strategy(sweep(builtin("s4"), 2, kFullRange));
  EXPECT_NEAR(t.at("Max*").at(1), 0.062421875, 1e-12);
  EXPECT_NEAR(t.at("Max*").at(2), 0.005, 1e-12);
  EXPECT_NEAR(t.at("Max").at(0), 0.25, 1e-12);
  const auto s1 = by_strategy(sweep(builtin("s1"), 2, {0}));
  EXPECT_NEAR(s1.at("truthful").at(0), 0.2, 1e-12);
}

TEST(SweepCsvTest, FixedFormat) {
  std::ostringstream out;
  write_sweep_csv(out, sweep(builtin("s1"), 2, {0, 1}));
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "scenario,k,strategy,r,p,expected_utility");
  std::getline(in, line);
  EXPECT_EQ(line, "s1,2,Max,0,0.5,0.250000");
  std::size_t count = 1;
  while (std::getline(in, line)) ++count;
  EXPECT_EQ(count, 10U);
  EXPECT_NE(out.str().find("s1,2,truthful,0,0.5,0.200000\n"), std::string::npos);
}

TEST(SweepCsvTest, NumberFormatting) {
  EXPECT_EQ(format_utility(-0.0), "0.000000");
  EXPECT_EQ(format_utility(-1e-9), "0.000000");
  EXPECT_EQ(format_utility(-0.75), "-0.750000");
  EXPECT_EQ(format_probability(0.25), "0.25");
  EXPECT_EQ(format_probability(1.0), "1");
}

}  // namespace
}  // namespace approval
