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

#include "approval/strategies.hpp"

#include <gtest/gtest.h>

#include <random>

#include "approval/scenario.hpp"
#include "test_support.hpp"

namespace approval {
namespace {

using testing::Rational;

constexpr std::size_t A = 0, B = 1, C = 2, D = 3, E = 4;
constexpr auto kLex = TieBreakKind::kLexicographic;
constexpr auto kRandom = TieBreakKind::kRandomUniform;

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kIo;
}

TEST(TruthfulTest, ApprovesStrictlyPositiveUtilities) {
  EXPECT_EQ(truthful(builtin("s1").utilities), (Ballot{A, B, E}));
  EXPECT_EQ(truthful(builtin("s2").utilities), (Ballot{A, B, C, E}));
  EXPECT_EQ(truthful(builtin("s4").utilities), (Ballot{A, B, E}));
  EXPECT_TRUE(truthful(UtilityFunction({0, -1, 0})).empty());
}

TEST(TruthfulTest, NontrivialDropsSmallUtilities) {
  EXPECT_EQ(truthful_nontrivial(builtin("s2").utilities), (Ballot{A, B, E}));
  EXPECT_EQ(truthful_nontrivial(builtin("s1").utilities), (Ballot{A, B, E}));
  EXPECT_EQ(truthful_nontrivial(builtin("s2").utilities, 0.0), (Ballot{A, B, C, E}));
  EXPECT_EQ(truthful_nontrivial(builtin("s2").utilities, 0.1), (Ballot{E}));
  EXPECT_EQ(code_of([] { (void)truthful_nontrivial(builtin("s2").utilities, -0.5); }), ErrorCode::kDomain);
}

TEST(TakeXBestTest, TopCandidatesByUtility) {
  const auto s = builtin("s1");
  const auto state = s.state(2);
  EXPECT_EQ(take_x_best(s.utilities, 1, state), (Ballot{E}));
  EXPECT_EQ(take_x_best(s.utilities, 2, state), (Ballot{B, E}));
  EXPECT_EQ(take_x_best(s.utilities, 3, state), (Ballot{A, B, E}));
  EXPECT_EQ(take_x_best(builtin("s2").utilities, 3, state), (Ballot{A, B, E}));
}

TEST(TakeXBestTest, OutOfRangeXIsDomainError) {
  const auto s = builtin("s1");
  const auto state = s.state(2);
  EXPECT_EQ(code_of([&] { (void)take_x_best(s.utilities, 0, state); }), ErrorCode::kDomain);
  EXPECT_EQ(code_of([&] { (void)take_x_best(s.utilities, 4, state); }), ErrorCode::kDomain);
  EXPECT_EQ(code_of([&] { (void)take_x_best(s.utilities, 3, state, XBound::kStrict); }), ErrorCode::kDomain);
  EXPECT_EQ(take_x_best(s.utilities, 2, state, XBound::kStrict), (Ballot{B, E}));
  EXPECT_EQ(code_of([] { (void)take_x_best(UtilityFunction({0, -1}), 1, std::vector<std::size_t>{0, 1}); }),
            ErrorCode::kDomain);
}

TEST(TakeXBestTest, UtilityTiesFollowPriority) {
  const UtilityFunction u({0.2, 0.5, 0.2, 0.2});
  EXPECT_EQ(take_x_best(u, 2, std::vector<std::size_t>{0, 1, 2, 3}), (Ballot{0, 1}));
  EXPECT_EQ(take_x_best(u, 2, std::vector<std::size_t>{3, 2, 1, 0}), (Ballot{1, 3}));
}

TEST(TakeXBestTest, PrefixesAreNested) {
  std::mt19937 rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t m = 1 + static_cast<std::size_t>(trial % 8);
    const auto state = testing::random_state(rng, m, 3, kLex);
    const auto u = testing::random_utilities(rng, m);
    for (int x = 1; x < max_x(u); ++x) {
      const Ballot small = take_x_best(u, x, state);
      const Ballot big = take_x_best(u, x + 1, state);
      EXPECT_EQ(small.size(), static_cast<std::size_t>(x));
      EXPECT_TRUE(small.is_subset_of(big));
    }
    if (max_x(u) > 0) {
      EXPECT_EQ(take_x_best(u, max_x(u), state), truthful(u));
    }
  }
}

TEST(FollowTheLeaderTest, ApprovesEveryTopTally) {
  EXPECT_EQ(follow_the_leader(builtin("s1").state(2)), (Ballot{C}));
  EXPECT_EQ(follow_the_leader(builtin("s3").state(2)), (Ballot{C, D}));
  EXPECT_EQ(follow_the_leader(builtin("s4").state(2)), (Ballot{C, D, E}));
}

TEST(LeaderPlusBestTest, LeaderSubsetsJoinedWithFavourite) {
  const auto s3 = builtin("s3");
  EXPECT_EQ(leader_plus_best(s3.state(2), s3.utilities), (std::vector<Ballot>{{C, E}, {D, E}, {C, D, E}}));
  const auto s1 = builtin("s1");
  EXPECT_EQ(leader_plus_best(s1.state(2), s1.utilities), (std::vector<Ballot>{{C, E}}));
  // The favourite is itself a leader in s4, so {E} appears on its own.
  const auto s4 = builtin("s4");
  const auto family = leader_plus_best(s4.state(2), s4.utilities);
  EXPECT_EQ(family.size(), 4U);
  EXPECT_EQ(family.front(), (Ballot{E}));
}

TEST(BestResponseTest, LexicographicScenarioMaxima) {
  struct Case {
    const char* id;
    double k2;
    double k3;
  };
  for (const Case& c : {Case{"s1", 0.25, 0.35}, Case{"s2", 0.26, 0.36}, Case{"s4", 0.35, 0.40}}) {
    const auto s = builtin(c.id);
    EXPECT_NEAR(best_response(s.state(2), s.utilities).value, c.k2, 1e-9) << c.id;
    EXPECT_NEAR(best_response(s.state(3), s.utilities).value, c.k3, 1e-9) << c.id;
  }
  const auto s3 = builtin("s3");
  const auto k2 = best_response(s3.state(2), s3.utilities);
  EXPECT_TRUE(k2.degenerate());
  EXPECT_EQ(k2.value, 0.0);
  EXPECT_EQ(k2.argmax.size(), 32U);
  EXPECT_NEAR(best_response(s3.state(3), s3.utilities).value, 0.25, 1e-9);
}

TEST(BestResponseTest, CanonicalChoiceIsSmallestBallot) {
  const auto s1 = builtin("s1");
  const auto br = best_response(s1.state(2), s1.utilities);
  EXPECT_EQ(br.canonical(), (Ballot{E}));
  EXPECT_TRUE(br.contains({C, E}));
  for (std::size_t i = 1; i < br.argmax.size(); ++i) EXPECT_TRUE(canonical_less(br.argmax[i - 1], br.argmax[i]));
}

TEST(BestResponseTest, RandomTieScenarioFour) {
  const auto s4 = builtin("s4");
  const auto k2 = best_response<Rational>(s4.state(2, kRandom), s4.utilities, BasicFutureModel<Rational>{0});
  EXPECT_EQ(k2.value, Rational(1, 4));
  EXPECT_EQ(k2.argmax, (std::vector<Ballot>{{C, E}, {A, C, E}, {B, C, E}, {A, B, C, E}}));
  const auto k3 = best_response<Rational>(s4.state(3, kRandom), s4.utilities, BasicFutureModel<Rational>{0});
  EXPECT_EQ(k3.value, Rational(-1, 30));
  EXPECT_EQ(k3.argmax, (std::vector<Ballot>{{A, B, C, E}}));
}

TEST(BestResponseTest, DominatesEveryHeuristic) {
  for (const auto& id : builtin_ids()) {
    const auto s = builtin(id);
    for (std::size_t k : {2U, 3U}) {
      for (TieBreakKind tb : {kLex, kRandom}) {
        for (int r : {0, 1, 2}) {
          const auto state = s.state(k, tb);
          const FutureModel model{r, 0.5};
          const double best = best_response(state, s.utilities, model).value;
          std::vector<Ballot> heuristics = {truthful(s.utilities), truthful_nontrivial(s.utilities),
                                            follow_the_leader(state), Ballot{}};
          for (int x = 1; x <= max_x(s.utilities); ++x) heuristics.push_back(take_x_best(s.utilities, x, state));
          for (Ballot b : leader_plus_best(state, s.utilities)) heuristics.push_back(b);
          for (Ballot b : heuristics) {
            EXPECT_GE(best + kFloatingTieTolerance, expected_utility(state, b, s.utilities, model))
                << id << " k=" << k << " r=" << r << " " << format_set(b, s.candidates);
          }
        }
      }
    }
  }
}

TEST(BestResponseTest, DichotomousUtilitiesMakeTruthfulOptimal) {
  std::mt19937 rng(2026);
  std::bernoulli_distribution coin(0.5);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t m = 1 + static_cast<std::size_t>(trial % 5);
    const auto state = testing::random_state(rng, m, 3, kRandom);
    std::vector<double> values(m);
    for (auto& v : values) v = coin(rng) ? 1.0 : 0.0;
    const UtilityFunction u(values);
    const auto br = best_response<Rational>(state, u, BasicFutureModel<Rational>{0});
    EXPECT_TRUE(br.contains(truthful(u))) << "trial " << trial;
  }
}

TEST(BestResponseTest, ArgmaxIsExactlyTheMaximizingSet) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t m = 1 + static_cast<std::size_t>(trial % 5);
    const auto state = testing::random_state(rng, m, 3, trial % 2 ? kRandom : kLex);
    const auto u = testing::random_utilities(rng, m);
    const BasicFutureModel<Rational> model{trial % 3, Rational(1, 2)};
    const auto values = ballot_values<Rational>(state, u, model);
    const auto br = best_response<Rational>(state, u, model);
    for (std::uint64_t mask = 0; mask < values.size(); ++mask) {
      EXPECT_LE(values[mask], br.value);
      EXPECT_EQ(br.contains(Ballot::from_mask(mask)), values[mask] == br.value);
    }
  }
}

TEST(BestResponseTest, TooManyCandidatesIsCapacityError) {
  const std::size_t m = kMaxBestResponseCandidates + 1;
  const ElectionState state(testing::labels_for(m), std::vector<std::int64_t>(m, 1), 2);
  const UtilityFunction u(std::vector<double>(m, 0.1));
  EXPECT_EQ(code_of([&] { (void)best_response(state, u); }), ErrorCode::kCapacity);
}

TEST(ClassifyTest, ScenarioExamples) {
  const auto s1 = builtin("s1");
  EXPECT_EQ(classify({E}, s1.state(2), s1.utilities).joined(), "optimal;take-x-best(1)");
  EXPECT_EQ(classify({A, B, E}, s1.state(2), s1.utilities).joined(), "truthful");
  EXPECT_EQ(classify({C, E}, s1.state(2), s1.utilities).joined(), "optimal;leader-plus-best");
  EXPECT_EQ(classify({C}, s1.state(2), s1.utilities).joined(), "follow-the-leader");
  EXPECT_EQ(classify({A, D}, s1.state(2), s1.utilities).joined(), "other");

  const auto s3 = builtin("s3");
  EXPECT_EQ(classify({C, D}, s3.state(2), s3.utilities).joined(), "follow-the-leader");
  EXPECT_EQ(classify({}, s3.state(2), s3.utilities).joined(), "abstain");
  EXPECT_EQ(classify({C, E}, s3.state(2), s3.utilities).joined(), "leader-plus-best");
  EXPECT_EQ(classify({E}, s3.state(3), s3.utilities).joined(), "optimal;take-x-best(1)");

  const auto s2 = builtin("s2");
  EXPECT_EQ(classify({A, B, E}, s2.state(2), s2.utilities).joined(), "truthful-nontrivial;take-x-best(3)");
  EXPECT_EQ(classify({A, B, C, E}, s2.state(2), s2.utilities).joined(), "truthful");
}

TEST(ClassifyTest, LabelsAreSortedAndUnique) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t m = 1 + static_cast<std::size_t>(trial % 5);
    const auto state = testing::random_state(rng, m, 3, kLex);
    const auto u = testing::random_utilities(rng, m);
    const auto labels = classify(testing::random_ballot(rng, m), state, u).labels;
    ASSERT_FALSE(labels.empty());
    EXPECT_TRUE(std::is_sorted(labels.begin(), labels.end()));
    EXPECT_EQ(std::adjacent_find(labels.begin(), labels.end()), labels.end());
  }
}

TEST(ClassifyTest, RejectsForeignBallot) {
  const auto s1 = builtin("s1");
  EXPECT_EQ(code_of([&] { (void)classify({9}, s1.state(2), s1.utilities); }), ErrorCode::kInvalidBallot);
}

}  // namespace
}  // namespace approval
