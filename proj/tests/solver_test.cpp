// Copyright 2026 The pwlab Authors
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

#include "pwlab/solver.hpp"

#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "pwlab/election_io.hpp"

namespace pwlab {
namespace {

PwInstance instance_from(const std::string& text, const std::string& designated,
                         WinnerMode mode = WinnerMode::kNonunique) {
  PwInstance inst;
  inst.election = parse_election_string(text);
  inst.designated = inst.election.candidates.at(designated);
  inst.alpha = two_one_zero_vector(inst.election.candidates.size());
  inst.mode = mode;
  return inst;
}

std::set<std::pair<std::uint32_t, std::uint32_t>> as_set(
    const std::vector<PositionOutcome>& outcomes) {
  std::set<std::pair<std::uint32_t, std::uint32_t>> out;
  for (const auto& o : outcomes) out.emplace(o.first.value, o.last.value);
  return out;
}

TEST(FeasibleOutcomesTest, BlockVoteWithFreeCandidate) {
  const auto e = parse_election_string("candidates: y, z, d, h\nblocks: {y} > {d} > {h}\n");
  const auto& v = e.partial_votes[0];
  const auto oracle = oracle::first_last_projection(v);
  // y=0 z=1 d=2 h=3: {(z,h), (y,z), (y,h)}
  const std::set<std::pair<std::uint32_t, std::uint32_t>> expected = {{1, 3}, {0, 1}, {0, 3}};
  EXPECT_EQ(oracle, expected);
  EXPECT_EQ(as_set(feasible_position_outcomes(v)), expected);
}

TEST(FeasibleOutcomesTest, TrivialShapes) {
  const auto two = parse_election_string("candidates: a, b\npairs:\n");
  EXPECT_EQ(as_set(feasible_position_outcomes(two.partial_votes[0])),
            (std::set<std::pair<std::uint32_t, std::uint32_t>>{{0, 1}, {1, 0}}));
  const auto total = parse_election_string("candidates: a, b, c\npairs: a>b, b>c\n");
  EXPECT_EQ(as_set(feasible_position_outcomes(total.partial_votes[0])),
            (std::set<std::pair<std::uint32_t, std::uint32_t>>{{0, 2}}));
  try {
    feasible_position_outcomes(PartialVote(1));
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::kSingletonCandidateSet);
  }
}

TEST(FixedScoreTest, ForcedMiddleEverywhere) {
  const auto inst = instance_from(
      "candidates: c, a, b\nblocks: {a} > {c} > {b}\nblocks: {b} > {c} > {a}\n", "c");
  const auto fixed = is_designated_score_fixed(inst);
  EXPECT_TRUE(fixed.fixed);
  EXPECT_EQ(fixed.value, 2);
}

TEST(FixedScoreTest, EmptyVoteIsNotFixed) {
  const auto inst = instance_from("candidates: c, a\npairs:\n", "c");
  EXPECT_FALSE(is_designated_score_fixed(inst).fixed);
  try {
    max_partial_scores(inst);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kScoreNotFixed);
  }
}

TEST(FixedScoreTest, SharedMiddleTierWithFreeCandidate) {
  const auto inst = instance_from("candidates: y, c, d, h, z\nblocks: {y} > {c,d} > {h}\n", "c");
  const auto points = oracle::designated_points(inst.election.partial_votes[0],
                                                inst.designated, inst.alpha);
  EXPECT_EQ(points, (std::set<Score>{1}));
  const auto fixed = is_designated_score_fixed(inst);
  EXPECT_TRUE(fixed.fixed);
  EXPECT_EQ(fixed.value, 1);
}

TEST(FixedScoreTest, ForcedFirstOrLast) {
  const auto first = instance_from("candidates: c, a, b\nblocks: {c} > {a,b}\n", "c");
  EXPECT_EQ(is_designated_score_fixed(first).value, 2);
  const auto last = instance_from("candidates: c, a, b\nblocks: {a,b} > {c}\n", "c");
  EXPECT_TRUE(is_designated_score_fixed(last).fixed);
  EXPECT_EQ(is_designated_score_fixed(last).value, 0);
}

// c: 8 from the linear votes plus 2 fixed = 10; d: 7.
constexpr const char* kTenSeven =
    "candidates: c, d, e\n"
    "linear: c > d > e\nlinear: c > d > e\nlinear: c > d > e\n"
    "linear: d > c > e\nlinear: d > c > e\n"
    "blocks: {d} > {c} > {e}\nblocks: {e} > {c} > {d}\n";

TEST(MaxPartialScoresTest, DefiningFormula) {
  const auto inst = instance_from(kTenSeven, "c");
  const auto s = max_partial_scores(inst);
  EXPECT_EQ(s.c_fixed_partial, 2);
  EXPECT_EQ(s.target[1], 3);
  EXPECT_EQ(s.target[2], 10);
}

TEST(MaxPartialScoresTest, UniqueModeSubtractsOne) {
  const auto inst = instance_from(kTenSeven, "c", WinnerMode::kUnique);
  EXPECT_EQ(max_partial_scores(inst).target[1], 2);
}

TEST(MaxPartialScoresTest, ConditionOneWitness) {
  const auto inst = instance_from(
      "candidates: c, d, e\nlinear: c > e > d\n"
      "blocks: {d} > {c} > {e}\nblocks: {e} > {c} > {d}\n",
      "c");
  const auto s = max_partial_scores(inst);
  EXPECT_EQ(s.target[1], 4);
  EXPECT_EQ(s.target[1], inst.alpha.top() * 2);
}

constexpr const char* kOpenThree = "candidates: a, b, c\nlinear: a > b > c\npairs:\n";

TEST(SolveTest, OpenVoteMakesAThreeWayTie) {
  const auto inst = instance_from(kOpenThree, "c");
  ASSERT_TRUE(oracle::possible_winner(inst));
  for (auto algorithm : {Algorithm::kBrute, Algorithm::kPositionClass, Algorithm::kAuto}) {
    SolveOptions options;
    options.algorithm = algorithm;
    const auto r = solve_possible_winner(inst, options);
    ASSERT_EQ(r.status, SolveStatus::kPossible) << to_string(algorithm);
    ASSERT_EQ(r.certificate.size(), 1u);
    EXPECT_EQ(format_linear_vote(r.certificate[0], inst.election.candidates),
              "linear: c > b > a");
    const auto eval = evaluate_extension(inst, r.certificate);
    EXPECT_TRUE(eval.winner);
    EXPECT_EQ(eval.board.values(), (std::vector<Score>{2, 2, 2}));
  }
}

TEST(SolveTest, UniqueModeHasNoExtension) {
  const auto inst = instance_from(kOpenThree, "c", WinnerMode::kUnique);
  EXPECT_FALSE(oracle::possible_winner(inst));
  for (auto algorithm : {Algorithm::kBrute, Algorithm::kPositionClass}) {
    SolveOptions options;
    options.algorithm = algorithm;
    EXPECT_EQ(solve_possible_winner(inst, options).status, SolveStatus::kImpossible);
  }
}

TEST(SolveTest, NoPartialVotes) {
  const auto inst = instance_from("candidates: a, b, c\nlinear: c > a > b\n", "c");
  const auto r = solve_possible_winner(inst);
  EXPECT_EQ(r.status, SolveStatus::kPossible);
  EXPECT_TRUE(r.certificate.empty());
  const auto loser = instance_from("candidates: a, b, c\nlinear: a > b > c\n", "c");
  EXPECT_EQ(solve_possible_winner(loser).status, SolveStatus::kImpossible);
}

TEST(SolveTest, AutoPicksByRule) {
  auto inst = instance_from(kOpenThree, "c");
  EXPECT_EQ(solve_possible_winner(inst).algorithm, Algorithm::kPositionClass);
  inst.alpha = ScoringVector({3, 1, 0});
  EXPECT_EQ(solve_possible_winner(inst).algorithm, Algorithm::kBrute);
  SolveOptions options;
  options.algorithm = Algorithm::kPositionClass;
  try {
    solve_possible_winner(inst, options);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kRuleUnsupportedByAlgorithm);
  }
}

TEST(SolveTest, GeneralRuleAgainstOracle) {
  // Plurality-like (1,0,0,0) where c needs the open vote and d must not
  // get it.
  PwInstance inst;
  inst.election = parse_election_string(
      "candidates: a, b, c, d\nlinear: a > c > b > d\nlinear: c > a > b > d\n"
      "pairs: a>b\npairs: d>c\n");
  inst.designated = inst.election.candidates.at("c");
  inst.mode = WinnerMode::kUnique;
  for (const auto& alpha : {ScoringVector({1, 0, 0, 0}), ScoringVector({3, 2, 1, 0}),
                            ScoringVector({1, 1, 1, 0})}) {
    inst.alpha = alpha;
    SolveOptions options;
    options.algorithm = Algorithm::kBrute;
    const auto r = solve_possible_winner(inst, options);
    EXPECT_EQ(r.status == SolveStatus::kPossible, oracle::possible_winner(inst));
    if (r.status == SolveStatus::kPossible) {
      EXPECT_TRUE(evaluate_extension(inst, r.certificate).winner);
    }
  }
}

TEST(SolveTest, BudgetExceededIsDistinct) {
  const auto inst = instance_from(
      "candidates: a, b, c, d\nlinear: a > b > c > d\nlinear: a > b > c > d\n"
      "pairs: a>c\npairs:\npairs:\n",
      "c");
  for (auto algorithm : {Algorithm::kBrute, Algorithm::kPositionClass}) {
    SolveOptions options;
    options.algorithm = algorithm;
    options.node_budget = 2;
    const auto r = solve_possible_winner(inst, options);
    EXPECT_EQ(r.status, SolveStatus::kBudgetExceeded);
    EXPECT_TRUE(r.certificate.empty());
  }
}

TEST(SolveTest, PruningConfigurationsAgree) {
  const auto inst = instance_from(
      "candidates: a, b, c, d, e\nlinear: a > b > d > e > c\nlinear: b > a > e > d > c\n"
      "blocks: {a} > {c} > {b}\nblocks: {d} > {b, e}\npairs: c>a\npairs:\n",
      "c");
  const bool truth = oracle::possible_winner(inst);
  for (bool prune : {false, true}) {
    for (bool flow : {false, true}) {
      SolveOptions options;
      options.algorithm = Algorithm::kPositionClass;
      options.prune = prune;
      options.flow_bound = flow;
      const auto r = solve_possible_winner(inst, options);
      EXPECT_EQ(r.status == SolveStatus::kPossible, truth) << prune << flow;
    }
  }
}

TEST(EvaluateExtensionTest, RejectsNonExtensions) {
  const auto inst = instance_from("candidates: a, b, c\npairs: a>b\n", "c");
  CandidateId a{0}, b{1}, c{2};
  try {
    evaluate_extension(inst, {LinearVote({b, a, c}, 3)});
    FAIL();
  } catch (const NotAnExtensionError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotAnExtension);
    EXPECT_EQ(e.vote_index(), 0u);
    ASSERT_TRUE(e.pair().has_value());
    EXPECT_EQ(*e.pair(), (Preference{a, b}));
  }
  EXPECT_THROW(evaluate_extension(inst, {}), NotAnExtensionError);
  EXPECT_TRUE(evaluate_extension(inst, {LinearVote({c, a, b}, 3)}).winner);
}

}  // namespace
}  // namespace pwlab
