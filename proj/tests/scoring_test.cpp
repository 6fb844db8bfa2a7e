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

#include "pwlab/scoring.hpp"

#include <gtest/gtest.h>

#include <limits>

#include "pwlab/error.hpp"

namespace pwlab {
namespace {

constexpr CandidateId A{0}, B{1}, C{2};

TEST(TwoOneZeroTest, Shapes) {
  EXPECT_EQ(two_one_zero_vector(2).values(), (std::vector<Score>{2, 0}));
  EXPECT_EQ(two_one_zero_vector(4).values(), (std::vector<Score>{2, 1, 1, 0}));
  EXPECT_TRUE(two_one_zero_vector(7).is_two_one_zero());
  try {
    two_one_zero_vector(1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kTooFewCandidates);
  }
}

TEST(ScoringVectorTest, RejectsNonMonotone) {
  EXPECT_THROW(ScoringVector({1, 2, 0}), Error);
  EXPECT_THROW(ScoringVector({2, -1}), Error);
  EXPECT_FALSE(ScoringVector({3, 1, 0}).is_two_one_zero());
  EXPECT_FALSE(ScoringVector({2, 1, 1}).is_two_one_zero());
}

TEST(ScoringVectorTest, ParsesCommaList) {
  EXPECT_EQ(parse_scoring_vector("2,1,1,0"), two_one_zero_vector(4));
  EXPECT_EQ(parse_scoring_vector("3, 2 ,0"), ScoringVector({3, 2, 0}));
  EXPECT_THROW(parse_scoring_vector("2,,0"), Error);
  EXPECT_THROW(parse_scoring_vector("2,x"), Error);
}

TEST(ComputeScoresTest, HandSummedProfile) {
  CandidateSet set({"a", "b", "c"});
  const std::vector<LinearVote> votes = {LinearVote({A, B, C}, 3),
                                         LinearVote({B, A, C}, 3)};
  const auto board = compute_scores(set, votes, two_one_zero_vector(3));
  EXPECT_EQ(board.values(), (std::vector<Score>{3, 3, 0}));
  EXPECT_EQ(board.total(), 2 * two_one_zero_vector(3).sum());
}

TEST(ComputeScoresTest, EmptyAndSingle) {
  CandidateSet set({"a", "b", "c"});
  EXPECT_EQ(compute_scores(set, {}, two_one_zero_vector(3)).values(),
            (std::vector<Score>{0, 0, 0}));
  const std::vector<LinearVote> one = {LinearVote({A, B, C}, 3)};
  EXPECT_EQ(compute_scores(set, one, two_one_zero_vector(3)).values(),
            (std::vector<Score>{2, 1, 0}));
}

TEST(ComputeScoresTest, LengthMismatchAndOverflow) {
  CandidateSet set({"a", "b", "c"});
  try {
    compute_scores(set, {}, two_one_zero_vector(4));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kLengthMismatch);
  }
  const Score huge = std::numeric_limits<Score>::max() / 2 + 1;
  const std::vector<LinearVote> two = {LinearVote({A, B, C}, 3),
                                       LinearVote({A, B, C}, 3)};
  try {
    compute_scores(set, two, ScoringVector({huge, 0, 0}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kScoreOverflow);
  }
}

TEST(WinnersTest, Modes) {
  const ScoreBoard tie(std::vector<Score>{3, 3, 0});
  EXPECT_EQ(winners(tie, WinnerMode::kNonunique), (std::vector<CandidateId>{A, B}));
  EXPECT_TRUE(winners(tie, WinnerMode::kUnique).empty());
  const ScoreBoard clear(std::vector<Score>{5, 1});
  EXPECT_EQ(winners(clear, WinnerMode::kUnique), (std::vector<CandidateId>{A}));
  EXPECT_THROW(winners(ScoreBoard{}, WinnerMode::kNonunique), Error);
}

}  // namespace
}  // namespace pwlab
