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

#include "pwlab/election.hpp"

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "pwlab/error.hpp"

namespace pwlab {
namespace {

CandidateSet abc() { return CandidateSet({"a", "b", "c"}); }

constexpr CandidateId A{0}, B{1}, C{2}, D{3};

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an Error";
  return ErrorCode::kInvalidArgument;
}

TEST(CandidateSetTest, LookupAndDuplicates) {
  const auto set = abc();
  EXPECT_EQ(set.at("b"), B);
  EXPECT_EQ(set.label(C), "c");
  EXPECT_FALSE(set.find("z").has_value());
  EXPECT_EQ(code_of([&] { set.at("z"); }), ErrorCode::kUnknownCandidate);
  EXPECT_EQ(code_of([] { CandidateSet({"a", "a"}); }),
            ErrorCode::kDuplicateCandidate);
}

TEST(LinearVoteTest, RejectsNonPermutations) {
  EXPECT_EQ(code_of([] { LinearVote({A, A, B}, 3); }), ErrorCode::kNotLinear);
  EXPECT_EQ(code_of([] { LinearVote({A, B}, 3); }), ErrorCode::kNotLinear);
  LinearVote v({C, A, B}, 3);
  EXPECT_EQ(v.position_of(C), 0u);
  EXPECT_TRUE(v.prefers(A, B));
  EXPECT_EQ(v.last(), B);
}

TEST(ValidatePartialVoteTest, ClosesAChain) {
  const std::vector<Preference> pairs = {{A, B}, {B, C}};
  const auto v = validate_partial_vote(pairs, abc());
  const std::vector<Preference> closed = {{A, B}, {A, C}, {B, C}};
  EXPECT_EQ(v.pairs(), closed);
}

TEST(ValidatePartialVoteTest, RejectsCycles) {
  const std::vector<Preference> two = {{A, B}, {B, A}};
  EXPECT_EQ(code_of([&] { validate_partial_vote(two, abc()); }),
            ErrorCode::kCycleDetected);
  const std::vector<Preference> three = {{A, B}, {B, C}, {C, A}};
  EXPECT_EQ(code_of([&] { validate_partial_vote(three, abc()); }),
            ErrorCode::kCycleDetected);
  const std::vector<Preference> self = {{A, A}};
  EXPECT_EQ(code_of([&] { validate_partial_vote(self, abc()); }),
            ErrorCode::kCycleDetected);
}

TEST(ValidatePartialVoteTest, RejectsUnknownCandidates) {
  const std::vector<Preference> pairs = {{A, D}};
  EXPECT_EQ(code_of([&] { validate_partial_vote(pairs, abc()); }),
            ErrorCode::kUnknownCandidate);
}

TEST(ValidatePartialVoteTest, EmptyRelation) {
  const auto v = validate_partial_vote({}, abc());
  EXPECT_EQ(v.pair_count(), 0u);
  EXPECT_EQ(count_linear_extensions(v), 6u);
}

TEST(ExtendsTest, Examples) {
  const std::vector<Preference> ab = {{A, B}};
  const auto v = validate_partial_vote(ab, abc());
  EXPECT_TRUE(extends(LinearVote({A, C, B}, 3), v));
  EXPECT_FALSE(extends(LinearVote({C, B, A}, 3), v));
  const auto empty = validate_partial_vote({}, abc());
  EXPECT_TRUE(extends(LinearVote({C, B, A}, 3), empty));
  EXPECT_EQ(code_of([&] { extends(LinearVote({A, B}, 2), v); }),
            ErrorCode::kCandidateMismatch);
}

TEST(LinearExtensionsTest, ChainWithFreeCandidate) {
  const std::vector<Preference> ab = {{A, B}};
  const auto v = validate_partial_vote(ab, abc());
  // Oracle: 3 of the 6 permutations keep a ahead of b.
  const auto expected = oracle::extensions(v);
  ASSERT_EQ(expected.size(), 3u);
  const auto got = enumerate_linear_extensions(v);
  ASSERT_EQ(got.size(), expected.size());
  for (std::size_t i = 0; i < got.size(); ++i) {
    for (std::size_t p = 0; p < 3; ++p) {
      EXPECT_EQ(got[i].at(p).value, expected[i][p]);
    }
  }
}

TEST(LinearExtensionsTest, TotalOrderHasOne) {
  const std::vector<Preference> chain = {{B, A}, {A, C}};
  const auto v = validate_partial_vote(chain, abc());
  const auto got = enumerate_linear_extensions(v);
  ASSERT_EQ(got.size(), 1u);
  EXPECT_EQ(got[0], LinearVote({B, A, C}, 3));
}

TEST(LinearExtensionsTest, StreamIsLexicographic) {
  const auto v = validate_partial_vote({}, CandidateSet({"a", "b", "c", "d"}));
  LinearExtensionStream stream(v);
  std::optional<LinearVote> prev;
  std::size_t n = 0;
  while (auto ext = stream.next()) {
    if (prev) {
      EXPECT_LT(prev->ranking(), ext->ranking());
    }
    prev = std::move(ext);
    ++n;
  }
  EXPECT_EQ(n, 24u);
  EXPECT_FALSE(stream.next().has_value());
}

TEST(MakeBlockVoteTest, CrossTierProduct) {
  CandidateSet set({"h", "d", "e", "x"});
  const CandidateId h{0}, d{1}, e{2}, x{3};
  const auto v = make_block_vote({{h}, {d, e}, {x}}, set);
  const std::vector<Preference> expected = {{h, d}, {h, e}, {h, x}, {d, x}, {e, x}};
  EXPECT_EQ(v.pairs(), expected);
  ASSERT_TRUE(v.tiers().has_value());
}

TEST(MakeBlockVoteTest, FreeCandidateCountMatchesOracle) {
  CandidateSet set({"y", "d", "h", "z"});
  const CandidateId y{0}, d{1}, h{2};
  const auto v = make_block_vote({{y}, {d}, {h}}, set);
  // Oracle: z can be slotted into any of 4 places around y > d > h.
  const auto expected = oracle::extensions(v).size();
  EXPECT_EQ(expected, 4u);
  EXPECT_EQ(count_linear_extensions(v), expected);
  for (CandidateId other : {y, d, h}) {
    EXPECT_FALSE(v.prefers(CandidateId{3}, other));
    EXPECT_FALSE(v.prefers(other, CandidateId{3}));
  }
}

TEST(MakeBlockVoteTest, EmptyTiersAndErrors) {
  CandidateSet one({"a"});
  EXPECT_EQ(make_block_vote({}, one).pair_count(), 0u);
  EXPECT_EQ(code_of([&] { make_block_vote({{A, B}, {B}}, abc()); }),
            ErrorCode::kOverlappingTiers);
  EXPECT_EQ(code_of([&] { make_block_vote({{A}, {D}}, abc()); }),
            ErrorCode::kUnknownCandidate);
}

TEST(PositionRangeTest, MatchesOracle) {
  CandidateSet set({"y", "c", "d", "h", "z"});
  const auto v = make_block_vote({{CandidateId{0}}, {CandidateId{1}, CandidateId{2}},
                                  {CandidateId{3}}},
                                 set);
  const auto [lo, hi] = position_range(v, CandidateId{1});
  EXPECT_EQ(lo, 1u);
  EXPECT_EQ(hi, 3u);
}

TEST(ExtensionWithEndsTest, PlacesEndsAndExtends) {
  CandidateSet set({"y", "d", "h", "z"});
  const auto v = make_block_vote({{CandidateId{0}}, {CandidateId{1}}, {CandidateId{2}}}, set);
  const auto ext = extension_with_ends(v, CandidateId{3}, CandidateId{2});
  EXPECT_EQ(ext, LinearVote({CandidateId{3}, CandidateId{0}, CandidateId{1}, CandidateId{2}}, 4));
  EXPECT_EQ(code_of([&] { extension_with_ends(v, CandidateId{1}, CandidateId{2}); }),
            ErrorCode::kInvalidArgument);
}

TEST(ExtensionWithHeadTailTest, RejectsViolations) {
  const std::vector<Preference> ab = {{A, B}};
  const auto v = validate_partial_vote(ab, abc());
  const CandidateId head[] = {B};
  EXPECT_EQ(code_of([&] { extension_with_head_tail(v, head, {}); }),
            ErrorCode::kInvalidArgument);
}

TEST(TransitiveClosureTest, Idempotent) {
  const std::vector<Preference> chain = {{A, B}, {B, C}};
  const auto v = validate_partial_vote(chain, abc());
  EXPECT_EQ(transitive_closure(v), v);
  EXPECT_EQ(transitive_closure(transitive_closure(v)), v);
}

}  // namespace
}  // namespace pwlab
