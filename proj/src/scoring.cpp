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

#include <algorithm>
#include <charconv>

#include "pwlab/error.hpp"

namespace pwlab {

Score checked_add(Score a, Score b) {
  Score out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw Error(ErrorCode::kScoreOverflow, "score addition overflows");
  }
  return out;
}

Score checked_mul(Score a, Score b) {
  Score out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw Error(ErrorCode::kScoreOverflow, "score product overflows");
  }
  return out;
}

ScoringVector::ScoringVector(std::vector<Score> alpha)
    : alpha_(std::move(alpha)) {
  if (alpha_.empty()) {
    throw Error(ErrorCode::kTooFewCandidates, "empty scoring vector");
  }
  for (std::size_t j = 0; j < alpha_.size(); ++j) {
    if (alpha_[j] < 0) {
      throw Error(ErrorCode::kNonMonotoneVector,
                  "negative score value at position " + std::to_string(j + 1));
    }
    if (j > 0 && alpha_[j] > alpha_[j - 1]) {
      throw Error(ErrorCode::kNonMonotoneVector,
                  "alpha_" + std::to_string(j + 1) + " > alpha_" +
                      std::to_string(j));
    }
  }
}

Score ScoringVector::sum() const {
  Score s = 0;
  for (Score a : alpha_) s = checked_add(s, a);
  return s;
}

bool ScoringVector::is_two_one_zero() const {
  if (alpha_.size() < 2 || alpha_.front() != 2 || alpha_.back() != 0) {
    return false;
  }
  return std::all_of(alpha_.begin() + 1, alpha_.end() - 1,
                     [](Score a) { return a == 1; });
}

ScoringVector two_one_zero_vector(std::size_t m) {
  if (m < 2) {
    throw Error(ErrorCode::kTooFewCandidates,
                "(2,1,...,1,0) needs at least 2 candidates, got " +
                    std::to_string(m));
  }
  std::vector<Score> alpha(m, 1);
  alpha.front() = 2;
  alpha.back() = 0;
  return ScoringVector(std::move(alpha));
}

Score ScoreBoard::total() const {
  Score s = 0;
  for (Score v : score_) s = checked_add(s, v);
  return s;
}

ScoreBoard compute_scores(const CandidateSet& candidates,
                          std::span<const LinearVote> votes,
                          const ScoringVector& alpha) {
  const std::size_t m = candidates.size();
  if (alpha.size() != m) {
    throw Error(ErrorCode::kLengthMismatch,
                "scoring vector has " + std::to_string(alpha.size()) +
                    " values for " + std::to_string(m) + " candidates");
  }
  // Bounds every partial sum below, so the loop itself cannot overflow.
  checked_mul(alpha.top(), static_cast<Score>(votes.size()));
  ScoreBoard board(m);
  for (const auto& vote : votes) {
    if (vote.size() != m) {
      throw Error(ErrorCode::kLengthMismatch, "vote over wrong candidate count");
    }
    for (std::size_t p = 0; p < m; ++p) board[vote.at(p)] += alpha[p];
  }
  return board;
}

std::vector<CandidateId> winners(const ScoreBoard& board, WinnerMode mode) {
  if (board.size() == 0) throw Error(ErrorCode::kEmptyBoard, "no candidates");
  const Score best = *std::max_element(board.values().begin(),
                                       board.values().end());
  std::vector<CandidateId> out;
  for (std::uint32_t c = 0; c < board.size(); ++c) {
    if (board[CandidateId{c}] == best) out.push_back(CandidateId{c});
  }
  if (mode == WinnerMode::kUnique && out.size() != 1) out.clear();
  return out;
}

bool is_winner(const ScoreBoard& board, CandidateId c, WinnerMode mode) {
  const auto w = winners(board, mode);
  return std::find(w.begin(), w.end(), c) != w.end();
}

WinnerMode parse_winner_mode(const std::string& text) {
  if (text == "nonunique") return WinnerMode::kNonunique;
  if (text == "unique") return WinnerMode::kUnique;
  throw Error(ErrorCode::kInvalidArgument, "unknown winner mode '" + text + "'");
}

std::string to_string(WinnerMode mode) {
  return mode == WinnerMode::kUnique ? "unique" : "nonunique";
}

ScoringVector parse_scoring_vector(const std::string& text) {
  std::vector<Score> alpha;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find(',', start);
    if (end == std::string::npos) end = text.size();
    const char* b = text.data() + start;
    const char* e = text.data() + end;
    while (b < e && *b == ' ') ++b;
    while (e > b && *(e - 1) == ' ') --e;
    Score value = 0;
    auto [ptr, ec] = std::from_chars(b, e, value);
    if (ec != std::errc() || ptr != e || b == e) {
      throw Error(ErrorCode::kParseError, "bad score value in '" + text + "'");
    }
    alpha.push_back(value);
    start = end + 1;
  }
  return ScoringVector(std::move(alpha));
}

}  // namespace pwlab
