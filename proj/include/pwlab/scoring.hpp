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

// Positional scoring: vectors, score boards and winner sets.

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "pwlab/election.hpp"

namespace pwlab {

using Score = std::int64_t;

enum class WinnerMode { kNonunique, kUnique };

/// Non-increasing, nonnegative integer score values, one per position.
class ScoringVector {
 public:
  ScoringVector() = default;
  /// Throws kNonMonotoneVector for an increasing step or a negative value,
  /// kTooFewCandidates when empty.
  explicit ScoringVector(std::vector<Score> alpha);

  std::size_t size() const { return alpha_.size(); }
  Score operator[](std::size_t position) const { return alpha_[position]; }
  Score top() const { return alpha_.front(); }
  Score sum() const;
  const std::vector<Score>& values() const { return alpha_; }
  /// True for (2, 1, ..., 1, 0) of any length >= 2.
  bool is_two_one_zero() const;

  bool operator==(const ScoringVector&) const = default;

 private:
  std::vector<Score> alpha_;
};

/// (2, 1 x (m-2), 0). Throws kTooFewCandidates for m < 2.
ScoringVector two_one_zero_vector(std::size_t m);

/// Points per candidate, indexed by CandidateId.
class ScoreBoard {
 public:
  ScoreBoard() = default;
  explicit ScoreBoard(std::size_t m) : score_(m, 0) {}
  explicit ScoreBoard(std::vector<Score> scores) : score_(std::move(scores)) {}

  std::size_t size() const { return score_.size(); }
  Score operator[](CandidateId c) const { return score_[c.index()]; }
  Score& operator[](CandidateId c) { return score_[c.index()]; }
  const std::vector<Score>& values() const { return score_; }
  Score total() const;

  bool operator==(const ScoreBoard&) const = default;

 private:
  std::vector<Score> score_;
};

/// Throws kLengthMismatch when |alpha| != |C| or a vote has the wrong size,
/// kScoreOverflow when alpha_1 * |votes| does not fit a Score.
ScoreBoard compute_scores(const CandidateSet& candidates,
                          std::span<const LinearVote> votes,
                          const ScoringVector& alpha);

/// Nonunique: the argmax set. Unique: the argmax set if it is a singleton,
/// otherwise empty. Throws kEmptyBoard.
std::vector<CandidateId> winners(const ScoreBoard& board, WinnerMode mode);

bool is_winner(const ScoreBoard& board, CandidateId c, WinnerMode mode);

/// Fails on overflow instead of wrapping.
Score checked_add(Score a, Score b);
Score checked_mul(Score a, Score b);

WinnerMode parse_winner_mode(const std::string& text);
std::string to_string(WinnerMode mode);

/// "2,1,1,0" -> vector. Throws kParseError / kNonMonotoneVector.
ScoringVector parse_scoring_vector(const std::string& text);

}  // namespace pwlab
