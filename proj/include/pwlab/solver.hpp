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

// Exact Possible Winner decision for positional scoring rules.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pwlab/election.hpp"
#include "pwlab/error.hpp"
#include "pwlab/scoring.hpp"

namespace pwlab {

struct PwInstance {
  Election election;
  CandidateId designated;
  ScoringVector alpha;
  WinnerMode mode = WinnerMode::kNonunique;
};

/// Throws kUnknownCandidate / kLengthMismatch / kCandidateMismatch.
void validate_instance(const PwInstance& instance);

/// Who ends up first and last in one extended vote. Under (2,1,...,1,0)
/// this is all that matters for scoring.
struct PositionOutcome {
  CandidateId first;
  CandidateId last;

  auto operator<=>(const PositionOutcome&) const = default;
};

/// Points a candidate earns from one vote with this outcome under
/// (2,1,...,1,0).
constexpr Score outcome_points(const PositionOutcome& o, CandidateId d) {
  return o.first == d ? 2 : (o.last == d ? 0 : 1);
}

/// {(f, l) : f maximal, l minimal, f != l}, sorted. Throws
/// kSingletonCandidateSet for |C| < 2.
std::vector<PositionOutcome> feasible_position_outcomes(const PartialVote& vote);

struct FixedScore {
  bool fixed = false;
  /// c's total from the partial votes; meaningful only when fixed.
  Score value = 0;
};

FixedScore is_designated_score_fixed(const PwInstance& instance);

/// Maximum partial scores s_max(d, c) for every d != c. The designated
/// candidate's own entry in `target` is unused and kept at 0.
struct MaxPartialScores {
  CandidateId designated;
  std::vector<Score> target;
  Score c_fixed_partial = 0;
  std::size_t partial_vote_count = 0;
};

/// target(d) = score_total(c) - score_{V^l}(d), minus one more in unique
/// mode. Throws kScoreNotFixed.
MaxPartialScores max_partial_scores(const PwInstance& instance);

enum class Algorithm { kAuto, kBrute, kPositionClass };

Algorithm parse_algorithm(const std::string& text);
std::string to_string(Algorithm algorithm);

inline constexpr std::uint64_t kDefaultNodeBudget = 200'000'000;

struct SolveOptions {
  Algorithm algorithm = Algorithm::kAuto;
  std::uint64_t node_budget = kDefaultNodeBudget;
  /// Position-class search only; disabling checks bounds at leaves alone.
  bool prune = true;
  /// Position-class search only: also cut branches whose remaining first
  /// and last places cannot be shared out without someone overtaking c
  /// (a max-flow relaxation that ignores first != last within a vote).
  bool flow_bound = true;
};

enum class SolveStatus { kPossible, kImpossible, kBudgetExceeded };

struct SolveResult {
  SolveStatus status = SolveStatus::kImpossible;
  /// One linear vote per partial vote, in order. Set when kPossible.
  std::vector<LinearVote> certificate;
  std::uint64_t nodes = 0;
  Algorithm algorithm = Algorithm::kAuto;
};

/// Throws kRuleUnsupportedByAlgorithm when position-class search is
/// requested for a rule other than (2,1,...,1,0).
SolveResult solve_possible_winner(const PwInstance& instance,
                                  const SolveOptions& options = {});

class NotAnExtensionError : public Error {
 public:
  NotAnExtensionError(std::size_t vote_index, std::optional<Preference> pair,
                      const std::string& what)
      : Error(ErrorCode::kNotAnExtension, what),
        vote_index_(vote_index),
        pair_(pair) {}

  std::size_t vote_index() const { return vote_index_; }
  /// Violated pair; empty when the vote is missing or has the wrong size.
  const std::optional<Preference>& pair() const { return pair_; }

 private:
  std::size_t vote_index_;
  std::optional<Preference> pair_;
};

struct ExtensionEvaluation {
  bool winner = false;
  /// Scores over V^l followed by the extension.
  ScoreBoard board;
};

/// Throws NotAnExtensionError.
ExtensionEvaluation evaluate_extension(const PwInstance& instance,
                                       const std::vector<LinearVote>& extension);

/// Points each candidate takes from just the extended partial votes.
ScoreBoard partial_points(const PwInstance& instance,
                          const std::vector<LinearVote>& extension);

}  // namespace pwlab
