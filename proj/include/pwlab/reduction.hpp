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

// Hitting Set -> Possible Winner under (2,1,...,1,0).
//
// For a Hitting Set instance with elements e_1..e_m, sets S_1..S_n and
// bound k the gadget uses candidates
//
//   c, h, and for each i: x_i, x_i^1..x_i^n, y_i^1..y_i^n, z_i^1..z_i^n
//
// and partial votes (M stands for "everyone else"):
//
//   k copies of    h > M > {x_1..x_m}
//   per i:         v_i     = h > M > {x_i, y_i^1}
//                  v_i^j   = y_i^j > M > h              (z_i^j free)
//                  w_i^j   = x_i^j > M > y_i^{j+1}      (z_i^j free, j < n)
//                  w_i^n   = x_i^n > M > h              (z_i^n free)
//   per j:         T_j > M > h,  T_j = {x_i^j : e_i in S_j}
//
// c sits in every middle block, so it earns exactly one point per partial
// vote. A calibrating list of linear votes then caps every other candidate
// at the points it may take from the partial votes without overtaking c:
//
//   x_i: |V^p| - 1    x_i^j: |V^p| + 1    y_i^j, z_i^j: |V^p|    h: 2|V^p|

#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "pwlab/election.hpp"
#include "pwlab/hitting_set.hpp"
#include "pwlab/scoring.hpp"
#include "pwlab/solver.hpp"

namespace pwlab {

/// Index arithmetic for the gadget's candidates and partial votes. Element
/// and set indices are 1-based to match the candidate labels.
class GadgetLayout {
 public:
  GadgetLayout(std::size_t elements, std::size_t sets, std::size_t k)
      : m_(elements), n_(sets), k_(k) {}

  std::size_t elements() const { return m_; }
  std::size_t sets() const { return n_; }
  std::size_t k() const { return k_; }

  std::size_t candidate_count() const { return 2 + m_ * (3 * n_ + 1); }
  std::size_t partial_vote_count() const { return k_ + m_ * (2 * n_ + 1) + n_; }

  CandidateId c() const { return id(0); }
  CandidateId h() const { return id(1); }
  CandidateId x(std::size_t i) const { return id(block(i)); }
  CandidateId x(std::size_t i, std::size_t j) const { return id(block(i) + j); }
  CandidateId y(std::size_t i, std::size_t j) const {
    return id(block(i) + n_ + j);
  }
  CandidateId z(std::size_t i, std::size_t j) const {
    return id(block(i) + 2 * n_ + j);
  }

  std::size_t filter_vote(std::size_t copy) const { return copy - 1; }
  std::size_t v(std::size_t i) const { return k_ + (i - 1) * (2 * n_ + 1); }
  std::size_t v(std::size_t i, std::size_t j) const { return v(i) + j; }
  std::size_t w(std::size_t i, std::size_t j) const { return v(i) + n_ + j; }
  std::size_t set_vote(std::size_t j) const {
    return k_ + m_ * (2 * n_ + 1) + j - 1;
  }

  /// Labels in id order: "c", "h", "x_1", "x_1^1", ..., "z_m^n".
  std::vector<std::string> candidate_labels() const;
  /// Names in vote order: "V1[1]".., "v_1", "v_1^1", "w_1^1", .., "V3[1]"..
  std::vector<std::string> vote_names() const;

 private:
  std::size_t block(std::size_t i) const { return 2 + (i - 1) * (3 * n_ + 1); }
  static CandidateId id(std::size_t v) {
    return CandidateId{static_cast<std::uint32_t>(v)};
  }

  std::size_t m_, n_, k_;
};

struct GadgetOutput {
  HittingSetInstance source;
  GadgetLayout layout{0, 0, 0};
  PwInstance instance;
  /// Nominal maximum partial scores (nonunique mode).
  MaxPartialScores targets;
  /// (role label, candidate id) in id order.
  std::vector<std::pair<std::string, CandidateId>> labels;
  /// (vote name, index into the partial votes) in vote order.
  std::vector<std::pair<std::string, std::size_t>> vote_index;
};

GadgetOutput build_reduction(const HittingSetInstance& hs);

/// Linear votes that pin every binding candidate (target < alpha_1 |V^p|)
/// at exactly score_total(c) - target and keep the rest at or below it.
/// Only the (2,1,...,1,0) rule is supported. Throws kConditionOneViolated,
/// kConditionTwoViolated, kConstructionInfeasible, kLengthMismatch,
/// kRuleUnsupportedByAlgorithm.
std::vector<LinearVote> lemma1_construct(const CandidateSet& candidates,
                                         CandidateId designated,
                                         const MaxPartialScores& targets,
                                         const ScoringVector& alpha);

/// True when `target` is a sum of at most `votes` values of alpha.
bool representable_target(Score target, const ScoringVector& alpha,
                          std::size_t votes);

struct CalibrationCheck {
  bool holds = true;
  std::string failure;
};

/// Re-scores `linear` and checks the calibration postcondition.
CalibrationCheck check_calibration(const CandidateSet& candidates,
                                   CandidateId designated,
                                   const MaxPartialScores& targets,
                                   const ScoringVector& alpha,
                                   const std::vector<LinearVote>& linear);

/// The extension from the yes-direction of the correctness argument.
/// `hitting_set` holds element indices. Throws kNotAHittingSet when it
/// misses a set or is larger than k.
std::vector<LinearVote> witness_extension(const GadgetOutput& gadget,
                                          const std::vector<std::size_t>& hitting_set);

/// TSV lines: candidate/vote/target rows.
std::string format_gadget_labels(const GadgetOutput& gadget);

}  // namespace pwlab
