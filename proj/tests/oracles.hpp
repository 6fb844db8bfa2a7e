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

// Test-only brute-force oracles. They walk raw permutations with
// std::next_permutation and never call the library's enumeration, outcome
// or search code, so they can check those paths independently.

#pragma once

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "pwlab/election.hpp"
#include "pwlab/scoring.hpp"
#include "pwlab/solver.hpp"

namespace pwlab::oracle {

inline bool respects(const std::vector<std::uint32_t>& perm,
                     const PartialVote& vote) {
  std::vector<std::size_t> pos(perm.size());
  for (std::size_t p = 0; p < perm.size(); ++p) pos[perm[p]] = p;
  for (const auto& [a, b] : vote.pairs()) {
    if (pos[a.index()] > pos[b.index()]) return false;
  }
  return true;
}

/// All permutations of 0..m-1 consistent with `vote`, lexicographic.
inline std::vector<std::vector<std::uint32_t>> extensions(const PartialVote& vote) {
  std::vector<std::uint32_t> perm(vote.size());
  std::iota(perm.begin(), perm.end(), 0U);
  std::vector<std::vector<std::uint32_t>> out;
  do {
    if (respects(perm, vote)) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

inline std::set<std::pair<std::uint32_t, std::uint32_t>> first_last_projection(
    const PartialVote& vote) {
  std::set<std::pair<std::uint32_t, std::uint32_t>> out;
  for (const auto& perm : extensions(vote)) out.emplace(perm.front(), perm.back());
  return out;
}

/// Distinct point totals the designated candidate can take from one vote.
inline std::set<Score> designated_points(const PartialVote& vote,
                                         CandidateId c,
                                         const ScoringVector& alpha) {
  std::set<Score> out;
  for (const auto& perm : extensions(vote)) {
    const auto p = std::find(perm.begin(), perm.end(), c.value) - perm.begin();
    out.insert(alpha[static_cast<std::size_t>(p)]);
  }
  return out;
}

/// Possible Winner over the full product of raw permutation extensions.
/// Only for tiny instances.
inline bool possible_winner(const PwInstance& instance) {
  const auto& election = instance.election;
  const std::size_t m = election.candidates.size();
  std::vector<Score> base(m, 0);
  for (const auto& v : election.linear_votes) {
    for (std::size_t p = 0; p < m; ++p) base[v.at(p).index()] += instance.alpha[p];
  }
  std::vector<std::vector<std::vector<std::uint32_t>>> options;
  for (const auto& v : election.partial_votes) options.push_back(extensions(v));
  std::vector<std::size_t> pick(options.size(), 0);
  while (true) {
    std::vector<Score> total = base;
    for (std::size_t i = 0; i < options.size(); ++i) {
      const auto& perm = options[i][pick[i]];
      for (std::size_t p = 0; p < m; ++p) total[perm[p]] += instance.alpha[p];
    }
    const Score cs = total[instance.designated.index()];
    bool wins = true;
    for (std::size_t d = 0; d < m; ++d) {
      if (d == instance.designated.index()) continue;
      if (instance.mode == WinnerMode::kUnique ? total[d] >= cs : total[d] > cs) {
        wins = false;
      }
    }
    if (wins) return true;
    std::size_t i = 0;
    while (i < pick.size() && ++pick[i] == options[i].size()) pick[i++] = 0;
    if (i == pick.size()) return false;
  }
}

}  // namespace pwlab::oracle
