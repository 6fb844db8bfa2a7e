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

#include <algorithm>

#include "pwlab/error.hpp"

namespace pwlab {

CandidateSet::CandidateSet(std::vector<std::string> labels)
    : labels_(std::move(labels)) {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    auto [it, inserted] = index_.emplace(
        labels_[i], CandidateId{static_cast<std::uint32_t>(i)});
    if (!inserted) {
      throw Error(ErrorCode::kDuplicateCandidate, labels_[i]);
    }
  }
}

const std::string& CandidateSet::label(CandidateId id) const {
  if (!contains(id)) {
    throw Error(ErrorCode::kUnknownCandidate,
                "id " + std::to_string(id.value));
  }
  return labels_[id.index()];
}

std::optional<CandidateId> CandidateSet::find(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

CandidateId CandidateSet::at(const std::string& label) const {
  auto id = find(label);
  if (!id) throw Error(ErrorCode::kUnknownCandidate, label);
  return *id;
}

std::vector<CandidateId> CandidateSet::ids() const {
  std::vector<CandidateId> out(labels_.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = CandidateId{static_cast<std::uint32_t>(i)};
  }
  return out;
}

LinearVote::LinearVote(std::vector<CandidateId> ranking, std::size_t m)
    : ranking_(std::move(ranking)), position_(m, m) {
  if (ranking_.size() != m) {
    throw Error(ErrorCode::kNotLinear,
                "ranking has " + std::to_string(ranking_.size()) +
                    " entries for " + std::to_string(m) + " candidates");
  }
  for (std::size_t p = 0; p < ranking_.size(); ++p) {
    const auto c = ranking_[p].index();
    if (c >= m) {
      throw Error(ErrorCode::kUnknownCandidate, "id " + std::to_string(c));
    }
    if (position_[c] != m) {
      throw Error(ErrorCode::kNotLinear,
                  "candidate id " + std::to_string(c) + " ranked twice");
    }
    position_[c] = p;
  }
}

PartialVote::PartialVote(std::size_t m)
    : m_(m), before_(m * m, 0), predecessors_(m, 0), successors_(m, 0) {}

void PartialVote::set(CandidateId a, CandidateId b) {
  before_[a.index() * m_ + b.index()] = 1;
}

void PartialVote::recount() {
  std::fill(predecessors_.begin(), predecessors_.end(), 0);
  std::fill(successors_.begin(), successors_.end(), 0);
  pair_count_ = 0;
  for (std::size_t a = 0; a < m_; ++a) {
    for (std::size_t b = 0; b < m_; ++b) {
      if (before_[a * m_ + b]) {
        ++successors_[a];
        ++predecessors_[b];
        ++pair_count_;
      }
    }
  }
}

std::vector<Preference> PartialVote::pairs() const {
  std::vector<Preference> out;
  out.reserve(pair_count_);
  for (std::uint32_t a = 0; a < m_; ++a) {
    for (std::uint32_t b = 0; b < m_; ++b) {
      if (before_[a * m_ + b]) out.emplace_back(CandidateId{a}, CandidateId{b});
    }
  }
  return out;
}

std::vector<CandidateId> PartialVote::maximal_elements() const {
  std::vector<CandidateId> out;
  for (std::uint32_t c = 0; c < m_; ++c) {
    if (predecessors_[c] == 0) out.push_back(CandidateId{c});
  }
  return out;
}

std::vector<CandidateId> PartialVote::minimal_elements() const {
  std::vector<CandidateId> out;
  for (std::uint32_t c = 0; c < m_; ++c) {
    if (successors_[c] == 0) out.push_back(CandidateId{c});
  }
  return out;
}

namespace {

// Warshall over the dense relation, then reject reflexive entries. A
// reversed pair (a,b),(b,a) always closes to (a,a), so this covers both.
// Returns the index of a candidate on a cycle, if any.
std::optional<std::size_t> close_relation(std::vector<std::uint8_t>& rel,
                                          std::size_t m) {
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t i = 0; i < m; ++i) {
      if (!rel[i * m + k]) continue;
      const std::uint8_t* row_k = &rel[k * m];
      std::uint8_t* row_i = &rel[i * m];
      for (std::size_t j = 0; j < m; ++j) row_i[j] |= row_k[j];
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (rel[i * m + i]) return i;
  }
  return std::nullopt;
}

}  // namespace

PartialVote validate_partial_vote(std::span<const Preference> pairs,
                                  const CandidateSet& candidates) {
  const std::size_t m = candidates.size();
  PartialVote vote(m);
  for (const auto& [a, b] : pairs) {
    if (!candidates.contains(a) || !candidates.contains(b)) {
      throw Error(ErrorCode::kUnknownCandidate,
                  "pair (" + std::to_string(a.value) + ", " +
                      std::to_string(b.value) + ")");
    }
    vote.set(a, b);
  }
  if (auto bad = close_relation(vote.before_, m)) {
    throw Error(ErrorCode::kCycleDetected,
                "preference cycle through " +
                    candidates.label(
                        CandidateId{static_cast<std::uint32_t>(*bad)}));
  }
  vote.recount();
  return vote;
}

PartialVote transitive_closure(const PartialVote& vote) {
  PartialVote out = vote;
  if (close_relation(out.before_, out.m_)) {
    throw Error(ErrorCode::kCycleDetected, "relation is not a strict order");
  }
  out.recount();
  return out;
}

PartialVote make_block_vote(const PartialVote::Tiers& tiers,
                            const CandidateSet& candidates) {
  const std::size_t m = candidates.size();
  std::vector<bool> seen(m, false);
  for (const auto& tier : tiers) {
    for (CandidateId c : tier) {
      if (!candidates.contains(c)) {
        throw Error(ErrorCode::kUnknownCandidate,
                    "id " + std::to_string(c.value));
      }
      if (seen[c.index()]) {
        throw Error(ErrorCode::kOverlappingTiers,
                    candidates.label(c) + " appears in two tiers");
      }
      seen[c.index()] = true;
    }
  }
  // Cross-tier products are already transitively closed.
  PartialVote vote(m);
  for (std::size_t i = 0; i < tiers.size(); ++i) {
    for (std::size_t j = i + 1; j < tiers.size(); ++j) {
      for (CandidateId a : tiers[i]) {
        for (CandidateId b : tiers[j]) vote.set(a, b);
      }
    }
  }
  vote.recount();
  vote.tiers_ = tiers;
  return vote;
}

bool extends(const LinearVote& linear, const PartialVote& partial) {
  return !first_violated_pair(linear, partial).has_value();
}

std::optional<Preference> first_violated_pair(const LinearVote& linear,
                                              const PartialVote& partial) {
  if (linear.size() != partial.size()) {
    throw Error(ErrorCode::kCandidateMismatch,
                "linear vote over " + std::to_string(linear.size()) +
                    " candidates, partial vote over " +
                    std::to_string(partial.size()));
  }
  const auto m = static_cast<std::uint32_t>(partial.size());
  for (std::uint32_t a = 0; a < m; ++a) {
    for (std::uint32_t b = 0; b < m; ++b) {
      const CandidateId ca{a}, cb{b};
      if (partial.prefers(ca, cb) && !linear.prefers(ca, cb)) {
        return Preference{ca, cb};
      }
    }
  }
  return std::nullopt;
}

LinearExtensionStream::LinearExtensionStream(const PartialVote& vote)
    : m_(vote.size()),
      successors_(m_),
      pending_predecessors_(m_, 0),
      placed_(m_, false) {
  for (std::uint32_t a = 0; a < m_; ++a) {
    for (std::uint32_t b = 0; b < m_; ++b) {
      if (vote.prefers(CandidateId{a}, CandidateId{b})) {
        successors_[a].push_back(CandidateId{b});
        ++pending_predecessors_[b];
      }
    }
  }
  prefix_.reserve(m_);
}

bool LinearExtensionStream::available(std::size_t c) const {
  return !placed_[c] && pending_predecessors_[c] == 0;
}

void LinearExtensionStream::place(CandidateId c) {
  placed_[c.index()] = true;
  for (CandidateId s : successors_[c.index()]) --pending_predecessors_[s.index()];
  prefix_.push_back(c);
}

void LinearExtensionStream::unplace(CandidateId c) {
  placed_[c.index()] = false;
  for (CandidateId s : successors_[c.index()]) ++pending_predecessors_[s.index()];
}

// Completes the prefix greedily; the first choice at the current depth is
// the smallest available id >= start_candidate.
void LinearExtensionStream::fill_from(std::size_t start_candidate) {
  std::size_t from = start_candidate;
  while (prefix_.size() < m_) {
    std::size_t c = from;
    while (!available(c)) ++c;
    place(CandidateId{static_cast<std::uint32_t>(c)});
    from = 0;
  }
}

std::optional<LinearVote> LinearExtensionStream::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    fill_from(0);
    return LinearVote(prefix_, m_);
  }
  while (!prefix_.empty()) {
    const CandidateId top = prefix_.back();
    prefix_.pop_back();
    unplace(top);
    std::size_t c = top.index() + 1;
    while (c < m_ && !available(c)) ++c;
    if (c < m_) {
      fill_from(c);
      return LinearVote(prefix_, m_);
    }
  }
  done_ = true;
  return std::nullopt;
}

std::vector<LinearVote> enumerate_linear_extensions(const PartialVote& vote) {
  std::vector<LinearVote> out;
  LinearExtensionStream stream(vote);
  while (auto v = stream.next()) out.push_back(std::move(*v));
  return out;
}

std::uint64_t count_linear_extensions(const PartialVote& vote) {
  std::uint64_t n = 0;
  LinearExtensionStream stream(vote);
  while (stream.next()) ++n;
  return n;
}

std::pair<std::size_t, std::size_t> position_range(const PartialVote& vote,
                                                   CandidateId c) {
  return {vote.predecessor_count(c),
          vote.size() - 1 - vote.successor_count(c)};
}

LinearVote extension_with_ends(const PartialVote& vote, CandidateId top,
                               CandidateId bottom) {
  if (top == bottom || !vote.is_maximal(top) || !vote.is_minimal(bottom)) {
    throw Error(ErrorCode::kInvalidArgument,
                "no extension with the requested first and last candidates");
  }
  const CandidateId head[] = {top};
  const CandidateId tail[] = {bottom};
  return extension_with_head_tail(vote, head, tail);
}

LinearVote extension_with_head_tail(const PartialVote& vote,
                                    std::span<const CandidateId> head,
                                    std::span<const CandidateId> tail) {
  const std::size_t m = vote.size();
  std::vector<std::size_t> pending(m, 0);
  for (std::uint32_t a = 0; a < m; ++a) {
    for (std::uint32_t b = 0; b < m; ++b) {
      if (vote.prefers(CandidateId{a}, CandidateId{b})) ++pending[b];
    }
  }
  std::vector<bool> placed(m, false);
  std::vector<CandidateId> ranking;
  ranking.reserve(m);
  auto put = [&](CandidateId c) {
    placed[c.index()] = true;
    ranking.push_back(c);
    for (std::uint32_t b = 0; b < m; ++b) {
      if (vote.prefers(c, CandidateId{b})) --pending[b];
    }
  };
  for (CandidateId c : head) {
    if (c.index() >= m || placed[c.index()]) {
      throw Error(ErrorCode::kInvalidArgument, "bad head candidate");
    }
    put(c);
  }
  for (CandidateId c : tail) {
    if (c.index() >= m || placed[c.index()]) {
      throw Error(ErrorCode::kInvalidArgument, "bad tail candidate");
    }
    placed[c.index()] = true;
  }
  while (ranking.size() + tail.size() < m) {
    std::size_t c = 0;
    while (c < m && (placed[c] || pending[c] != 0)) ++c;
    if (c == m) {
      throw Error(ErrorCode::kInvalidArgument,
                  "head/tail placement leaves no valid completion");
    }
    put(CandidateId{static_cast<std::uint32_t>(c)});
  }
  for (CandidateId c : tail) ranking.push_back(c);
  LinearVote out(std::move(ranking), m);
  if (!extends(out, vote)) {
    throw Error(ErrorCode::kInvalidArgument,
                "head/tail placement violates the partial vote");
  }
  return out;
}

void validate_election(const Election& election) {
  const std::size_t m = election.candidates.size();
  if (m == 0) {
    throw Error(ErrorCode::kTooFewCandidates, "election has no candidates");
  }
  for (const auto& v : election.linear_votes) {
    if (v.size() != m) {
      throw Error(ErrorCode::kCandidateMismatch, "linear vote size");
    }
  }
  for (const auto& v : election.partial_votes) {
    if (v.size() != m) {
      throw Error(ErrorCode::kCandidateMismatch, "partial vote size");
    }
  }
}

LinearVote relabel(const LinearVote& vote, const Permutation& perm) {
  std::vector<CandidateId> ranking;
  ranking.reserve(vote.size());
  for (CandidateId c : vote.ranking()) ranking.push_back(perm[c.index()]);
  return LinearVote(std::move(ranking), vote.size());
}

PartialVote relabel(const PartialVote& vote, const Permutation& perm,
                    const CandidateSet& candidates) {
  std::vector<Preference> pairs;
  for (const auto& [a, b] : vote.pairs()) {
    pairs.emplace_back(perm[a.index()], perm[b.index()]);
  }
  return validate_partial_vote(pairs, candidates);
}

}  // namespace pwlab
