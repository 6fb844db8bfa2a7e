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

// Candidates, linear votes, strict partial votes and their extensions.

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace pwlab {

/// Dense index of a candidate inside its CandidateSet.
struct CandidateId {
  std::uint32_t value = 0;

  constexpr auto operator<=>(const CandidateId&) const = default;
  constexpr std::size_t index() const { return value; }
};

/// (a, b) reads "a is strictly preferred to b".
using Preference = std::pair<CandidateId, CandidateId>;

/// Ordered collection of uniquely labelled candidates. Ids are 0..size()-1
/// in insertion order.
class CandidateSet {
 public:
  CandidateSet() = default;
  explicit CandidateSet(std::vector<std::string> labels);

  std::size_t size() const { return labels_.size(); }
  bool contains(CandidateId id) const { return id.index() < labels_.size(); }
  const std::string& label(CandidateId id) const;
  std::optional<CandidateId> find(const std::string& label) const;
  /// Throws kUnknownCandidate.
  CandidateId at(const std::string& label) const;
  std::vector<CandidateId> ids() const;
  const std::vector<std::string>& labels() const { return labels_; }

  bool operator==(const CandidateSet& other) const {
    return labels_ == other.labels_;
  }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, CandidateId> index_;
};

/// A complete ranking, best first.
class LinearVote {
 public:
  LinearVote() = default;
  /// Throws kNotLinear unless `ranking` is a permutation of 0..m-1.
  LinearVote(std::vector<CandidateId> ranking, std::size_t m);

  std::size_t size() const { return ranking_.size(); }
  CandidateId at(std::size_t position) const { return ranking_[position]; }
  /// Zero-based position of `c` (0 is the top).
  std::size_t position_of(CandidateId c) const { return position_[c.index()]; }
  bool prefers(CandidateId a, CandidateId b) const {
    return position_of(a) < position_of(b);
  }
  const std::vector<CandidateId>& ranking() const { return ranking_; }
  CandidateId first() const { return ranking_.front(); }
  CandidateId last() const { return ranking_.back(); }

  bool operator==(const LinearVote& other) const {
    return ranking_ == other.ranking_;
  }

 private:
  std::vector<CandidateId> ranking_;
  std::vector<std::size_t> position_;
};

/// Strict partial order over m candidates, always stored transitively
/// closed. The optional tier list only records how the vote was written
/// (block form) and takes no part in equality.
class PartialVote {
 public:
  using Tiers = std::vector<std::vector<CandidateId>>;

  /// Empty relation over m candidates.
  explicit PartialVote(std::size_t m = 0);

  std::size_t size() const { return m_; }
  bool prefers(CandidateId a, CandidateId b) const {
    return before_[a.index() * m_ + b.index()] != 0;
  }
  std::size_t pair_count() const { return pair_count_; }
  /// All pairs in (a, b) lexicographic order.
  std::vector<Preference> pairs() const;

  std::size_t predecessor_count(CandidateId c) const {
    return predecessors_[c.index()];
  }
  std::size_t successor_count(CandidateId c) const {
    return successors_[c.index()];
  }
  bool is_maximal(CandidateId c) const { return predecessor_count(c) == 0; }
  bool is_minimal(CandidateId c) const { return successor_count(c) == 0; }
  std::vector<CandidateId> maximal_elements() const;
  std::vector<CandidateId> minimal_elements() const;

  const std::optional<Tiers>& tiers() const { return tiers_; }

  bool operator==(const PartialVote& other) const {
    return m_ == other.m_ && before_ == other.before_;
  }

 private:
  friend PartialVote validate_partial_vote(std::span<const Preference>,
                                           const CandidateSet&);
  friend PartialVote make_block_vote(const Tiers&, const CandidateSet&);
  friend PartialVote transitive_closure(const PartialVote&);

  void set(CandidateId a, CandidateId b);
  void recount();

  std::size_t m_ = 0;
  std::vector<std::uint8_t> before_;
  std::vector<std::size_t> predecessors_;
  std::vector<std::size_t> successors_;
  std::size_t pair_count_ = 0;
  std::optional<Tiers> tiers_;
};

/// Closes `pairs` transitively. Throws kUnknownCandidate for ids outside
/// `candidates` and kCycleDetected when the closure is not a strict order.
PartialVote validate_partial_vote(std::span<const Preference> pairs,
                                  const CandidateSet& candidates);

/// Recomputes the closure of an already-valid vote. Idempotent.
PartialVote transitive_closure(const PartialVote& vote);

/// Returns the vote T1 > T2 > ... > Tr; candidates in no tier stay
/// unconstrained. Throws kOverlappingTiers, kUnknownCandidate.
PartialVote make_block_vote(const PartialVote::Tiers& tiers,
                            const CandidateSet& candidates);

/// v' extends v iff every pair of v holds in v'. Throws kCandidateMismatch
/// when the two range over different candidate counts.
bool extends(const LinearVote& linear, const PartialVote& partial);

/// First pair of `partial` (in pairs() order) reversed by `linear`.
std::optional<Preference> first_violated_pair(const LinearVote& linear,
                                              const PartialVote& partial);

/// Streams every linear extension of a partial vote exactly once. At each
/// position the smallest available candidate id is tried first, so the
/// stream is in lexicographic order of rankings.
class LinearExtensionStream {
 public:
  explicit LinearExtensionStream(const PartialVote& vote);

  std::optional<LinearVote> next();

 private:
  void place(CandidateId c);
  void unplace(CandidateId c);
  bool available(std::size_t c) const;
  void fill_from(std::size_t start_candidate);

  std::size_t m_;
  std::vector<std::vector<CandidateId>> successors_;
  std::vector<std::size_t> pending_predecessors_;
  std::vector<bool> placed_;
  std::vector<CandidateId> prefix_;
  bool started_ = false;
  bool done_ = false;
};

std::vector<LinearVote> enumerate_linear_extensions(const PartialVote& vote);

std::uint64_t count_linear_extensions(const PartialVote& vote);

/// Range of zero-based positions `c` can occupy across all extensions:
/// [predecessors, m - 1 - successors].
std::pair<std::size_t, std::size_t> position_range(const PartialVote& vote,
                                                   CandidateId c);

/// Linear extension placing `top` first and `bottom` last, the rest in
/// smallest-id-first topological order. Requires top maximal, bottom
/// minimal and top != bottom.
LinearVote extension_with_ends(const PartialVote& vote, CandidateId top,
                               CandidateId bottom);

/// Ranking that starts with `head`, ends with `tail` (both in the given
/// order) and fills the rest smallest-id-first. Throws kInvalidArgument if
/// the result does not extend `vote`.
LinearVote extension_with_head_tail(const PartialVote& vote,
                                    std::span<const CandidateId> head,
                                    std::span<const CandidateId> tail);

struct Election {
  CandidateSet candidates;
  std::vector<LinearVote> linear_votes;
  std::vector<PartialVote> partial_votes;
};

/// Checks that every vote ranges over exactly the election's candidates.
void validate_election(const Election& election);

// Relabelling by a bijection: candidate i becomes perm[i].
using Permutation = std::vector<CandidateId>;
LinearVote relabel(const LinearVote& vote, const Permutation& perm);
PartialVote relabel(const PartialVote& vote, const Permutation& perm,
                    const CandidateSet& candidates);

}  // namespace pwlab
