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

#include <algorithm>
#include <limits>
#include <map>

namespace pwlab {

void validate_instance(const PwInstance& instance) {
  validate_election(instance.election);
  const auto& candidates = instance.election.candidates;
  if (!candidates.contains(instance.designated)) {
    throw Error(ErrorCode::kUnknownCandidate, "designated candidate");
  }
  if (instance.alpha.size() != candidates.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                "scoring vector has " + std::to_string(instance.alpha.size()) +
                    " values for " + std::to_string(candidates.size()) +
                    " candidates");
  }
}

std::vector<PositionOutcome> feasible_position_outcomes(const PartialVote& vote) {
  if (vote.size() < 2) {
    throw Error(ErrorCode::kSingletonCandidateSet,
                "first/last outcomes need at least two candidates");
  }
  std::vector<PositionOutcome> out;
  for (CandidateId f : vote.maximal_elements()) {
    for (CandidateId l : vote.minimal_elements()) {
      if (f != l) out.push_back({f, l});
    }
  }
  return out;
}

FixedScore is_designated_score_fixed(const PwInstance& instance) {
  validate_instance(instance);
  FixedScore result{true, 0};
  for (const auto& vote : instance.election.partial_votes) {
    const auto [lo, hi] = position_range(vote, instance.designated);
    // Non-increasing alpha: constant on [lo, hi] iff its endpoints agree.
    if (instance.alpha[lo] != instance.alpha[hi]) return {false, 0};
    result.value = checked_add(result.value, instance.alpha[lo]);
  }
  return result;
}

MaxPartialScores max_partial_scores(const PwInstance& instance) {
  const auto fixed = is_designated_score_fixed(instance);
  if (!fixed.fixed) {
    throw Error(ErrorCode::kScoreNotFixed,
                "designated candidate's partial score varies across extensions");
  }
  const auto& election = instance.election;
  const auto base = compute_scores(election.candidates, election.linear_votes,
                                   instance.alpha);
  const Score c_total = checked_add(base[instance.designated], fixed.value);
  MaxPartialScores out;
  out.designated = instance.designated;
  out.c_fixed_partial = fixed.value;
  out.partial_vote_count = election.partial_votes.size();
  out.target.assign(election.candidates.size(), 0);
  for (CandidateId d : election.candidates.ids()) {
    if (d == instance.designated) continue;
    out.target[d.index()] = c_total - base[d];
    if (instance.mode == WinnerMode::kUnique) --out.target[d.index()];
  }
  return out;
}

Algorithm parse_algorithm(const std::string& text) {
  if (text == "auto") return Algorithm::kAuto;
  if (text == "brute") return Algorithm::kBrute;
  if (text == "position-class") return Algorithm::kPositionClass;
  throw Error(ErrorCode::kInvalidArgument, "unknown algorithm '" + text + "'");
}

std::string to_string(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kAuto: return "auto";
    case Algorithm::kBrute: return "brute";
    case Algorithm::kPositionClass: return "position-class";
  }
  return "auto";
}

namespace {

struct BudgetExhausted {};

class NodeCounter {
 public:
  explicit NodeCounter(std::uint64_t budget) : budget_(budget) {}
  void tick() {
    if (++nodes_ > budget_) throw BudgetExhausted{};
  }
  std::uint64_t nodes() const { return nodes_; }

 private:
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
};

// c beats-or-ties (nonunique) / strictly beats (unique) an opponent.
bool holds_off(Score c_points, Score d_points, WinnerMode mode) {
  return mode == WinnerMode::kUnique ? c_points > d_points
                                     : c_points >= d_points;
}

// ---------------------------------------------------------------------------
// Brute force: every linear extension of every partial vote. Extensions
// that award identical points to every candidate are interchangeable, so
// each vote keeps one representative per distinct point vector.

struct BruteChoice {
  std::vector<Score> points;
  LinearVote representative;
};

class BruteSearch {
 public:
  BruteSearch(const PwInstance& instance, NodeCounter& counter)
      : instance_(instance), counter_(counter) {}

  bool run(std::vector<LinearVote>& certificate) {
    const auto& election = instance_.election;
    const std::size_t m = election.candidates.size();
    for (const auto& vote : election.partial_votes) {
      std::vector<BruteChoice> options;
      std::map<std::vector<Score>, std::size_t> seen;
      LinearExtensionStream stream(vote);
      while (auto ext = stream.next()) {
        counter_.tick();
        std::vector<Score> points(m, 0);
        for (std::size_t p = 0; p < m; ++p) {
          points[ext->at(p).index()] = instance_.alpha[p];
        }
        if (seen.emplace(points, options.size()).second) {
          options.push_back({std::move(points), std::move(*ext)});
        }
      }
      choices_.push_back(std::move(options));
    }
    acc_ = compute_scores(election.candidates, election.linear_votes,
                          instance_.alpha).values();
    picked_.assign(choices_.size(), 0);
    if (!descend(0)) return false;
    certificate.clear();
    for (std::size_t i = 0; i < choices_.size(); ++i) {
      certificate.push_back(choices_[i][picked_[i]].representative);
    }
    return true;
  }

 private:
  bool descend(std::size_t depth) {
    if (depth == choices_.size()) {
      ScoreBoard board(acc_);
      return is_winner(board, instance_.designated, instance_.mode);
    }
    for (std::size_t k = 0; k < choices_[depth].size(); ++k) {
      counter_.tick();
      const auto& pts = choices_[depth][k].points;
      for (std::size_t d = 0; d < acc_.size(); ++d) acc_[d] += pts[d];
      picked_[depth] = k;
      const bool found = descend(depth + 1);
      for (std::size_t d = 0; d < acc_.size(); ++d) acc_[d] -= pts[d];
      if (found) return true;
    }
    return false;
  }

  const PwInstance& instance_;
  NodeCounter& counter_;
  std::vector<std::vector<BruteChoice>> choices_;
  std::vector<Score> acc_;
  std::vector<std::size_t> picked_;
};

// Dinic max-flow on a small reusable graph.
class MaxFlow {
 public:
  void reset(std::size_t nodes) {
    head_.assign(nodes, -1);
    edges_.clear();
  }

  void add_edge(int from, int to, Score capacity) {
    edges_.push_back({to, head_[from], capacity});
    head_[from] = static_cast<int>(edges_.size()) - 1;
    edges_.push_back({from, head_[to], 0});
    head_[to] = static_cast<int>(edges_.size()) - 1;
  }

  Score run(int source, int sink) {
    Score total = 0;
    while (levels(source, sink)) {
      cursor_ = head_;
      while (Score pushed = augment(source, sink, kInfinite)) total += pushed;
    }
    return total;
  }

 private:
  static constexpr Score kInfinite = std::numeric_limits<Score>::max() / 4;

  struct Edge {
    int to;
    int next;
    Score capacity;
  };

  bool levels(int source, int sink) {
    level_.assign(head_.size(), -1);
    queue_.clear();
    queue_.push_back(source);
    level_[source] = 0;
    for (std::size_t q = 0; q < queue_.size(); ++q) {
      const int u = queue_[q];
      for (int e = head_[u]; e != -1; e = edges_[e].next) {
        if (edges_[e].capacity > 0 && level_[edges_[e].to] < 0) {
          level_[edges_[e].to] = level_[u] + 1;
          queue_.push_back(edges_[e].to);
        }
      }
    }
    return level_[sink] >= 0;
  }

  Score augment(int u, int sink, Score limit) {
    if (u == sink) return limit;
    for (int& e = cursor_[u]; e != -1; e = edges_[e].next) {
      Edge& edge = edges_[e];
      if (edge.capacity <= 0 || level_[edge.to] != level_[u] + 1) continue;
      if (Score got = augment(edge.to, sink, std::min(limit, edge.capacity))) {
        edge.capacity -= got;
        edges_[e ^ 1].capacity += got;
        return got;
      }
    }
    return 0;
  }

  std::vector<int> head_;
  std::vector<int> cursor_;
  std::vector<int> level_;
  std::vector<int> queue_;
  std::vector<Edge> edges_;
};

// ---------------------------------------------------------------------------
// Position-class search for (2,1,...,1,0). Each vote branches over its
// feasible (first, last) outcomes. A branch is cut as soon as some opponent
// is guaranteed to finish ahead of c: its points so far plus its smallest
// possible gain from the remaining votes already exceed c's points so far
// plus c's largest possible gain.

class PositionClassSearch {
 public:
  PositionClassSearch(const PwInstance& instance, bool prune, bool flow_bound,
                      NodeCounter& counter)
      : instance_(instance),
        prune_(prune),
        flow_bound_(prune && flow_bound),
        counter_(counter) {}

  bool run(std::vector<LinearVote>& certificate) {
    const auto& election = instance_.election;
    const std::size_t m = election.candidates.size();
    const CandidateId c = instance_.designated;
    const std::size_t votes = election.partial_votes.size();

    std::vector<std::vector<PositionOutcome>> outcomes(votes);
    for (std::size_t i = 0; i < votes; ++i) {
      outcomes[i] = feasible_position_outcomes(election.partial_votes[i]);
      std::stable_sort(outcomes[i].begin(), outcomes[i].end(),
                       [c](const PositionOutcome& a, const PositionOutcome& b) {
                         return outcome_points(a, c) > outcome_points(b, c);
                       });
    }
    order_.resize(votes);
    for (std::size_t i = 0; i < votes; ++i) order_[i] = i;
    std::stable_sort(order_.begin(), order_.end(),
                     [&](std::size_t a, std::size_t b) {
                       return outcomes[a].size() < outcomes[b].size();
                     });
    for (std::size_t i : order_) branches_.push_back(std::move(outcomes[i]));
    for (std::size_t i : order_) {
      const auto& vote = election.partial_votes[i];
      tops_.push_back(vote.maximal_elements());
      bottoms_.push_back(vote.minimal_elements());
    }

    // rest_min_[t * m + d]: least d can still gain from branches t..end.
    rest_min_.assign((votes + 1) * m, 0);
    rest_max_c_.assign(votes + 1, 0);
    for (std::size_t t = votes; t-- > 0;) {
      const auto& outs = branches_[t];
      std::vector<std::size_t> as_first(m, 0), as_last(m, 0);
      for (const auto& o : outs) {
        ++as_first[o.first.index()];
        ++as_last[o.last.index()];
      }
      for (std::size_t d = 0; d < m; ++d) {
        Score lo = as_last[d] > 0 ? 0 : (as_first[d] < outs.size() ? 1 : 2);
        rest_min_[t * m + d] = rest_min_[(t + 1) * m + d] + lo;
      }
      const std::size_t ci = c.index();
      Score hi = as_first[ci] > 0 ? 2 : (as_last[ci] < outs.size() ? 1 : 0);
      rest_max_c_[t] = rest_max_c_[t + 1] + hi;
    }

    acc_ = compute_scores(election.candidates, election.linear_votes,
                          instance_.alpha).values();
    picked_.assign(votes, 0);
    if (!descend(0)) return false;

    certificate.assign(votes, LinearVote{});
    for (std::size_t t = 0; t < votes; ++t) {
      const auto& o = branches_[t][picked_[t]];
      certificate[order_[t]] =
          extension_with_ends(election.partial_votes[order_[t]], o.first, o.last);
    }
    return true;
  }

 private:
  bool doomed(std::size_t depth) const {
    const std::size_t m = acc_.size();
    const std::size_t ci = instance_.designated.index();
    const Score c_best = acc_[ci] + rest_max_c_[depth];
    for (std::size_t d = 0; d < m; ++d) {
      if (d == ci) continue;
      if (!holds_off(c_best, acc_[d] + rest_min_[depth * m + d],
                     instance_.mode)) {
        return true;
      }
    }
    return false;
  }

  // Relaxation: every remaining vote hands one first place to a maximal
  // candidate and one last place to a minimal one. Opponent d ends with
  // acc(d) + R + firsts(d) - lasts(d) points, so it can absorb
  // slack(d) = cap(d) - acc(d) - R more firsts than lasts. Firsts flow
  // source -> vote -> candidate; a candidate passes them on to the sink
  // through its slack or through the last places it may take. A negative
  // slack is a demand on last places, injected at the candidate. If the
  // flow cannot carry every unit, no real completion keeps c on top.
  bool flow_infeasible(std::size_t depth) {
    const std::size_t m = acc_.size();
    const CandidateId c = instance_.designated;
    const std::size_t remaining = branches_.size() - depth;
    const Score cap = acc_[c.index()] + rest_max_c_[depth] -
                      (instance_.mode == WinnerMode::kUnique ? 1 : 0);
    const int source = 0, sink = 1;
    const auto candidate_node = [](std::size_t d) { return static_cast<int>(2 + d); };
    int next_node = static_cast<int>(2 + m);
    flow_.reset(2 + m + 2 * remaining);
    Score supply = 0;
    for (std::size_t d = 0; d < m; ++d) {
      if (d == c.index()) continue;
      const Score slack = cap - acc_[d] - static_cast<Score>(remaining);
      if (slack >= 0) {
        if (slack > 0) flow_.add_edge(candidate_node(d), sink, slack);
      } else {
        flow_.add_edge(source, candidate_node(d), -slack);
        supply -= slack;
      }
    }
    for (std::size_t t = depth; t < branches_.size(); ++t) {
      const auto& tops = tops_[t];
      // c may take this first place itself, which costs nobody anything.
      if (std::find(tops.begin(), tops.end(), c) == tops.end()) {
        const int first_node = next_node++;
        flow_.add_edge(source, first_node, 1);
        ++supply;
        for (CandidateId d : tops) flow_.add_edge(first_node, candidate_node(d.index()), 1);
      }
      const int last_node = next_node++;
      flow_.add_edge(last_node, sink, 1);
      for (CandidateId d : bottoms_[t]) {
        if (d != c) flow_.add_edge(candidate_node(d.index()), last_node, 1);
      }
    }
    return flow_.run(source, sink) < supply;
  }

  void apply(const PositionOutcome& o, Score sign) {
    // Relative to one point for everyone: +1 first, -1 last.
    for (auto& a : acc_) a += sign;
    acc_[o.first.index()] += sign;
    acc_[o.last.index()] -= sign;
  }

  bool descend(std::size_t depth) {
    if (depth == branches_.size()) return !doomed(depth);
    if (prune_ && doomed(depth)) return false;
    if (flow_bound_ && flow_infeasible(depth)) return false;
    const auto& outs = branches_[depth];
    for (std::size_t k = 0; k < outs.size(); ++k) {
      counter_.tick();
      apply(outs[k], +1);
      picked_[depth] = k;
      const bool found = descend(depth + 1);
      apply(outs[k], -1);
      if (found) return true;
    }
    return false;
  }

  const PwInstance& instance_;
  bool prune_;
  bool flow_bound_;
  NodeCounter& counter_;
  MaxFlow flow_;
  std::vector<std::vector<CandidateId>> tops_;
  std::vector<std::vector<CandidateId>> bottoms_;
  std::vector<std::size_t> order_;
  std::vector<std::vector<PositionOutcome>> branches_;
  std::vector<Score> rest_min_;
  std::vector<Score> rest_max_c_;
  std::vector<Score> acc_;
  std::vector<std::size_t> picked_;
};

}  // namespace

SolveResult solve_possible_winner(const PwInstance& instance,
                                  const SolveOptions& options) {
  validate_instance(instance);
  Algorithm algorithm = options.algorithm;
  if (algorithm == Algorithm::kAuto) {
    algorithm = instance.alpha.is_two_one_zero() ? Algorithm::kPositionClass
                                                 : Algorithm::kBrute;
  }
  if (algorithm == Algorithm::kPositionClass &&
      !instance.alpha.is_two_one_zero()) {
    throw Error(ErrorCode::kRuleUnsupportedByAlgorithm,
                "position-class search requires the (2,1,...,1,0) rule");
  }

  SolveResult result;
  result.algorithm = algorithm;
  NodeCounter counter(options.node_budget);
  try {
    bool found = false;
    if (algorithm == Algorithm::kBrute) {
      BruteSearch search(instance, counter);
      found = search.run(result.certificate);
    } else {
      PositionClassSearch search(instance, options.prune, options.flow_bound,
                                 counter);
      found = search.run(result.certificate);
    }
    result.status = found ? SolveStatus::kPossible : SolveStatus::kImpossible;
  } catch (const BudgetExhausted&) {
    result.status = SolveStatus::kBudgetExceeded;
    result.certificate.clear();
  }
  result.nodes = counter.nodes();
  return result;
}

namespace {

void check_extension(const PwInstance& instance,
                     const std::vector<LinearVote>& extension) {
  const auto& partial = instance.election.partial_votes;
  const std::size_t m = instance.election.candidates.size();
  if (extension.size() != partial.size()) {
    throw NotAnExtensionError(
        std::min(extension.size(), partial.size()), std::nullopt,
        "expected " + std::to_string(partial.size()) + " votes, got " +
            std::to_string(extension.size()));
  }
  for (std::size_t i = 0; i < partial.size(); ++i) {
    if (extension[i].size() != m) {
      throw NotAnExtensionError(i, std::nullopt,
                                "vote " + std::to_string(i) + " has wrong size");
    }
    if (auto bad = first_violated_pair(extension[i], partial[i])) {
      const auto& labels = instance.election.candidates;
      throw NotAnExtensionError(
          i, bad,
          "vote " + std::to_string(i) + " reverses " + labels.label(bad->first) +
              " > " + labels.label(bad->second));
    }
  }
}

}  // namespace

ExtensionEvaluation evaluate_extension(const PwInstance& instance,
                                       const std::vector<LinearVote>& extension) {
  validate_instance(instance);
  check_extension(instance, extension);
  std::vector<LinearVote> profile = instance.election.linear_votes;
  profile.insert(profile.end(), extension.begin(), extension.end());
  ExtensionEvaluation out;
  out.board = compute_scores(instance.election.candidates, profile,
                             instance.alpha);
  out.winner = is_winner(out.board, instance.designated, instance.mode);
  return out;
}

ScoreBoard partial_points(const PwInstance& instance,
                          const std::vector<LinearVote>& extension) {
  validate_instance(instance);
  check_extension(instance, extension);
  return compute_scores(instance.election.candidates, extension, instance.alpha);
}

}  // namespace pwlab
