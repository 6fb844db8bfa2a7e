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

#include "pwlab/reduction.hpp"

#include <algorithm>
#include <limits>

#include "pwlab/error.hpp"

namespace pwlab {

std::vector<std::string> GadgetLayout::candidate_labels() const {
  std::vector<std::string> labels(candidate_count());
  labels[c().index()] = "c";
  labels[h().index()] = "h";
  for (std::size_t i = 1; i <= m_; ++i) {
    const auto si = std::to_string(i);
    labels[x(i).index()] = "x_" + si;
    for (std::size_t j = 1; j <= n_; ++j) {
      const auto sj = std::to_string(j);
      labels[x(i, j).index()] = "x_" + si + "^" + sj;
      labels[y(i, j).index()] = "y_" + si + "^" + sj;
      labels[z(i, j).index()] = "z_" + si + "^" + sj;
    }
  }
  return labels;
}

std::vector<std::string> GadgetLayout::vote_names() const {
  std::vector<std::string> names(partial_vote_count());
  for (std::size_t copy = 1; copy <= k_; ++copy) {
    names[filter_vote(copy)] = "V1[" + std::to_string(copy) + "]";
  }
  for (std::size_t i = 1; i <= m_; ++i) {
    const auto si = std::to_string(i);
    names[v(i)] = "v_" + si;
    for (std::size_t j = 1; j <= n_; ++j) {
      const auto sj = std::to_string(j);
      names[v(i, j)] = "v_" + si + "^" + sj;
      names[w(i, j)] = "w_" + si + "^" + sj;
    }
  }
  for (std::size_t j = 1; j <= n_; ++j) {
    names[set_vote(j)] = "V3[" + std::to_string(j) + "]";
  }
  return names;
}

bool representable_target(Score target, const ScoringVector& alpha,
                          std::size_t votes) {
  if (target < 0) return false;
  if (target == 0) return true;
  std::vector<Score> values;
  for (Score a : alpha.values()) {
    if (a > 0 && std::find(values.begin(), values.end(), a) == values.end()) {
      values.push_back(a);
    }
  }
  // Fewest score values summing to each amount.
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> fewest(static_cast<std::size_t>(target) + 1, kNone);
  fewest[0] = 0;
  for (std::size_t t = 1; t < fewest.size(); ++t) {
    for (Score a : values) {
      const auto step = static_cast<std::size_t>(a);
      if (step <= t && fewest[t - step] != kNone) {
        fewest[t] = std::min(fewest[t], fewest[t - step] + 1);
      }
    }
  }
  return fewest.back() != kNone && fewest.back() <= votes;
}

namespace {

Score ceil_div(Score a, Score b) {
  return a >= 0 ? (a + b - 1) / b : -((-a) / b);
}

LinearVote first_last_vote(std::size_t m, CandidateId first, CandidateId last) {
  std::vector<CandidateId> ranking;
  ranking.reserve(m);
  ranking.push_back(first);
  for (std::uint32_t d = 0; d < m; ++d) {
    if (CandidateId{d} != first && CandidateId{d} != last) {
      ranking.push_back(CandidateId{d});
    }
  }
  ranking.push_back(last);
  return LinearVote(std::move(ranking), m);
}

}  // namespace

CalibrationCheck check_calibration(const CandidateSet& candidates,
                                   CandidateId designated,
                                   const MaxPartialScores& targets,
                                   const ScoringVector& alpha,
                                   const std::vector<LinearVote>& linear) {
  const auto board = compute_scores(candidates, linear, alpha);
  const Score c_total = board[designated] + targets.c_fixed_partial;
  const Score ceiling =
      alpha.top() * static_cast<Score>(targets.partial_vote_count);
  for (CandidateId d : candidates.ids()) {
    if (d == designated) continue;
    const Score want = c_total - targets.target[d.index()];
    const bool binding = targets.target[d.index()] < ceiling;
    if (binding ? board[d] != want : board[d] > want) {
      return {false, candidates.label(d) + " has " + std::to_string(board[d]) +
                         " points from the linear votes, expected " +
                         (binding ? "" : "at most ") + std::to_string(want)};
    }
  }
  return {};
}

std::vector<LinearVote> lemma1_construct(const CandidateSet& candidates,
                                         CandidateId designated,
                                         const MaxPartialScores& targets,
                                         const ScoringVector& alpha) {
  const std::size_t m = candidates.size();
  if (alpha.size() != m || targets.target.size() != m) {
    throw Error(ErrorCode::kLengthMismatch,
                "scoring vector / target table does not match candidates");
  }
  if (!alpha.is_two_one_zero()) {
    throw Error(ErrorCode::kRuleUnsupportedByAlgorithm,
                "calibration is implemented for (2,1,...,1,0) only");
  }
  const std::size_t votes = targets.partial_vote_count;
  const Score ceiling = checked_mul(alpha.top(), static_cast<Score>(votes));
  const Score cfix = targets.c_fixed_partial;

  std::vector<bool> binding(m, false);
  bool have_sink = false;
  for (CandidateId d : candidates.ids()) {
    if (d == designated) continue;
    const Score t = targets.target[d.index()];
    binding[d.index()] = t < ceiling;
    if (!binding[d.index()]) {
      have_sink = true;
    } else if (!representable_target(t, alpha, votes)) {
      throw Error(ErrorCode::kConditionTwoViolated,
                  candidates.label(d) + " target " + std::to_string(t) +
                      " is not a sum of at most " + std::to_string(votes) +
                      " score values");
    }
  }
  if (!have_sink) {
    throw Error(ErrorCode::kConditionOneViolated,
                "no candidate has target >= " + std::to_string(ceiling));
  }

  // A linear vote moves its first candidate one point above the all-ones
  // baseline and its last one below, so the calibration is a choice of net
  // offsets offset(d) = #first(d) - #last(d) summing to zero, with
  //   offset(d) = offset(c) + cfix - target(d)
  // for binding d and at most that for the others.
  Score spread = 0;
  for (CandidateId d : candidates.ids()) {
    if (d != designated) {
      spread = checked_add(spread, cfix - targets.target[d.index()]);
    }
  }
  const Score c_offset = ceil_div(-spread, static_cast<Score>(m));
  std::vector<Score> offset(m, 0);
  Score total = 0;
  for (CandidateId d : candidates.ids()) {
    offset[d.index()] = d == designated
                            ? c_offset
                            : c_offset + cfix - targets.target[d.index()];
    total = checked_add(total, offset[d.index()]);
  }
  // total >= 0 by the choice of c_offset; the lowest-id sink absorbs it.
  for (CandidateId d : candidates.ids()) {
    if (d != designated && !binding[d.index()]) {
      offset[d.index()] -= total;
      break;
    }
  }

  std::vector<Score> firsts(m, 0), lasts(m, 0);
  for (std::size_t d = 0; d < m; ++d) {
    if (offset[d] > 0) {
      firsts[d] = offset[d];
    } else {
      lasts[d] = -offset[d];
    }
  }
  std::vector<LinearVote> linear;
  while (true) {
    const auto f = std::max_element(firsts.begin(), firsts.end());
    const auto l = std::max_element(lasts.begin(), lasts.end());
    if (*f == 0 || *l == 0) break;
    // A candidate never owes both firsts and lasts, so f != l here.
    const auto fi = static_cast<std::uint32_t>(f - firsts.begin());
    const auto li = static_cast<std::uint32_t>(l - lasts.begin());
    linear.push_back(first_last_vote(m, CandidateId{fi}, CandidateId{li}));
    --*f;
    --*l;
  }

  const auto check =
      check_calibration(candidates, designated, targets, alpha, linear);
  if (!check.holds) {
    throw Error(ErrorCode::kConstructionInfeasible, check.failure);
  }
  return linear;
}

GadgetOutput build_reduction(const HittingSetInstance& hs) {
  const std::size_t m = hs.element_count();
  const std::size_t n = hs.set_count();
  const GadgetLayout g(m, n, hs.k);

  GadgetOutput out;
  out.source = hs;
  out.layout = g;
  const auto labels = g.candidate_labels();
  CandidateSet candidates(labels);
  const std::size_t size = candidates.size();

  // T > (everyone not in T or B) > B, with `free_` left unconstrained.
  auto block = [&](std::vector<CandidateId> top, std::vector<CandidateId> bottom,
                   std::vector<CandidateId> free_) {
    std::vector<bool> used(size, false);
    for (auto* group : {&top, &bottom, &free_}) {
      for (CandidateId d : *group) used[d.index()] = true;
    }
    std::vector<CandidateId> middle;
    for (CandidateId d : candidates.ids()) {
      if (!used[d.index()]) middle.push_back(d);
    }
    return make_block_vote({std::move(top), std::move(middle), std::move(bottom)},
                           candidates);
  };

  std::vector<PartialVote> partial(g.partial_vote_count());
  std::vector<CandidateId> all_x;
  for (std::size_t i = 1; i <= m; ++i) all_x.push_back(g.x(i));
  for (std::size_t copy = 1; copy <= hs.k; ++copy) {
    partial[g.filter_vote(copy)] = block({g.h()}, all_x, {});
  }
  for (std::size_t i = 1; i <= m; ++i) {
    partial[g.v(i)] = block({g.h()}, {g.x(i), g.y(i, 1)}, {});
    for (std::size_t j = 1; j <= n; ++j) {
      partial[g.v(i, j)] = block({g.y(i, j)}, {g.h()}, {g.z(i, j)});
      partial[g.w(i, j)] = j < n
                               ? block({g.x(i, j)}, {g.y(i, j + 1)}, {g.z(i, j)})
                               : block({g.x(i, j)}, {g.h()}, {g.z(i, j)});
    }
  }
  for (std::size_t j = 1; j <= n; ++j) {
    std::vector<CandidateId> t_j;
    for (std::size_t e : hs.sets[j - 1]) t_j.push_back(g.x(e + 1, j));
    partial[g.set_vote(j)] = block(t_j, {g.h()}, {});
  }

  const Score p = static_cast<Score>(g.partial_vote_count());
  MaxPartialScores targets;
  targets.designated = g.c();
  targets.c_fixed_partial = p;
  targets.partial_vote_count = g.partial_vote_count();
  targets.target.assign(size, 0);
  targets.target[g.h().index()] = 2 * p;
  for (std::size_t i = 1; i <= m; ++i) {
    targets.target[g.x(i).index()] = p - 1;
    for (std::size_t j = 1; j <= n; ++j) {
      targets.target[g.x(i, j).index()] = p + 1;
      targets.target[g.y(i, j).index()] = p;
      targets.target[g.z(i, j).index()] = p;
    }
  }

  const auto alpha = two_one_zero_vector(size);
  auto linear = lemma1_construct(candidates, g.c(), targets, alpha);

  out.targets = std::move(targets);
  for (CandidateId d : candidates.ids()) {
    out.labels.emplace_back(labels[d.index()], d);
  }
  const auto names = g.vote_names();
  for (std::size_t v = 0; v < names.size(); ++v) {
    out.vote_index.emplace_back(names[v], v);
  }
  out.instance.election.candidates = std::move(candidates);
  out.instance.election.linear_votes = std::move(linear);
  out.instance.election.partial_votes = std::move(partial);
  out.instance.designated = g.c();
  out.instance.alpha = alpha;
  out.instance.mode = WinnerMode::kNonunique;
  return out;
}

std::vector<LinearVote> witness_extension(
    const GadgetOutput& gadget, const std::vector<std::size_t>& hitting_set) {
  const auto& hs = gadget.source;
  const auto& g = gadget.layout;
  std::vector<std::size_t> chosen = hitting_set;
  std::sort(chosen.begin(), chosen.end());
  chosen.erase(std::unique(chosen.begin(), chosen.end()), chosen.end());
  for (std::size_t e : chosen) {
    if (e >= hs.element_count()) {
      throw Error(ErrorCode::kUnknownElement, "element index " + std::to_string(e));
    }
  }
  if (chosen.size() > hs.k) {
    throw Error(ErrorCode::kNotAHittingSet,
                "size " + std::to_string(chosen.size()) + " exceeds k = " +
                    std::to_string(hs.k));
  }
  if (!is_hitting_set(hs, chosen)) {
    throw Error(ErrorCode::kNotAHittingSet, "some set is not hit");
  }
  std::vector<bool> in_cover(hs.element_count() + 1, false);  // 1-based
  for (std::size_t e : chosen) in_cover[e + 1] = true;

  const auto& partial = gadget.instance.election.partial_votes;
  std::vector<LinearVote> ext(partial.size());
  auto arrange = [&](std::size_t vote, std::vector<CandidateId> head,
                     std::vector<CandidateId> tail) {
    ext[vote] = extension_with_head_tail(partial[vote], head, tail);
  };

  // Filter votes: each element of the cover takes one last place; spare
  // copies repeat the lowest one.
  for (std::size_t copy = 1; copy <= hs.k; ++copy) {
    const std::size_t e = copy <= chosen.size() ? chosen[copy - 1] : chosen[0];
    arrange(g.filter_vote(copy), {g.h()}, {g.x(e + 1)});
  }
  const std::size_t n = g.sets();
  for (std::size_t i = 1; i <= g.elements(); ++i) {
    if (in_cover[i]) {
      arrange(g.v(i), {g.h()}, {g.x(i), g.y(i, 1)});
      for (std::size_t j = 1; j <= n; ++j) {
        arrange(g.v(i, j), {g.y(i, j)}, {g.h(), g.z(i, j)});
        if (j < n) {
          arrange(g.w(i, j), {g.z(i, j), g.x(i, j)}, {g.y(i, j + 1)});
        } else {
          arrange(g.w(i, j), {g.z(i, j), g.x(i, j)}, {g.h()});
        }
      }
    } else {
      arrange(g.v(i), {g.h()}, {g.y(i, 1), g.x(i)});
      for (std::size_t j = 1; j <= n; ++j) {
        arrange(g.v(i, j), {g.z(i, j), g.y(i, j)}, {g.h()});
        if (j < n) {
          arrange(g.w(i, j), {g.x(i, j)}, {g.y(i, j + 1), g.z(i, j)});
        } else {
          arrange(g.w(i, j), {g.x(i, j)}, {g.h(), g.z(i, j)});
        }
      }
    }
  }
  for (std::size_t j = 1; j <= n; ++j) {
    const auto& set = hs.sets[j - 1];
    const auto hit = std::find_if(set.begin(), set.end(),
                                  [&](std::size_t e) { return in_cover[e + 1]; });
    arrange(g.set_vote(j), {g.x(*hit + 1, j)}, {g.h()});
  }
  return ext;
}

std::string format_gadget_labels(const GadgetOutput& gadget) {
  std::string out;
  for (const auto& [label, id] : gadget.labels) {
    out += "candidate\t" + label + "\t" + std::to_string(id.value) + "\n";
  }
  for (const auto& [name, index] : gadget.vote_index) {
    out += "vote\t" + name + "\t" + std::to_string(index) + "\n";
  }
  for (const auto& [label, id] : gadget.labels) {
    if (id == gadget.targets.designated) continue;
    out += "target\t" + label + "\t" +
           std::to_string(gadget.targets.target[id.index()]) + "\n";
  }
  return out;
}

}  // namespace pwlab
