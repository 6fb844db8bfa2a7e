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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "pwlab/harness.hpp"
#include "pwlab/hitting_set.hpp"
#include "pwlab/reduction.hpp"
#include "pwlab/scoring.hpp"
#include "pwlab/solver.hpp"

namespace {

using namespace pwlab;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Tally {
  std::size_t pass = 0, total = 0;
  void add(bool ok) {
    ++total;
    pass += ok;
  }
  bool all() const { return pass == total && total > 0; }
};

bool report(int index, bool ok, const std::string& detail) {
  std::printf("[%s] criterion %d: %s\n", ok ? "PASS" : "FAIL", index, detail.c_str());
  return ok;
}

std::string ratio(const Tally& t) {
  return std::to_string(t.pass) + "/" + std::to_string(t.total);
}

}  // namespace

int main() {
  // Criteria 1-4 share one run over the hitting-set family.
  std::vector<HittingSetInstance> family = exhaustive_hitting_sets(2, 2, 2);
  const std::size_t exhaustive_count = family.size();
  TrialConfig config;
  config.seed = 20260101;
  config.trials = 500;
  config.m_max = 3;
  config.n_max = 3;
  config.k_max = 2;
  for (std::size_t t = 0; t < config.trials; ++t) {
    family.push_back(gen_random_hitting_set(config, t));
  }

  Tally equivalence, witness, calibration, structure;
  std::size_t inconclusive = 0, hs_no = 0;
  const auto start = Clock::now();
  for (const auto& hs : family) {
    const auto hs_answer = solve_hitting_set_bruteforce(hs);
    hs_no += !hs_answer.yes;
    const auto gadget = build_reduction(hs);
    const auto& inst = gadget.instance;
    const auto& election = inst.election;
    const std::size_t m = hs.element_count(), n = hs.set_count(), k = hs.k;
    const Score p = static_cast<Score>(k + m * (2 * n + 1) + n);

    // 4: counts from the closed forms and c's fixed partial score.
    bool counts = election.candidates.size() == 2 + m * (3 * n + 1) &&
                  election.partial_votes.size() == static_cast<std::size_t>(p);
    // Under (2,1,...,1,0) c takes exactly one point from a vote iff it has
    // both a predecessor and a successor there.
    Score c_partial = 0;
    bool fixed = true;
    for (const auto& v : election.partial_votes) {
      const CandidateId c = gadget.layout.c();
      fixed &= v.predecessor_count(c) > 0 && v.successor_count(c) > 0;
      c_partial += 1;
    }
    const auto lib_fixed = is_designated_score_fixed(inst);
    fixed &= lib_fixed.fixed && lib_fixed.value == p;
    structure.add(counts && fixed && c_partial == p);

    // 3: re-score V^l directly.
    const auto base = compute_scores(election.candidates, election.linear_votes, inst.alpha);
    const Score c_total = base[gadget.layout.c()] + c_partial;
    bool calibrated = true;
    for (CandidateId d : election.candidates.ids()) {
      if (d == gadget.layout.c()) continue;
      const Score t = gadget.targets.target[d.index()];
      const bool binding = t < inst.alpha.top() * p;
      calibrated &= binding ? base[d] == c_total - t : base[d] <= c_total - t;
    }
    calibration.add(calibrated);

    // 1: HS answer against position-class search.
    SolveOptions options;
    options.algorithm = Algorithm::kPositionClass;
    const auto pw = solve_possible_winner(inst, options);
    if (pw.status == SolveStatus::kBudgetExceeded) {
      ++inconclusive;
    } else {
      equivalence.add(hs_answer.yes == (pw.status == SolveStatus::kPossible));
    }

    // 2: witness soundness on every HS-yes instance.
    if (hs_answer.yes) {
      bool sound = false;
      try {
        const auto ext = witness_extension(gadget, hs_answer.hitting_set);
        const auto eval = evaluate_extension(inst, ext);
        const auto points = partial_points(inst, ext);
        sound = eval.winner;
        for (CandidateId d : election.candidates.ids()) {
          if (d != gadget.layout.c()) sound &= points[d] <= gadget.targets.target[d.index()];
        }
      } catch (const Error& e) {
        std::printf("  witness error: %s\n", e.what());
      }
      witness.add(sound);
    }
  }
  const double family_seconds = seconds_since(start);

  bool ok = true;
  ok &= report(1, equivalence.all() && family_seconds < 300.0,
               "reduction equivalence " + ratio(equivalence) + " conclusive (" +
                   std::to_string(exhaustive_count) + " exhaustive + " +
                   std::to_string(config.trials) + " random, " + std::to_string(hs_no) +
                   " HS-no, " + std::to_string(inconclusive) + " inconclusive), " +
                   std::to_string(family_seconds) + " s");
  ok &= report(2, witness.all(), "witness soundness " + ratio(witness));
  ok &= report(3, calibration.all(), "calibration postcondition " + ratio(calibration));
  ok &= report(4, structure.all(), "structural counts and fixed score " + ratio(structure));

  // Criteria 5 and 6 share one random PW suite.
  constexpr std::size_t kPwInstances = 500;
  Tally solvers, outcomes, modes;
  const auto pw_start = Clock::now();
  for (std::size_t i = 0; i < kPwInstances; ++i) {
    PwInstance nonunique = gen_random_pw_instance(4242, i, WinnerMode::kNonunique);
    PwInstance unique = nonunique;
    unique.mode = WinnerMode::kUnique;
    bool yes[2] = {false, false};
    for (int mi = 0; mi < 2; ++mi) {
      const auto& inst = mi == 0 ? nonunique : unique;
      SolveOptions brute, pc;
      brute.algorithm = Algorithm::kBrute;
      pc.algorithm = Algorithm::kPositionClass;
      const auto b = solve_possible_winner(inst, brute);
      const auto p = solve_possible_winner(inst, pc);
      bool agree = b.status == p.status && b.status != SolveStatus::kBudgetExceeded;
      if (p.status == SolveStatus::kPossible) agree &= evaluate_extension(inst, p.certificate).winner;
      solvers.add(agree);
      yes[mi] = p.status == SolveStatus::kPossible;
    }
    if (yes[1]) modes.add(yes[0]);
    for (const auto& v : nonunique.election.partial_votes) {
      std::set<std::pair<std::uint32_t, std::uint32_t>> got;
      for (const auto& o : feasible_position_outcomes(v)) got.emplace(o.first.value, o.last.value);
      outcomes.add(got == oracle::first_last_projection(v));
    }
  }
  const double pw_seconds = seconds_since(pw_start);

  ok &= report(5, solvers.all() && outcomes.all() && pw_seconds < 120.0,
               "oracle equivalence: solvers " + ratio(solvers) + " over " +
                   std::to_string(kPwInstances) + " instances x 2 modes, outcomes " +
                   ratio(outcomes) + " partial votes, " + std::to_string(pw_seconds) + " s");
  ok &= report(6, modes.pass == modes.total,
               "unique-yes implies nonunique-yes " + ratio(modes));
  return ok ? 0 : 1;
}
