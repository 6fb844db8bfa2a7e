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

#include "pwlab/harness.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>

#include "pwlab/election_io.hpp"
#include "pwlab/error.hpp"
#include "pwlab/reduction.hpp"

namespace pwlab {

std::uint64_t splitmix64_mix(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

Rng Rng::for_stream(std::uint64_t seed, std::uint64_t index) {
  return Rng(splitmix64_mix(seed) ^ splitmix64_mix(index + 0x632BE59BD9B4E019ULL));
}

std::uint64_t Rng::next() {
  const std::uint64_t out = splitmix64_mix(state_);
  state_ += 0x9E3779B97F4A7C15ULL;
  return out;
}

std::uint64_t Rng::uniform(std::uint64_t lo, std::uint64_t hi) {
  const std::uint64_t span = hi - lo;
  if (span == ~0ULL) return next();
  const std::uint64_t range = span + 1;
  const std::uint64_t limit = ~0ULL - (~0ULL % range);
  std::uint64_t draw = next();
  while (draw >= limit) draw = next();
  return lo + draw % range;
}

double Rng::unit() {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

bool Rng::bernoulli(double p) {
  if (p <= 0.0) return false;
  if (p >= 1.0) return true;
  return unit() < p;
}

void validate_trial_config(const TrialConfig& config) {
  if (config.m_max == 0 || config.n_max == 0 || config.k_max == 0 ||
      config.trials == 0 || config.budget == 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "trial bounds, trial count and budget must be >= 1");
  }
  if (config.m_max > 62) {
    throw Error(ErrorCode::kInvalidArgument, "m_max must be <= 62");
  }
}

HittingSetInstance gen_random_hitting_set(const TrialConfig& config,
                                          std::uint64_t index) {
  validate_trial_config(config);
  Rng rng = Rng::for_stream(config.seed, index);
  const auto m = rng.uniform(1, config.m_max);
  const auto n = rng.uniform(1, config.n_max);
  RawHittingSet raw;
  for (std::uint64_t i = 1; i <= m; ++i) raw.universe.push_back("e" + std::to_string(i));
  for (std::uint64_t j = 0; j < n; ++j) {
    const std::uint64_t mask = rng.uniform(1, (1ULL << m) - 1);
    std::vector<std::string> set;
    for (std::uint64_t i = 0; i < m; ++i) {
      if (mask >> i & 1ULL) set.push_back(raw.universe[i]);
    }
    raw.sets.push_back(std::move(set));
  }
  raw.k = static_cast<std::int64_t>(rng.uniform(1, config.k_max));
  return validate_hitting_set(raw);
}

PartialVote gen_random_partial_vote(const CandidateSet& candidates, Rng& rng,
                                    double keep) {
  auto order = candidates.ids();
  for (std::size_t i = order.size(); i > 1; --i) {
    std::swap(order[i - 1], order[rng.uniform(0, i - 1)]);
  }
  std::vector<Preference> pairs;
  for (std::size_t a = 0; a < order.size(); ++a) {
    for (std::size_t b = a + 1; b < order.size(); ++b) {
      if (rng.bernoulli(keep)) pairs.emplace_back(order[a], order[b]);
    }
  }
  return validate_partial_vote(pairs, candidates);
}

PartialVote gen_random_partial_vote(const CandidateSet& candidates,
                                    std::uint64_t seed, double keep) {
  Rng rng(seed);
  return gen_random_partial_vote(candidates, rng, keep);
}

PwInstance gen_random_pw_instance(std::uint64_t seed, std::uint64_t index,
                                  WinnerMode mode) {
  Rng rng = Rng::for_stream(seed, index);
  const auto m = rng.uniform(2, 6);
  std::vector<std::string> labels;
  for (std::uint64_t i = 0; i < m; ++i) labels.emplace_back(1, static_cast<char>('a' + i));
  PwInstance instance;
  instance.election.candidates = CandidateSet(labels);
  const auto& candidates = instance.election.candidates;
  const auto linear = rng.uniform(0, 3);
  for (std::uint64_t v = 0; v < linear; ++v) {
    auto order = candidates.ids();
    for (std::size_t i = order.size(); i > 1; --i) {
      std::swap(order[i - 1], order[rng.uniform(0, i - 1)]);
    }
    instance.election.linear_votes.emplace_back(std::move(order), m);
  }
  const auto partial = rng.uniform(0, 5);
  for (std::uint64_t v = 0; v < partial; ++v) {
    instance.election.partial_votes.push_back(
        gen_random_partial_vote(candidates, rng));
  }
  instance.designated = CandidateId{static_cast<std::uint32_t>(rng.uniform(0, m - 1))};
  instance.alpha = two_one_zero_vector(m);
  instance.mode = mode;
  return instance;
}

std::vector<HittingSetInstance> exhaustive_hitting_sets(std::size_t m_max,
                                                        std::size_t n_max,
                                                        std::size_t k_max) {
  std::vector<HittingSetInstance> out;
  for (std::size_t m = 1; m <= m_max; ++m) {
    const std::size_t masks = (std::size_t{1} << m) - 1;  // nonempty subsets
    for (std::size_t n = 1; n <= std::min(n_max, masks); ++n) {
      // Increasing n-tuples of distinct masks in [1, masks].
      std::vector<std::size_t> pick(n);
      for (std::size_t i = 0; i < n; ++i) pick[i] = i + 1;
      while (true) {
        for (std::size_t k = 1; k <= k_max; ++k) {
          RawHittingSet raw;
          for (std::size_t i = 1; i <= m; ++i) raw.universe.push_back("e" + std::to_string(i));
          for (std::size_t mask : pick) {
            std::vector<std::string> set;
            for (std::size_t i = 0; i < m; ++i) {
              if (mask >> i & 1U) set.push_back(raw.universe[i]);
            }
            raw.sets.push_back(std::move(set));
          }
          raw.k = static_cast<std::int64_t>(k);
          out.push_back(validate_hitting_set(raw));
        }
        std::size_t i = n;
        while (i > 0 && pick[i - 1] == masks - n + i) --i;
        if (i == 0) break;
        ++pick[i - 1];
        for (std::size_t j = i; j < n; ++j) pick[j] = pick[j - 1] + 1;
      }
    }
  }
  return out;
}

bool TrialRow::ok() const {
  return agreement != Agreement::kDisagree && structure_ok && fixed_score_ok &&
         calibration_ok && (!witness_checked || witness_ok) && failures.empty();
}

TrialRow verify_equivalence(const HittingSetInstance& hs, std::uint64_t budget,
                            std::size_t trial) {
  const auto started = std::chrono::steady_clock::now();
  TrialRow row;
  row.trial = trial;
  row.m = hs.element_count();
  row.n = hs.set_count();
  row.k = hs.k;

  const auto hs_answer = solve_hitting_set_bruteforce(hs);
  row.hs_yes = hs_answer.yes;

  GadgetOutput gadget;
  try {
    gadget = build_reduction(hs);
  } catch (const Error& e) {
    row.failures.push_back(std::string("reduction: ") + e.what());
    return row;
  }
  const auto& instance = gadget.instance;
  const auto& election = instance.election;
  const std::size_t p = election.partial_votes.size();

  row.structure_ok =
      election.candidates.size() == 2 + row.m * (3 * row.n + 1) &&
      p == row.k + row.m * (2 * row.n + 1) + row.n;
  const auto fixed = is_designated_score_fixed(instance);
  row.fixed_score_ok = fixed.fixed && fixed.value == static_cast<Score>(p);

  // Calibration, checked by re-scoring the linear votes directly and again
  // through the maximum-partial-score formula on the finished instance.
  const auto check = check_calibration(election.candidates, instance.designated,
                                       gadget.targets, instance.alpha,
                                       election.linear_votes);
  row.calibration_ok = check.holds;
  if (!check.holds) row.failures.push_back("calibration: " + check.failure);
  if (row.fixed_score_ok) {
    const auto derived = max_partial_scores(instance);
    const Score ceiling = 2 * static_cast<Score>(p);
    for (CandidateId d : election.candidates.ids()) {
      if (d == instance.designated) continue;
      const Score nominal = gadget.targets.target[d.index()];
      const Score actual = derived.target[d.index()];
      if (nominal < ceiling ? actual != nominal : actual < nominal) {
        row.calibration_ok = false;
        row.failures.push_back("max partial score of " +
                               election.candidates.label(d) + " is " +
                               std::to_string(actual));
      }
    }
  }

  SolveOptions options;
  options.algorithm = Algorithm::kPositionClass;
  options.node_budget = budget;
  const auto pw = solve_possible_winner(instance, options);
  row.pw = pw.status;
  row.nodes = pw.nodes;
  if (pw.status == SolveStatus::kBudgetExceeded) {
    row.agreement = Agreement::kInconclusive;
  } else {
    const bool pw_yes = pw.status == SolveStatus::kPossible;
    row.agreement = pw_yes == row.hs_yes ? Agreement::kAgree : Agreement::kDisagree;
    if (pw_yes && !evaluate_extension(instance, pw.certificate).winner) {
      row.failures.push_back("solver certificate does not make c a winner");
    }
  }

  if (row.hs_yes) {
    row.witness_checked = true;
    try {
      const auto ext = witness_extension(gadget, hs_answer.hitting_set);
      const bool winner = evaluate_extension(instance, ext).winner;
      const auto points = partial_points(instance, ext);
      bool within = true;
      for (CandidateId d : election.candidates.ids()) {
        if (d != instance.designated &&
            points[d] > gadget.targets.target[d.index()]) {
          within = false;
          row.failures.push_back("witness gives " + election.candidates.label(d) +
                                 " " + std::to_string(points[d]) + " points");
        }
      }
      row.witness_ok = winner && within;
      if (!winner) row.failures.push_back("witness extension: c is not a winner");
    } catch (const Error& e) {
      row.failures.push_back(std::string("witness: ") + e.what());
    }
  }
  if (row.agreement == Agreement::kDisagree) {
    row.failures.push_back("hitting set and possible winner answers differ");
  }
  row.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - started)
                   .count();
  return row;
}

std::size_t TrialReport::conclusive() const {
  return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const auto& r) {
    return r.agreement != Agreement::kInconclusive;
  }));
}

std::size_t TrialReport::agreements() const {
  return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const auto& r) {
    return r.agreement == Agreement::kAgree;
  }));
}

std::size_t TrialReport::inconclusive() const { return rows.size() - conclusive(); }

double TrialReport::agreement_rate() const {
  const auto total = conclusive();
  return total == 0 ? 0.0 : static_cast<double>(agreements()) / static_cast<double>(total);
}

bool TrialReport::all_ok() const {
  return std::all_of(rows.begin(), rows.end(), [](const auto& r) { return r.ok(); });
}

TrialReport run_trials(const std::vector<HittingSetInstance>& instances,
                       std::uint64_t budget) {
  TrialReport report;
  for (std::size_t t = 0; t < instances.size(); ++t) {
    report.rows.push_back(verify_equivalence(instances[t], budget, t));
  }
  return report;
}

TrialReport run_random_trials(const TrialConfig& config) {
  validate_trial_config(config);
  std::vector<HittingSetInstance> instances;
  for (std::size_t t = 0; t < config.trials; ++t) {
    instances.push_back(gen_random_hitting_set(config, t));
  }
  return run_trials(instances, config.budget);
}

std::string to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::kPossible: return "yes";
    case SolveStatus::kImpossible: return "no";
    case SolveStatus::kBudgetExceeded: return "budget";
  }
  return "?";
}

namespace {

std::string agreement_label(const TrialRow& row) {
  if (!row.ok() && row.agreement != Agreement::kInconclusive) return "FAIL";
  switch (row.agreement) {
    case Agreement::kAgree: return "yes";
    case Agreement::kDisagree: return "FAIL";
    case Agreement::kInconclusive: return "inconclusive";
  }
  return "?";
}

}  // namespace

std::string format_summary(const TrialReport& report) {
  std::size_t witnessed = 0, witness_ok = 0, calibrated = 0, structured = 0;
  for (const auto& r : report.rows) {
    if (r.witness_checked) {
      ++witnessed;
      if (r.witness_ok) ++witness_ok;
    }
    if (r.calibration_ok) ++calibrated;
    if (r.structure_ok && r.fixed_score_ok) ++structured;
  }
  const auto total = std::to_string(report.rows.size());
  return "agreement " + std::to_string(report.agreements()) + "/" +
         std::to_string(report.conclusive()) + " inconclusive " +
         std::to_string(report.inconclusive()) + " witness " +
         std::to_string(witness_ok) + "/" + std::to_string(witnessed) +
         " calibration " + std::to_string(calibrated) + "/" + total +
         " structure " + std::to_string(structured) + "/" + total +
         (report.all_ok() ? " PASS" : " FAIL");
}

std::string format_report(const TrialReport& report, bool with_timing) {
  std::string out = "trial\tm\tn\tk\ths_answer\tpw_answer\tagree\tnodes\tmillis\n";
  for (const auto& r : report.rows) {
    out += std::to_string(r.trial) + "\t" + std::to_string(r.m) + "\t" +
           std::to_string(r.n) + "\t" + std::to_string(r.k) + "\t" +
           (r.hs_yes ? "yes" : "no") + "\t" + to_string(r.pw) + "\t" +
           agreement_label(r) + "\t" + std::to_string(r.nodes) + "\t" +
           std::to_string(with_timing ? r.millis : 0) + "\n";
  }
  out += format_summary(report) + "\n";
  return out;
}

void dump_trial(const std::string& dir, const TrialRow& row,
                const HittingSetInstance& hs) {
  std::filesystem::create_directories(dir);
  const auto stem = std::filesystem::path(dir) / std::to_string(row.trial);
  {
    std::ofstream out(stem.string() + "_hs.txt");
    out << format_hitting_set(hs);
    for (const auto& f : row.failures) out << "# " << f << "\n";
  }
  try {
    write_election_file(stem.string() + "_election.pw",
                        build_reduction(hs).instance.election);
  } catch (const Error&) {
    // The hitting-set dump and its failure notes are still useful.
  }
}

}  // namespace pwlab
