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

// Seeded instance generation and end-to-end verification of the
// reduction against the exhaustive Hitting Set solver.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pwlab/election.hpp"
#include "pwlab/hitting_set.hpp"
#include "pwlab/solver.hpp"

namespace pwlab {

/// SplitMix64 (Steele, Lea, Flood 2014): state += 0x9E3779B97F4A7C15, then
/// z = (z ^ z>>30) * 0xBF58476D1CE4E5B9, z = (z ^ z>>27) * 0x94D049BB133111EB,
/// output z ^ z>>31.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  /// Independent stream for trial `index` under `seed`: the state starts at
  /// mix(seed) ^ mix(index + 0x632BE59BD9B4E019), mix being one SplitMix64
  /// output step applied to its argument.
  static Rng for_stream(std::uint64_t seed, std::uint64_t index);

  std::uint64_t next();
  /// Uniform on [lo, hi] by rejection; no modulo bias.
  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi);
  /// Uniform double in [0, 1) from the top 53 bits.
  double unit();
  bool bernoulli(double p);

 private:
  std::uint64_t state_;
};

std::uint64_t splitmix64_mix(std::uint64_t x);

struct TrialConfig {
  std::uint64_t seed = 1;
  std::size_t m_max = 3;
  std::size_t n_max = 3;
  std::size_t k_max = 2;
  std::size_t trials = 50;
  std::uint64_t budget = kDefaultNodeBudget;
};

/// Throws kInvalidArgument when a bound or the trial count is zero.
void validate_trial_config(const TrialConfig& config);

/// |X| uniform in [1, m_max], n uniform in [1, n_max], every set a uniform
/// nonempty subset, k uniform in [1, k_max]. Elements are named e1..em.
HittingSetInstance gen_random_hitting_set(const TrialConfig& config,
                                          std::uint64_t index);

/// Random permutation, each implied pair kept with probability `keep`,
/// then closed.
PartialVote gen_random_partial_vote(const CandidateSet& candidates, Rng& rng,
                                    double keep = 0.5);
PartialVote gen_random_partial_vote(const CandidateSet& candidates,
                                    std::uint64_t seed, double keep = 0.5);

/// 2-6 candidates (a, b, ...), 0-3 random linear votes, 0-5 random partial
/// votes, a uniform designated candidate, rule (2,1,...,1,0).
PwInstance gen_random_pw_instance(std::uint64_t seed, std::uint64_t index,
                                  WinnerMode mode);

/// Every collection of n distinct nonempty subsets of {e1..em}, for all
/// m <= m_max, n <= n_max, k <= k_max.
std::vector<HittingSetInstance> exhaustive_hitting_sets(std::size_t m_max,
                                                        std::size_t n_max,
                                                        std::size_t k_max);

enum class Agreement { kAgree, kDisagree, kInconclusive };

struct TrialRow {
  std::size_t trial = 0;
  std::size_t m = 0, n = 0, k = 0;
  bool hs_yes = false;
  SolveStatus pw = SolveStatus::kImpossible;
  Agreement agreement = Agreement::kInconclusive;
  std::uint64_t nodes = 0;
  std::int64_t millis = 0;

  bool structure_ok = false;     // candidate and vote counts
  bool fixed_score_ok = false;   // c fixed at |V^p|
  bool calibration_ok = false;   // linear votes hit their targets
  bool witness_checked = false;  // only on HS-yes
  bool witness_ok = false;
  std::vector<std::string> failures;

  bool ok() const;
};

TrialRow verify_equivalence(const HittingSetInstance& hs, std::uint64_t budget,
                            std::size_t trial = 0);

struct TrialReport {
  std::vector<TrialRow> rows;

  std::size_t conclusive() const;
  std::size_t agreements() const;
  std::size_t inconclusive() const;
  double agreement_rate() const;
  bool all_ok() const;
};

TrialReport run_trials(const std::vector<HittingSetInstance>& instances,
                       std::uint64_t budget);
TrialReport run_random_trials(const TrialConfig& config);

/// Header, one row per trial and a summary line. Timing is written as 0
/// unless `with_timing`, which keeps the output byte-reproducible.
std::string format_report(const TrialReport& report, bool with_timing);
std::string format_summary(const TrialReport& report);

/// Writes <trial>_hs.txt and <trial>_election.pw into `dir`.
void dump_trial(const std::string& dir, const TrialRow& row,
                const HittingSetInstance& hs);

std::string to_string(SolveStatus status);

}  // namespace pwlab
