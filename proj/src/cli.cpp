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

#include "pwlab/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

#include "pwlab/election_io.hpp"
#include "pwlab/error.hpp"
#include "pwlab/harness.hpp"
#include "pwlab/hitting_set.hpp"
#include "pwlab/reduction.hpp"
#include "pwlab/scoring.hpp"
#include "pwlab/solver.hpp"

namespace pwlab {
namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::uint64_t default_budget() {
  if (const char* env = std::getenv("PW_LAB_BUDGET")) {
    std::uint64_t value = 0;
    const std::string_view text(env);
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec == std::errc() && ptr == text.data() + text.size() && value > 0) {
      return value;
    }
    throw UsageError("PW_LAB_BUDGET must be a positive integer");
  }
  return kDefaultNodeBudget;
}

ScoringVector resolve_rule(const std::string& rule, const std::string& alpha,
                           std::size_t m) {
  if (!alpha.empty()) {
    if (!rule.empty()) throw UsageError("--alpha and --rule are exclusive");
    return parse_scoring_vector(alpha);
  }
  if (rule.empty() || rule == "two-one-zero") return two_one_zero_vector(m);
  throw UsageError("unknown rule '" + rule + "' (expected two-one-zero)");
}

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw UsageError("cannot write " + path);
  file << text;
}

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find(',', start);
    if (end == std::string::npos) end = text.size();
    auto item = text.substr(start, end - start);
    const auto b = item.find_first_not_of(' ');
    const auto e = item.find_last_not_of(' ');
    if (b != std::string::npos) out.push_back(item.substr(b, e - b + 1));
    start = end + 1;
  }
  return out;
}

struct ScoreArgs {
  std::string in, alpha, rule, mode = "nonunique";
};

int cmd_score(const ScoreArgs& a, std::ostream& out) {
  const auto election = read_election_file(a.in);
  if (!election.partial_votes.empty()) {
    throw Error(ErrorCode::kParseError,
                "score expects linear votes only; use solve for partial votes");
  }
  const auto alpha = resolve_rule(a.rule, a.alpha, election.candidates.size());
  const auto mode = parse_winner_mode(a.mode);
  const auto board = compute_scores(election.candidates, election.linear_votes, alpha);
  auto ids = election.candidates.ids();
  std::stable_sort(ids.begin(), ids.end(), [&](CandidateId x, CandidateId y) {
    if (board[x] != board[y]) return board[x] > board[y];
    return election.candidates.label(x) < election.candidates.label(y);
  });
  for (CandidateId d : ids) {
    out << election.candidates.label(d) << '\t' << board[d] << '\n';
  }
  auto w = winners(board, mode);
  std::sort(w.begin(), w.end(), [&](CandidateId x, CandidateId y) {
    return election.candidates.label(x) < election.candidates.label(y);
  });
  out << "winners:";
  for (std::size_t i = 0; i < w.size(); ++i) {
    out << (i ? ", " : " ") << election.candidates.label(w[i]);
  }
  out << '\n';
  return kExitPositive;
}

struct SolveArgs {
  std::string in, designated = "c", alpha, rule, mode = "nonunique",
                  algorithm = "auto";
  std::optional<std::uint64_t> budget;
  bool no_prune = false;
};

int cmd_solve(const SolveArgs& a, std::ostream& out) {
  PwInstance instance;
  instance.election = read_election_file(a.in);
  const auto found = instance.election.candidates.find(a.designated);
  if (!found) throw UsageError("designated candidate '" + a.designated + "' not in election");
  instance.designated = *found;
  instance.alpha = resolve_rule(a.rule, a.alpha, instance.election.candidates.size());
  instance.mode = parse_winner_mode(a.mode);
  SolveOptions options;
  options.algorithm = parse_algorithm(a.algorithm);
  options.node_budget = a.budget ? *a.budget : default_budget();
  options.prune = !a.no_prune;
  const auto result = solve_possible_winner(instance, options);
  switch (result.status) {
    case SolveStatus::kPossible:
      out << "POSSIBLE\n";
      for (const auto& v : result.certificate) {
        out << format_linear_vote(v, instance.election.candidates) << '\n';
      }
      return kExitPositive;
    case SolveStatus::kImpossible:
      out << "IMPOSSIBLE\n";
      return kExitNegative;
    case SolveStatus::kBudgetExceeded:
      out << "BUDGET-EXCEEDED\n";
      return kExitBudget;
  }
  return kExitNegative;
}

struct ReduceArgs {
  std::string in, out, labels;
};

int cmd_reduce(const ReduceArgs& a, std::ostream& out) {
  const auto hs = read_hitting_set_file(a.in);
  const auto gadget = build_reduction(hs);
  emit(a.out, format_election(gadget.instance.election), out);
  if (!a.labels.empty()) emit(a.labels, format_gadget_labels(gadget), out);
  return kExitPositive;
}

struct WitnessArgs {
  std::string in, hitting_set, out;
};

int cmd_witness(const WitnessArgs& a, std::ostream& out, std::ostream& err) {
  const auto hs = read_hitting_set_file(a.in);
  const auto gadget = build_reduction(hs);
  const auto chosen = resolve_elements(hs, split_commas(a.hitting_set));
  const auto ext = witness_extension(gadget, chosen);
  const auto eval = evaluate_extension(gadget.instance, ext);
  Election profile;
  profile.candidates = gadget.instance.election.candidates;
  profile.linear_votes = gadget.instance.election.linear_votes;
  profile.linear_votes.insert(profile.linear_votes.end(), ext.begin(), ext.end());
  emit(a.out, format_election(profile), out);
  err << "c is " << (eval.winner ? "" : "not ") << "a winner of the extension\n";
  return eval.winner ? kExitPositive : kExitNegative;
}

struct VerifyArgs {
  TrialConfig config;
  std::optional<std::uint64_t> budget;
  bool exhaustive = false;
  bool timing = false;
  std::string report, dump_dir;
};

int cmd_verify(VerifyArgs a, std::ostream& out, std::ostream& err) {
  a.config.budget = a.budget ? *a.budget : default_budget();
  validate_trial_config(a.config);
  std::vector<HittingSetInstance> instances;
  if (a.exhaustive) instances = exhaustive_hitting_sets(2, 2, 2);
  for (std::size_t t = 0; t < a.config.trials; ++t) {
    instances.push_back(gen_random_hitting_set(a.config, t));
  }
  const auto report = run_trials(instances, a.config.budget);
  const auto text = format_report(report, a.timing);
  if (a.report.empty()) {
    out << text;
  } else {
    emit(a.report, text, out);
    out << format_summary(report) << '\n';
  }
  for (const auto& row : report.rows) {
    if (row.ok()) continue;
    err << "trial " << row.trial << " failed:";
    for (const auto& f : row.failures) err << " " << f << ";";
    err << '\n';
    if (!a.dump_dir.empty()) dump_trial(a.dump_dir, row, instances[row.trial]);
  }
  return report.all_ok() ? kExitPositive : kExitNegative;
}

struct GenArgs {
  TrialConfig config;
  std::uint64_t index = 0;
  std::string out;
};

int cmd_gen_hs(const GenArgs& a, std::ostream& out) {
  emit(a.out, format_hitting_set(gen_random_hitting_set(a.config, a.index)), out);
  return kExitPositive;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Possible Winner toolkit for positional scoring rules"};
  app.name("pwlab");
  app.require_subcommand(1);

  ScoreArgs score;
  auto* score_cmd = app.add_subcommand("score", "Score an election of linear votes");
  score_cmd->add_option("--in", score.in, "Election file")->required();
  score_cmd->add_option("--alpha", score.alpha, "Scoring vector, e.g. 2,1,1,0");
  score_cmd->add_option("--rule", score.rule, "Named rule: two-one-zero (default)");
  score_cmd->add_option("--mode", score.mode, "nonunique | unique");

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Decide Possible Winner for an election");
  solve_cmd->add_option("--in", solve.in, "Election file")->required();
  solve_cmd->add_option("--designated", solve.designated, "Designated candidate label (default c)");
  solve_cmd->add_option("--alpha", solve.alpha, "Scoring vector, e.g. 2,1,1,0");
  solve_cmd->add_option("--rule", solve.rule, "Named rule: two-one-zero (default)");
  solve_cmd->add_option("--mode", solve.mode, "nonunique | unique");
  solve_cmd->add_option("--algorithm", solve.algorithm, "auto | brute | position-class");
  solve_cmd->add_option("--budget", solve.budget,
                        "Search node limit (default $PW_LAB_BUDGET or 200000000)");
  solve_cmd->add_flag("--no-prune", solve.no_prune, "Disable bound pruning in position-class search");

  ReduceArgs reduce;
  auto* reduce_cmd = app.add_subcommand("reduce", "Build the Possible Winner gadget for a Hitting Set instance");
  reduce_cmd->add_option("--in", reduce.in, "Hitting Set file")->required();
  reduce_cmd->add_option("--out", reduce.out, "Election file to write (default stdout)");
  reduce_cmd->add_option("--emit-labels", reduce.labels, "TSV of candidate roles, vote names and targets");

  WitnessArgs witness;
  auto* witness_cmd = app.add_subcommand("witness", "Write the extension induced by a hitting set");
  witness_cmd->add_option("--in", witness.in, "Hitting Set file")->required();
  witness_cmd->add_option("--hitting-set", witness.hitting_set, "Comma-separated elements")->required();
  witness_cmd->add_option("--out", witness.out, "Election file of linear votes (default stdout)");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check the reduction against the Hitting Set oracle");
  verify_cmd->add_option("--seed", verify.config.seed, "Generator seed");
  verify_cmd->add_option("--trials", verify.config.trials, "Number of random instances");
  verify_cmd->add_option("--m-max", verify.config.m_max, "Largest universe");
  verify_cmd->add_option("--n-max", verify.config.n_max, "Most sets");
  verify_cmd->add_option("--k-max", verify.config.k_max, "Largest k");
  verify_cmd->add_option("--budget", verify.budget, "Search node limit per trial");
  verify_cmd->add_flag("--exhaustive", verify.exhaustive,
                       "Also run every instance with m, n, k <= 2 (listed first)");
  verify_cmd->add_flag("--timing", verify.timing, "Report wall time (otherwise 0)");
  verify_cmd->add_option("--report", verify.report, "Write the TSV report here");
  verify_cmd->add_option("--dump-dir", verify.dump_dir, "Directory for failing instances");

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen-hs", "Generate a seeded random Hitting Set instance");
  gen_cmd->add_option("--seed", gen.config.seed, "Generator seed");
  gen_cmd->add_option("--index", gen.index, "Trial index");
  gen_cmd->add_option("--m-max", gen.config.m_max, "Largest universe");
  gen_cmd->add_option("--n-max", gen.config.n_max, "Most sets");
  gen_cmd->add_option("--k-max", gen.config.k_max, "Largest k");
  gen_cmd->add_option("--out", gen.out, "File to write (default stdout)");

  std::vector<std::string> storage;
  storage.reserve(args.size() + 1);
  storage.push_back("pwlab");
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPositive : kExitUsage;
  }

  try {
    if (*score_cmd) return cmd_score(score, out);
    if (*solve_cmd) return cmd_solve(solve, out);
    if (*reduce_cmd) return cmd_reduce(reduce, out);
    if (*witness_cmd) return cmd_witness(witness, out, err);
    if (*verify_cmd) return cmd_verify(verify, out, err);
    if (*gen_cmd) return cmd_gen_hs(gen, out);
  } catch (const UsageError& e) {
    err << "pwlab: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "pwlab: " << e.what() << '\n';
    switch (e.code()) {
      case ErrorCode::kInvalidArgument:
      case ErrorCode::kRuleUnsupportedByAlgorithm:
        return kExitUsage;
      default:
        return kExitParse;
    }
  }
  return kExitUsage;
}

int run_cli(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run_cli(args, std::cout, std::cerr);
}

}  // namespace pwlab
