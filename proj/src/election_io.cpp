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

#include "pwlab/election_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "pwlab/error.hpp"

namespace pwlab {
namespace {

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

bool valid_label(std::string_view label) {
  if (label.empty()) return false;
  for (char ch : label) {
    switch (ch) {
      case ' ': case '\t': case ',': case '>': case '{': case '}':
      case ':': case '#':
        return false;
      default:
        break;
    }
  }
  return true;
}

[[noreturn]] void fail(std::size_t line, const std::string& msg) {
  throw Error(ErrorCode::kParseError,
              "line " + std::to_string(line) + ": " + msg);
}

CandidateId lookup(const CandidateSet& candidates, std::string_view label,
                   std::size_t line) {
  auto id = candidates.find(std::string(label));
  if (!id) fail(line, "unknown candidate '" + std::string(label) + "'");
  return *id;
}

LinearVote parse_linear(std::string_view body, const CandidateSet& candidates,
                        std::size_t line) {
  std::vector<CandidateId> ranking;
  for (auto label : split(body, '>')) {
    ranking.push_back(lookup(candidates, label, line));
  }
  try {
    return LinearVote(std::move(ranking), candidates.size());
  } catch (const Error& e) {
    fail(line, e.what());
  }
}

PartialVote parse_blocks(std::string_view body, const CandidateSet& candidates,
                         std::size_t line) {
  PartialVote::Tiers tiers;
  if (!body.empty()) {
    for (auto tier_text : split(body, '>')) {
      if (tier_text.size() < 2 || tier_text.front() != '{' ||
          tier_text.back() != '}') {
        fail(line, "expected {...} tier, got '" + std::string(tier_text) + "'");
      }
      auto inner = trim(tier_text.substr(1, tier_text.size() - 2));
      std::vector<CandidateId> tier;
      if (!inner.empty()) {
        for (auto label : split(inner, ',')) {
          tier.push_back(lookup(candidates, label, line));
        }
      }
      tiers.push_back(std::move(tier));
    }
  }
  try {
    return make_block_vote(tiers, candidates);
  } catch (const Error& e) {
    fail(line, e.what());
  }
}

PartialVote parse_pairs(std::string_view body, const CandidateSet& candidates,
                        std::size_t line) {
  std::vector<Preference> pairs;
  if (!body.empty()) {
    for (auto item : split(body, ',')) {
      auto sides = split(item, '>');
      if (sides.size() != 2) {
        fail(line, "expected a>b, got '" + std::string(item) + "'");
      }
      pairs.emplace_back(lookup(candidates, sides[0], line),
                         lookup(candidates, sides[1], line));
    }
  }
  try {
    return validate_partial_vote(pairs, candidates);
  } catch (const Error& e) {
    fail(line, e.what());
  }
}

}  // namespace

Election parse_election(std::istream& in) {
  Election election;
  bool have_header = false;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;
    const auto colon = line.find(':');
    if (colon == std::string_view::npos) fail(line_no, "missing ':'");
    const auto key = trim(line.substr(0, colon));
    const auto body = trim(line.substr(colon + 1));
    if (!have_header) {
      if (key != "candidates") fail(line_no, "first line must be 'candidates:'");
      std::vector<std::string> labels;
      for (auto label : split(body, ',')) {
        if (!valid_label(label)) {
          fail(line_no, "invalid candidate label '" + std::string(label) + "'");
        }
        labels.emplace_back(label);
      }
      try {
        election.candidates = CandidateSet(std::move(labels));
      } catch (const Error& e) {
        fail(line_no, e.what());
      }
      have_header = true;
    } else if (key == "linear") {
      election.linear_votes.push_back(
          parse_linear(body, election.candidates, line_no));
    } else if (key == "blocks") {
      election.partial_votes.push_back(
          parse_blocks(body, election.candidates, line_no));
    } else if (key == "pairs") {
      election.partial_votes.push_back(
          parse_pairs(body, election.candidates, line_no));
    } else {
      fail(line_no, "unknown line kind '" + std::string(key) + "'");
    }
  }
  if (!have_header) fail(line_no, "missing 'candidates:' header");
  return election;
}

Election parse_election_string(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_election(in);
}

Election read_election_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParseError, "cannot open " + path);
  return parse_election(in);
}

std::string format_linear_vote(const LinearVote& vote,
                               const CandidateSet& candidates) {
  std::string out = "linear: ";
  for (std::size_t p = 0; p < vote.size(); ++p) {
    if (p) out += " > ";
    out += candidates.label(vote.at(p));
  }
  return out;
}

std::string format_partial_vote(const PartialVote& vote,
                                const CandidateSet& candidates) {
  std::string out;
  if (vote.tiers()) {
    out = "blocks:";
    bool first_tier = true;
    for (const auto& tier : *vote.tiers()) {
      out += first_tier ? " {" : " > {";
      first_tier = false;
      for (std::size_t i = 0; i < tier.size(); ++i) {
        if (i) out += ",";
        out += candidates.label(tier[i]);
      }
      out += "}";
    }
    return out;
  }
  // Covering pairs: (a,b) with nothing strictly between them.
  out = "pairs:";
  bool first = true;
  const auto m = static_cast<std::uint32_t>(vote.size());
  for (const auto& [a, b] : vote.pairs()) {
    bool covered = true;
    for (std::uint32_t c = 0; c < m && covered; ++c) {
      if (vote.prefers(a, CandidateId{c}) && vote.prefers(CandidateId{c}, b)) {
        covered = false;
      }
    }
    if (!covered) continue;
    out += first ? " " : ", ";
    first = false;
    out += candidates.label(a) + ">" + candidates.label(b);
  }
  return out;
}

std::string format_election(const Election& election) {
  std::string out = "candidates: ";
  const auto& labels = election.candidates.labels();
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) out += ", ";
    out += labels[i];
  }
  out += "\n";
  for (const auto& v : election.linear_votes) {
    out += format_linear_vote(v, election.candidates) + "\n";
  }
  for (const auto& v : election.partial_votes) {
    out += format_partial_vote(v, election.candidates) + "\n";
  }
  return out;
}

void write_election_file(const std::string& path, const Election& election) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kInvalidArgument, "cannot write " + path);
  out << format_election(election);
}

}  // namespace pwlab
