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

// Line-oriented election file format:
//
//   candidates: a, b, c
//   linear: a > b > c
//   blocks: {a} > {b, c}
//   pairs: a>b, b>c
//
// Blank lines and '#' comments are ignored. `linear` lines become the
// election's linear votes; `blocks` and `pairs` lines its partial votes.

#pragma once

#include <istream>
#include <string>
#include <string_view>

#include "pwlab/election.hpp"

namespace pwlab {

/// Throws Error(kParseError) with a line number on malformed input.
Election parse_election(std::istream& in);
Election parse_election_string(std::string_view text);
Election read_election_file(const std::string& path);

std::string format_linear_vote(const LinearVote& vote,
                               const CandidateSet& candidates);
/// Block form when the vote carries tiers, otherwise its covering pairs.
std::string format_partial_vote(const PartialVote& vote,
                                const CandidateSet& candidates);
std::string format_election(const Election& election);
void write_election_file(const std::string& path, const Election& election);

}  // namespace pwlab
