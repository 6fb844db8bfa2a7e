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

// Hitting Set instances, their text format, and an exhaustive solver.
//
//   universe: e1,e2,e3
//   set: e1,e2
//   set: e2,e3
//   k: 2

#pragma once

#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pwlab {

/// Unvalidated input, elements referenced by name.
struct RawHittingSet {
  std::vector<std::string> universe;
  std::vector<std::vector<std::string>> sets;
  std::int64_t k = 0;
};

struct HittingSetInstance {
  std::vector<std::string> universe;
  /// Each set holds sorted, distinct element indices into `universe`.
  std::vector<std::vector<std::size_t>> sets;
  std::size_t k = 1;

  std::size_t element_count() const { return universe.size(); }
  std::size_t set_count() const { return sets.size(); }
  bool operator==(const HittingSetInstance&) const = default;
};

/// Collapses duplicate elements inside a set. Throws kEmptySet (empty set
/// or empty collection), kUnknownElement, kNonpositiveK, and
/// kInvalidArgument for a repeated universe element.
HittingSetInstance validate_hitting_set(const RawHittingSet& raw);

bool is_hitting_set(const HittingSetInstance& hs,
                    const std::vector<std::size_t>& subset);

struct HittingSetAnswer {
  bool yes = false;
  /// Sorted element indices; set when yes.
  std::vector<std::size_t> hitting_set;
};

/// Tries subsets by increasing size up to k, each size in lexicographic
/// index order, and returns the first hitting set.
HittingSetAnswer solve_hitting_set_bruteforce(const HittingSetInstance& hs);

/// Element names to indices. Throws kUnknownElement.
std::vector<std::size_t> resolve_elements(const HittingSetInstance& hs,
                                          const std::vector<std::string>& names);

/// Throws Error(kParseError) with a line number.
HittingSetInstance parse_hitting_set(std::istream& in);
HittingSetInstance parse_hitting_set_string(std::string_view text);
HittingSetInstance read_hitting_set_file(const std::string& path);
std::string format_hitting_set(const HittingSetInstance& hs);

}  // namespace pwlab
