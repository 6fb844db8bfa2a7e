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

#include "pwlab/hitting_set.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "pwlab/error.hpp"

namespace pwlab {

HittingSetInstance validate_hitting_set(const RawHittingSet& raw) {
  HittingSetInstance hs;
  std::unordered_map<std::string, std::size_t> index;
  for (const auto& e : raw.universe) {
    if (!index.emplace(e, hs.universe.size()).second) {
      throw Error(ErrorCode::kInvalidArgument,
                  "element '" + e + "' listed twice in the universe");
    }
    hs.universe.push_back(e);
  }
  if (raw.sets.empty()) {
    throw Error(ErrorCode::kEmptySet, "collection has no sets");
  }
  for (std::size_t j = 0; j < raw.sets.size(); ++j) {
    if (raw.sets[j].empty()) {
      throw Error(ErrorCode::kEmptySet, "set " + std::to_string(j + 1));
    }
    std::vector<std::size_t> set;
    for (const auto& e : raw.sets[j]) {
      auto it = index.find(e);
      if (it == index.end()) throw Error(ErrorCode::kUnknownElement, e);
      set.push_back(it->second);
    }
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    hs.sets.push_back(std::move(set));
  }
  if (raw.k <= 0) {
    throw Error(ErrorCode::kNonpositiveK, "k = " + std::to_string(raw.k));
  }
  hs.k = static_cast<std::size_t>(raw.k);
  return hs;
}

bool is_hitting_set(const HittingSetInstance& hs,
                    const std::vector<std::size_t>& subset) {
  std::vector<bool> chosen(hs.element_count(), false);
  for (std::size_t e : subset) {
    if (e < chosen.size()) chosen[e] = true;
  }
  return std::all_of(hs.sets.begin(), hs.sets.end(), [&](const auto& set) {
    return std::any_of(set.begin(), set.end(),
                       [&](std::size_t e) { return chosen[e]; });
  });
}

namespace {

// Lexicographic walk over size-`size` combinations of 0..n-1.
bool first_hitting_combination(const HittingSetInstance& hs, std::size_t size,
                               std::vector<std::size_t>& out) {
  const std::size_t n = hs.element_count();
  if (size > n) return false;
  std::vector<std::size_t> comb(size);
  for (std::size_t i = 0; i < size; ++i) comb[i] = i;
  while (true) {
    if (is_hitting_set(hs, comb)) {
      out = comb;
      return true;
    }
    std::size_t i = size;
    while (i > 0 && comb[i - 1] == n - size + i - 1) --i;
    if (i == 0) return false;
    ++comb[i - 1];
    for (std::size_t j = i; j < size; ++j) comb[j] = comb[j - 1] + 1;
  }
}

}  // namespace

HittingSetAnswer solve_hitting_set_bruteforce(const HittingSetInstance& hs) {
  HittingSetAnswer answer;
  const std::size_t limit = std::min(hs.k, hs.element_count());
  for (std::size_t size = 0; size <= limit; ++size) {
    if (first_hitting_combination(hs, size, answer.hitting_set)) {
      answer.yes = true;
      return answer;
    }
  }
  return answer;
}

std::vector<std::size_t> resolve_elements(const HittingSetInstance& hs,
                                          const std::vector<std::string>& names) {
  std::vector<std::size_t> out;
  for (const auto& name : names) {
    auto it = std::find(hs.universe.begin(), hs.universe.end(), name);
    if (it == hs.universe.end()) throw Error(ErrorCode::kUnknownElement, name);
    out.push_back(static_cast<std::size_t>(it - hs.universe.begin()));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  return s.substr(b, s.find_last_not_of(" \t\r\n") - b + 1);
}

std::vector<std::string> split_names(std::string_view body) {
  std::vector<std::string> out;
  if (trim(body).empty()) return out;
  std::size_t start = 0;
  while (true) {
    const auto pos = body.find(',', start);
    out.emplace_back(trim(body.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

[[noreturn]] void fail(std::size_t line, const std::string& msg) {
  throw Error(ErrorCode::kParseError,
              "line " + std::to_string(line) + ": " + msg);
}

}  // namespace

HittingSetInstance parse_hitting_set(std::istream& in) {
  RawHittingSet raw;
  bool have_universe = false, have_k = false;
  std::string text;
  std::size_t line_no = 0;
  while (std::getline(in, text)) {
    ++line_no;
    std::string_view line = text;
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;
    const auto colon = line.find(':');
    if (colon == std::string_view::npos) fail(line_no, "missing ':'");
    const auto key = trim(line.substr(0, colon));
    const auto body = trim(line.substr(colon + 1));
    if (key == "universe") {
      if (have_universe) fail(line_no, "second 'universe:' line");
      raw.universe = split_names(body);
      for (const auto& e : raw.universe) {
        if (e.empty()) fail(line_no, "empty element name");
      }
      have_universe = true;
    } else if (key == "set") {
      auto names = split_names(body);
      for (const auto& e : names) {
        if (e.empty()) fail(line_no, "empty element name");
      }
      raw.sets.push_back(std::move(names));
    } else if (key == "k") {
      if (have_k) fail(line_no, "second 'k:' line");
      auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(),
                                       raw.k);
      if (ec != std::errc() || ptr != body.data() + body.size() ||
          body.empty()) {
        fail(line_no, "k must be an integer");
      }
      have_k = true;
    } else {
      fail(line_no, "unknown line kind '" + std::string(key) + "'");
    }
  }
  if (!have_universe) fail(line_no, "missing 'universe:' line");
  if (!have_k) fail(line_no, "missing 'k:' line");
  try {
    return validate_hitting_set(raw);
  } catch (const Error& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
}

HittingSetInstance parse_hitting_set_string(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_hitting_set(in);
}

HittingSetInstance read_hitting_set_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParseError, "cannot open " + path);
  return parse_hitting_set(in);
}

std::string format_hitting_set(const HittingSetInstance& hs) {
  std::string out = "universe: ";
  for (std::size_t i = 0; i < hs.universe.size(); ++i) {
    if (i) out += ",";
    out += hs.universe[i];
  }
  out += "\n";
  for (const auto& set : hs.sets) {
    out += "set: ";
    for (std::size_t i = 0; i < set.size(); ++i) {
      if (i) out += ",";
      out += hs.universe[set[i]];
    }
    out += "\n";
  }
  out += "k: " + std::to_string(hs.k) + "\n";
  return out;
}

}  // namespace pwlab
