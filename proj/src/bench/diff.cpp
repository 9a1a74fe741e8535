// Copyright 2026 The lodforge Authors
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

#include "lodforge/bench/diff.hpp"

#include <algorithm>
#include <istream>
#include <ostream>

#include "lodforge/core/error.hpp"
#include "lodforge/core/ntriples.hpp"
#include "lodforge/core/text.hpp"

namespace lodforge::bench {
namespace {

std::vector<std::string> canonical_lines(std::istream& in, std::string_view side) {
  std::vector<std::string> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    chomp_cr(line);
    if (is_blank_or_comment(line)) continue;
    try {
      out.push_back(to_ntriples(parse_ntriples_line(line, line_no)));
    } catch (const Error& e) {
      throw Error(ErrorCode::kParseError, std::string(side) + ": " + e.what());
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

TripleDiff diff_ntriples(std::istream& a, std::istream& b, std::size_t max_samples) {
  const auto left = canonical_lines(a, "A");
  const auto right = canonical_lines(b, "B");
  TripleDiff d;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < left.size() || j < right.size()) {
    if (j == right.size() || (i < left.size() && left[i] < right[j])) {
      if (d.samples_a.size() < max_samples) d.samples_a.push_back(left[i]);
      ++d.only_a;
      ++i;
    } else if (i == left.size() || right[j] < left[i]) {
      if (d.samples_b.size() < max_samples) d.samples_b.push_back(right[j]);
      ++d.only_b;
      ++j;
    } else {
      ++d.common;
      ++i;
      ++j;
    }
  }
  return d;
}

void write_diff(std::ostream& out, const TripleDiff& d) {
  out << "common=" << d.common << "\nonlyA=" << d.only_a << "\nonlyB=" << d.only_b << '\n';
  for (const auto& s : d.samples_a) out << "< " << s << '\n';
  for (const auto& s : d.samples_b) out << "> " << s << '\n';
}

}  // namespace lodforge::bench
