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

#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace lodforge::bench {

struct TripleDiff {
  std::size_t only_a = 0;
  std::size_t only_b = 0;
  std::size_t common = 0;
  std::vector<std::string> samples_a;  // sorted, at most max_samples
  std::vector<std::string> samples_b;

  bool equal() const noexcept { return only_a == 0 && only_b == 0; }
};

/// Set difference of two N-Triples documents after canonical
/// re-serialization. Duplicates and blank/comment lines are ignored.
/// Throws Error{kParseError} naming the side and line number.
TripleDiff diff_ntriples(std::istream& a, std::istream& b, std::size_t max_samples = 20);

void write_diff(std::ostream& out, const TripleDiff& diff);

}  // namespace lodforge::bench
