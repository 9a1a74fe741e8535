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

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>

namespace lodforge {

/// Counters reported by every mapper run. Aggregation is plain addition
/// except for the peak counters, which take the maximum, so merging
/// per-worker stats is commutative.
struct RunStats {
  std::uint64_t records_read = 0;      // rows / CSV records / XML scope records
  std::uint64_t triples_emitted = 0;
  std::uint64_t cells_skipped = 0;     // bad link qualifiers, bad values
  std::uint64_t unknown_fields = 0;    // wire fields without a schema entry
  std::uint64_t rankings_decoded = 0;  // link payload rankings (no triple)
  std::uint64_t error_count = 0;       // rejected records
  std::uint64_t warning_count = 0;
  std::uint64_t peak_retained_values = 0;
  std::uint64_t peak_retained_bytes = 0;
  double wall_seconds = 0.0;

  /// Per-input-table breakdown (CSV); key is the table name.
  struct TableStats {
    std::uint64_t records = 0;
    std::uint64_t triples = 0;
    std::uint64_t errors = 0;
  };
  std::map<std::string, TableStats> tables;

  RunStats& operator+=(const RunStats& other);
};

/// Line-oriented `key=value` rendering used by `--stats` files.
void write_stats(std::ostream& out, const RunStats& stats);
RunStats read_stats(std::istream& in);

}  // namespace lodforge
