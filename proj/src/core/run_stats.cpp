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

#include "lodforge/core/run_stats.hpp"

#include <algorithm>
#include <cstdio>
#include <istream>
#include <ostream>

#include "lodforge/core/error.hpp"

namespace lodforge {

RunStats& RunStats::operator+=(const RunStats& other) {
  records_read += other.records_read;
  triples_emitted += other.triples_emitted;
  cells_skipped += other.cells_skipped;
  unknown_fields += other.unknown_fields;
  rankings_decoded += other.rankings_decoded;
  error_count += other.error_count;
  warning_count += other.warning_count;
  peak_retained_values = std::max(peak_retained_values, other.peak_retained_values);
  peak_retained_bytes = std::max(peak_retained_bytes, other.peak_retained_bytes);
  wall_seconds = std::max(wall_seconds, other.wall_seconds);
  for (const auto& [name, t] : other.tables) {
    auto& mine = tables[name];
    mine.records += t.records;
    mine.triples += t.triples;
    mine.errors += t.errors;
  }
  return *this;
}

void write_stats(std::ostream& out, const RunStats& stats) {
  char seconds[64];
  std::snprintf(seconds, sizeof seconds, "%.6f", stats.wall_seconds);
  out << "recordsRead=" << stats.records_read << '\n'
      << "triplesEmitted=" << stats.triples_emitted << '\n'
      << "cellsSkipped=" << stats.cells_skipped << '\n'
      << "unknownFields=" << stats.unknown_fields << '\n'
      << "rankingsDecoded=" << stats.rankings_decoded << '\n'
      << "errorCount=" << stats.error_count << '\n'
      << "warningCount=" << stats.warning_count << '\n'
      << "peakRetainedValues=" << stats.peak_retained_values << '\n'
      << "peakRetainedBytes=" << stats.peak_retained_bytes << '\n'
      << "wallSeconds=" << seconds << '\n';
  for (const auto& [name, t] : stats.tables) {
    out << "table." << name << ".records=" << t.records << '\n'
        << "table." << name << ".triples=" << t.triples << '\n'
        << "table." << name << ".errors=" << t.errors << '\n';
  }
}

RunStats read_stats(std::istream& in) {
  RunStats stats;
  std::string line;
  while (std::getline(in, line)) {
    const auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    const std::string key = line.substr(0, eq);
    const std::string value = line.substr(eq + 1);
    try {
      if (key == "wallSeconds") {
        stats.wall_seconds = std::stod(value);
        continue;
      }
      const std::uint64_t n = std::stoull(value);
      if (key == "recordsRead") stats.records_read = n;
      else if (key == "triplesEmitted") stats.triples_emitted = n;
      else if (key == "cellsSkipped") stats.cells_skipped = n;
      else if (key == "unknownFields") stats.unknown_fields = n;
      else if (key == "rankingsDecoded") stats.rankings_decoded = n;
      else if (key == "errorCount") stats.error_count = n;
      else if (key == "warningCount") stats.warning_count = n;
      else if (key == "peakRetainedValues") stats.peak_retained_values = n;
      else if (key == "peakRetainedBytes") stats.peak_retained_bytes = n;
      else if (key.starts_with("table.")) {
        const auto dot = key.rfind('.');
        const std::string table = key.substr(6, dot - 6);
        const std::string field = key.substr(dot + 1);
        auto& t = stats.tables[table];
        if (field == "records") t.records = n;
        else if (field == "triples") t.triples = n;
        else if (field == "errors") t.errors = n;
      }
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::kParseError, "bad stats line '" + line + "'");
    }
  }
  return stats;
}

}  // namespace lodforge
