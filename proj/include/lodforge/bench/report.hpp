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

namespace lodforge::bench {

inline constexpr int kReportVersion = 1;

struct PipelineRow {
  double mapping_time_seconds = 0.0;
  double peak_memory_mb = 0.0;  // OS resident-set peak
  std::uint64_t peak_retained_values = 0;
  std::uint64_t peak_retained_bytes = 0;
  std::uint64_t input_records = 0;
  std::uint64_t triples_emitted = 0;
  std::uint64_t error_count = 0;
  std::uint64_t mapping_source_compressed_bytes = 0;

  friend bool operator==(const PipelineRow&, const PipelineRow&) = default;
};

struct BenchReport {
  /// cpu, workers, inputBytes, compressor, repeat, ...
  std::map<std::string, std::string> environment;
  std::map<std::string, PipelineRow> pipelines;  // kv, csv, xml

  friend bool operator==(const BenchReport&, const BenchReport&) = default;
};

/// `report.version=1`, then sorted `env.key=value` and
/// `pipeline.metric=value` lines. Byte-stable under read/write.
void write_report(std::ostream& out, const BenchReport& report);
/// Throws Error{kParseError} on malformed lines or a version mismatch.
BenchReport read_report(std::istream& in);

/// Fixed-width comparison table, optionally followed by the reference
/// production figures for context.
void render_table(std::ostream& out, const BenchReport& report, bool with_reference = true);

}  // namespace lodforge::bench
