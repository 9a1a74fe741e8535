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
#include <filesystem>
#include <vector>

#include "lodforge/core/rdf.hpp"
#include "lodforge/core/run_stats.hpp"
#include "lodforge/core/sink.hpp"
#include "lodforge/kv/schema.hpp"
#include "lodforge/kv/snapshot.hpp"

namespace lodforge::kv {

struct RowCounters {
  std::uint64_t triples = 0;
  std::uint64_t cells_skipped = 0;
  std::uint64_t unknown_fields = 0;
  std::uint64_t rankings = 0;
};

/// Maps one snapshot row to RDF. Pure: the output depends only on the row
/// and the schema set.
///
/// Emits the entity's rdf:type classes, one triple per mapped attribute of
/// the body cell (schema field-number order), and one triple per link cell.
/// Bad link qualifiers and unknown link families skip the cell, not the row.
/// Throws Error{kMalformedId}/{kUnknownTypePrefix} for a bad row key,
/// Error{kSchemaMissing}, Error{kCorruptContainer} when the row does not have
/// exactly one body cell, and wire decode errors from the body.
void map_row_into(const KvRow& row, const SchemaSet& schemas, TripleSink& sink,
                  RowCounters& counters);

std::vector<Triple> map_row(const KvRow& row, const SchemaSet& schemas);

/// Maps every row of a snapshot (file or directory of splits) with `workers`
/// OpenMP threads. Rows are mapped in parallel chunks and replayed into
/// `sink` in row order, so the output is identical to run_snapshot_serial
/// for any worker count. Row-level errors are counted and the row skipped.
/// Throws Error{kCorruptContainer} or Error{kIoError}.
RunStats run_snapshot(const std::filesystem::path& path, int workers, const SchemaSet& schemas,
                      TripleSink& sink);

/// Single-threaded reference implementation of run_snapshot.
RunStats run_snapshot_serial(const std::filesystem::path& path, const SchemaSet& schemas,
                             TripleSink& sink);

}  // namespace lodforge::kv
