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

#include <filesystem>
#include <iosfwd>

#include "lodforge/core/run_stats.hpp"
#include "lodforge/core/sink.hpp"
#include "lodforge/csv/table_spec.hpp"
#include "lodforge/csv/templates.hpp"

namespace lodforge::csv {

/// Streams one CSV file record by record. Bad records (unbalanced hashes,
/// wrong cell count, bad cell or id) are counted in `error_count` and
/// skipped. peak_retained_bytes tracks the largest logical record held.
RunStats run_table(std::istream& in, const CsvTableSpec& spec, const RowTemplate& tmpl,
                   TripleSink& sink);

/// Maps every `*.csv` file in `dir` (table name = file stem), one OpenMP
/// worker per file. Output is replayed in filename order, so it does not
/// depend on `workers`. Throws Error{kMissingTemplate} before reading any
/// data when a file lacks a spec or template.
RunStats run_tables(const std::filesystem::path& dir, const CsvSpecSet& specs,
                    const TemplateSet& templates, int workers, TripleSink& sink);

}  // namespace lodforge::csv
