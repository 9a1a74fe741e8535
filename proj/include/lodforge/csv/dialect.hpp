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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lodforge/csv/table_spec.hpp"

namespace lodforge::csv {

/// Cell separator: cells are wrapped in '#' and joined with '!'.
inline constexpr std::string_view kCellSeparator = "#!#";
/// Exact NULL marker. "NULL" and "" are ordinary values.
inline constexpr std::string_view kNullMarker = "null";

/// One parsed record; std::nullopt is NULL.
struct CsvRow {
  std::vector<std::optional<std::string>> cells;
};

/// Splits one logical record into cells without checking the column count.
/// A record starts with '#' and ends with '#' or "#!"; anything else throws
/// Error{kUnbalancedHashes}. A cell containing "#!#" cannot be represented.
std::vector<std::optional<std::string>> split_record(std::string_view record);

/// split_record plus column count and per-kind validation (int, date, id).
/// Throws Error{kUnbalancedHashes}, Error{kColumnCountMismatch} or
/// Error{kBadCell}.
CsvRow parse_row(std::string_view record, const CsvTableSpec& spec);

/// Number of cells a (possibly partial) record currently splits into.
std::size_t count_cells(std::string_view record) noexcept;

/// Groups physical lines into logical records. A record continues onto the
/// next physical line until it ends with '#' or "#!" and holds at least the
/// expected number of cells; a following line that starts with '#' after a
/// properly terminated record always begins a new record.
class RecordReader {
 public:
  RecordReader(std::istream& in, std::size_t expected_cells);

  /// Returns false at end of input. `first_line` is the 1-based physical
  /// line the record starts on.
  bool next(std::string& record, std::size_t& first_line);

 private:
  bool read_line(std::string& line);

  std::istream& in_;
  std::size_t expected_cells_;
  std::size_t line_no_ = 0;
  std::optional<std::string> pending_;
};

}  // namespace lodforge::csv
