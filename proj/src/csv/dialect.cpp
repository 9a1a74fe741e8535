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

#include "lodforge/csv/dialect.hpp"

#include <algorithm>
#include <cctype>
#include <istream>

#include "lodforge/core/error.hpp"
#include "lodforge/core/text.hpp"

namespace lodforge::csv {
namespace {

bool ends_properly(std::string_view record) noexcept {
  return record.size() >= 2 && (record.ends_with('#') || record.ends_with("#!"));
}

bool is_int(std::string_view s) noexcept {
  if (!s.empty() && s.front() == '-') s.remove_prefix(1);
  return !s.empty() && s.size() <= 18 &&
         std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

bool is_date(std::string_view s) noexcept {
  if (s.size() != 10 || s[4] != '-' || s[7] != '-') return false;
  for (std::size_t i : {0, 1, 2, 3, 5, 6, 8, 9}) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  const int month = (s[5] - '0') * 10 + (s[6] - '0');
  const int day = (s[8] - '0') * 10 + (s[9] - '0');
  return month >= 1 && month <= 12 && day >= 1 && day <= 31;
}

}  // namespace

std::size_t count_cells(std::string_view record) noexcept {
  std::size_t n = 1;
  for (std::size_t pos = record.find(kCellSeparator); pos != std::string_view::npos;
       pos = record.find(kCellSeparator, pos + kCellSeparator.size())) {
    ++n;
  }
  return n;
}

std::vector<std::optional<std::string>> split_record(std::string_view record) {
  if (!record.starts_with('#') || !ends_properly(record)) {
    throw Error(ErrorCode::kUnbalancedHashes, "record must start with '#' and end with '#' or '#!'");
  }
  std::string_view body = record.substr(1);
  if (body.ends_with("#!")) {
    body.remove_suffix(2);
  } else {
    body.remove_suffix(1);
  }
  std::vector<std::optional<std::string>> cells;
  for (const auto cell : split(body, kCellSeparator)) {
    if (cell == kNullMarker) {
      cells.emplace_back(std::nullopt);
    } else {
      cells.emplace_back(std::string(cell));
    }
  }
  return cells;
}

CsvRow parse_row(std::string_view record, const CsvTableSpec& spec) {
  CsvRow row{split_record(record)};
  if (row.cells.size() != spec.columns.size()) {
    throw Error(ErrorCode::kColumnCountMismatch, spec.table_name + ": expected " +
                                                     std::to_string(spec.columns.size()) + " cells, got " +
                                                     std::to_string(row.cells.size()));
  }
  for (std::size_t i = 0; i < row.cells.size(); ++i) {
    if (!row.cells[i]) continue;
    const auto& column = spec.columns[i];
    const std::string& value = *row.cells[i];
    const bool ok = column.kind == CsvValueKind::kInt    ? is_int(value)
                    : column.kind == CsvValueKind::kDate ? is_date(value)
                                                         : true;
    if (!ok) {
      throw Error(ErrorCode::kBadCell, spec.table_name + "." + column.name + ": '" + value + "'");
    }
  }
  return row;
}

RecordReader::RecordReader(std::istream& in, std::size_t expected_cells)
    : in_(in), expected_cells_(expected_cells) {}

bool RecordReader::read_line(std::string& line) {
  if (pending_) {
    line = std::move(*pending_);
    pending_.reset();
    return true;
  }
  if (!std::getline(in_, line)) return false;
  ++line_no_;
  return true;
}

bool RecordReader::next(std::string& record, std::size_t& first_line) {
  record.clear();
  std::string line;
  // skip blank separator lines between records
  do {
    if (!read_line(line)) return false;
  } while (line.empty());
  first_line = line_no_;
  record = std::move(line);
  while (true) {
    const std::size_t cells = count_cells(record);
    if (cells > expected_cells_) return true;
    if (ends_properly(record) && cells == expected_cells_) return true;
    if (!read_line(line)) return true;
    if (ends_properly(record) && line.starts_with('#')) {
      pending_ = std::move(line);
      return true;
    }
    record.push_back('\n');
    record.append(line);
  }
}

}  // namespace lodforge::csv
