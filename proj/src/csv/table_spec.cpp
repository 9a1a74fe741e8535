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

#include "lodforge/csv/table_spec.hpp"

#include <fstream>
#include <istream>

#include "lodforge/core/error.hpp"
#include "lodforge/core/text.hpp"

namespace lodforge::csv {
namespace {

[[noreturn]] void config_error(std::size_t line_no, const std::string& what) {
  throw Error(ErrorCode::kConfigError, "specs:" + std::to_string(line_no) + ": " + what);
}

EntityKind parse_kind(std::string_view text, std::size_t line_no) {
  const auto kind = kind_from_name(text);
  if (!kind) config_error(line_no, "unknown entity kind '" + std::string(text) + "'");
  return *kind;
}

void check_table(const CsvTableSpec& spec) {
  if (spec.columns.empty() || spec.columns.front().kind != CsvValueKind::kId) {
    throw Error(ErrorCode::kConfigError, "specs: table " + spec.table_name + " must start with an id column");
  }
  if (const auto* entity = std::get_if<EntityBinding>(&spec.binding)) {
    if (spec.columns.front().id_kind != entity->kind) {
      throw Error(ErrorCode::kConfigError, "specs: id column of " + spec.table_name + " has the wrong kind");
    }
  }
}

}  // namespace

std::optional<std::size_t> CsvTableSpec::column_index(std::string_view name) const noexcept {
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (columns[i].name == name) return i;
  }
  return std::nullopt;
}

CsvSpecSet CsvSpecSet::parse(std::istream& in, const Vocabulary& vocab) {
  CsvSpecSet set;
  CsvTableSpec* current = nullptr;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_blank_or_comment(line)) continue;
    const auto tokens = split_ws(line);
    if (tokens[0] == "table") {
      if (current != nullptr) check_table(*current);
      if (tokens.size() < 4) config_error(line_no, "expected 'table <name> entity|relation ...'");
      CsvTableSpec spec;
      spec.table_name = std::string(tokens[1]);
      if (tokens[2] == "entity" && tokens.size() == 4) {
        spec.binding = EntityBinding{parse_kind(tokens[3], line_no)};
      } else if (tokens[2] == "relation" && tokens.size() == 6) {
        spec.binding = RelationBinding{parse_kind(tokens[3], line_no), &vocab.lookup_property(tokens[4]),
                                       parse_kind(tokens[5], line_no)};
      } else {
        config_error(line_no, "bad table binding");
      }
      auto [it, inserted] = set.tables_.emplace(spec.table_name, std::move(spec));
      if (!inserted) config_error(line_no, "duplicate table " + std::string(tokens[1]));
      current = &it->second;
    } else if (tokens[0] == "column") {
      if (current == nullptr) config_error(line_no, "column outside table");
      if (tokens.size() != 3) config_error(line_no, "expected 'column <name> <kind>'");
      CsvColumn column;
      column.name = std::string(tokens[1]);
      const auto kind = tokens[2];
      if (kind.starts_with("id:")) {
        column.kind = CsvValueKind::kId;
        column.id_kind = parse_kind(kind.substr(3), line_no);
      } else if (kind == "string") {
        column.kind = CsvValueKind::kString;
      } else if (kind == "int") {
        column.kind = CsvValueKind::kInt;
      } else if (kind == "date") {
        column.kind = CsvValueKind::kDate;
      } else {
        config_error(line_no, "unknown column kind '" + std::string(kind) + "'");
      }
      if (current->column_index(column.name)) config_error(line_no, "duplicate column " + column.name);
      current->columns.push_back(std::move(column));
    } else {
      config_error(line_no, "unknown directive '" + std::string(tokens[0]) + "'");
    }
  }
  if (current != nullptr) check_table(*current);
  return set;
}

CsvSpecSet CsvSpecSet::load(const std::filesystem::path& path, const Vocabulary& vocab) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path.string());
  return parse(in, vocab);
}

const CsvTableSpec* CsvSpecSet::find(std::string_view table) const noexcept {
  const auto it = tables_.find(table);
  return it == tables_.end() ? nullptr : &it->second;
}

}  // namespace lodforge::csv
