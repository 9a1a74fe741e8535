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
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "lodforge/core/rdf.hpp"
#include "lodforge/core/sink.hpp"
#include "lodforge/core/vocab.hpp"
#include "lodforge/csv/dialect.hpp"
#include "lodforge/csv/table_spec.hpp"

namespace lodforge::csv {

/// Reference to a cell of the bound table.
struct ColumnRef {
  std::size_t index = 0;
};

/// Constant IRI (class headers).
struct IriConst {
  Iri iri;
};

/// Cell value as a literal, optionally typed or language-tagged.
struct LiteralTemplate {
  ColumnRef column;
  std::optional<Iri> datatype;
  std::optional<std::string> language;
};

/// Cell value that must equal `value` for the triple to be produced.
struct CellCondition {
  ColumnRef column;
  std::string value;
};

/// One triple pattern of a row template. Subject and entity-valued objects
/// are id columns, expanded to entity URIs.
struct TripleTemplate {
  ColumnRef subject;
  const VocabTerm* predicate = nullptr;
  std::variant<ColumnRef, IriConst, LiteralTemplate> object;
  std::optional<CellCondition> condition;
};

/// CONSTRUCT-style template: every CSV row of the table instantiates each
/// triple pattern with that row's cells.
struct RowTemplate {
  std::string table_name;
  std::vector<TripleTemplate> triples;
};

/// Template DSL, one rule per line, `#` comments:
///   <table> => class <class>                    rdf:type for the row id
///   <table>[<col>=<value>] => class <class>     conditional rdf:type
///   <table>.<col> -> <predicate> [^^<dt>|@<lang>]
///       subject = first (id) column, object = cell (entity URI for id
///       columns, literal otherwise)
///   <table>.<col> <- <predicate>
///       inverse: subject = the id cell <col>, object = first column
class TemplateSet {
 public:
  static TemplateSet parse(std::istream& in, const CsvSpecSet& specs, const Vocabulary& vocab);
  static TemplateSet load(const std::filesystem::path& path, const CsvSpecSet& specs,
                          const Vocabulary& vocab);

  const RowTemplate* find(std::string_view table) const noexcept;
  const std::map<std::string, RowTemplate, std::less<>>& templates() const noexcept { return templates_; }

 private:
  std::map<std::string, RowTemplate, std::less<>> templates_;
};

/// Instantiates `tmpl` for one parsed row. A pattern referencing a NULL cell
/// is skipped; other patterns are unaffected. Throws Error{kBadIdCell} when
/// an id cell does not form a valid entity id.
void instantiate_into(const RowTemplate& tmpl, const CsvTableSpec& spec, const CsvRow& row,
                      TripleSink& sink, std::uint64_t& emitted);

std::vector<Triple> instantiate(const RowTemplate& tmpl, const CsvTableSpec& spec, const CsvRow& row);

}  // namespace lodforge::csv
