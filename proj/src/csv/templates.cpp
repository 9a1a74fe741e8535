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

#include "lodforge/csv/templates.hpp"

#include <fstream>
#include <istream>

#include "lodforge/core/error.hpp"
#include "lodforge/core/text.hpp"

namespace lodforge::csv {
namespace {

[[noreturn]] void config_error(std::size_t line_no, const std::string& what) {
  throw Error(ErrorCode::kConfigError, "templates:" + std::to_string(line_no) + ": " + what);
}

ColumnRef column_ref(const CsvTableSpec& spec, std::string_view name, std::size_t line_no) {
  const auto index = spec.column_index(name);
  if (!index) config_error(line_no, "table " + spec.table_name + " has no column '" + std::string(name) + "'");
  return ColumnRef{*index};
}

Iri id_uri(const CsvTableSpec& spec, const CsvRow& row, ColumnRef ref) {
  const auto& column = spec.columns[ref.index];
  try {
    return entity_uri(EntityId::parse_local(*column.id_kind, *row.cells[ref.index]));
  } catch (const Error& e) {
    throw Error(ErrorCode::kBadIdCell, spec.table_name + "." + column.name + ": " + e.what());
  }
}

}  // namespace

TemplateSet TemplateSet::parse(std::istream& in, const CsvSpecSet& specs, const Vocabulary& vocab) {
  TemplateSet set;
  std::string line;
  std::size_t line_no = 0;
  auto table_for = [&](std::string_view name) -> const CsvTableSpec& {
    const auto* spec = specs.find(name);
    if (spec == nullptr) config_error(line_no, "unknown table '" + std::string(name) + "'");
    return *spec;
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (is_blank_or_comment(line)) continue;
    const auto tokens = split_ws(line);
    TripleTemplate triple;
    const CsvTableSpec* spec = nullptr;
    if (tokens.size() == 4 && tokens[1] == "=>" && tokens[2] == "class") {
      std::string_view head = tokens[0];
      if (const auto bracket = head.find('['); bracket != std::string_view::npos) {
        if (!head.ends_with(']')) config_error(line_no, "unterminated condition");
        const auto cond = head.substr(bracket + 1, head.size() - bracket - 2);
        const auto eq = cond.find('=');
        if (eq == std::string_view::npos) config_error(line_no, "condition must be <col>=<value>");
        spec = &table_for(head.substr(0, bracket));
        triple.condition = CellCondition{column_ref(*spec, cond.substr(0, eq), line_no),
                                         std::string(cond.substr(eq + 1))};
      } else {
        spec = &table_for(head);
      }
      triple.subject = ColumnRef{0};
      triple.predicate = &vocab.lookup_property("rdf:type");
      triple.object = IriConst{vocab.lookup_class(tokens[3]).iri};
    } else if (tokens.size() >= 3 && (tokens[1] == "->" || tokens[1] == "<-")) {
      const auto dot = tokens[0].find('.');
      if (dot == std::string_view::npos) config_error(line_no, "expected <table>.<column>");
      spec = &table_for(tokens[0].substr(0, dot));
      const ColumnRef column = column_ref(*spec, tokens[0].substr(dot + 1), line_no);
      triple.predicate = &vocab.lookup_property(tokens[2]);
      const bool is_id = spec->columns[column.index].kind == CsvValueKind::kId;
      if (tokens[1] == "<-") {
        if (!is_id || tokens.size() != 3) config_error(line_no, "'<-' needs an id column and no literal form");
        triple.subject = column;
        triple.object = ColumnRef{0};
      } else if (is_id) {
        if (tokens.size() != 3) config_error(line_no, "id columns take no literal form");
        triple.subject = ColumnRef{0};
        triple.object = column;
      } else {
        LiteralTemplate literal{column, std::nullopt, std::nullopt};
        if (tokens.size() == 4) {
          if (tokens[3].starts_with("^^")) {
            literal.datatype = expand_curie(tokens[3].substr(2));
          } else if (tokens[3].starts_with("@") && tokens[3].size() > 1) {
            literal.language = std::string(tokens[3].substr(1));
          } else {
            config_error(line_no, "expected ^^datatype or @lang");
          }
        } else if (tokens.size() > 4) {
          config_error(line_no, "trailing tokens");
        }
        triple.subject = ColumnRef{0};
        triple.object = std::move(literal);
      }
    } else {
      config_error(line_no, "unrecognized rule");
    }
    auto& tmpl = set.templates_[spec->table_name];
    tmpl.table_name = spec->table_name;
    tmpl.triples.push_back(std::move(triple));
  }
  return set;
}

TemplateSet TemplateSet::load(const std::filesystem::path& path, const CsvSpecSet& specs,
                              const Vocabulary& vocab) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path.string());
  return parse(in, specs, vocab);
}

const RowTemplate* TemplateSet::find(std::string_view table) const noexcept {
  const auto it = templates_.find(table);
  return it == templates_.end() ? nullptr : &it->second;
}

void instantiate_into(const RowTemplate& tmpl, const CsvTableSpec& spec, const CsvRow& row,
                      TripleSink& sink, std::uint64_t& emitted) {
  const auto present = [&](ColumnRef ref) { return row.cells[ref.index].has_value(); };
  for (const auto& t : tmpl.triples) {
    if (!present(t.subject)) continue;
    if (t.condition && (!present(t.condition->column) || *row.cells[t.condition->column.index] != t.condition->value)) {
      continue;
    }
    const Iri& predicate = t.predicate->iri;
    if (const auto* ref = std::get_if<ColumnRef>(&t.object)) {
      if (!present(*ref)) continue;
      sink.accept(Triple{id_uri(spec, row, t.subject), predicate, id_uri(spec, row, *ref)});
    } else if (const auto* constant = std::get_if<IriConst>(&t.object)) {
      sink.accept(Triple{id_uri(spec, row, t.subject), predicate, constant->iri});
    } else {
      const auto& lit = std::get<LiteralTemplate>(t.object);
      if (!present(lit.column)) continue;
      sink.accept(Triple{id_uri(spec, row, t.subject), predicate,
                         Literal{*row.cells[lit.column.index], lit.datatype, lit.language}});
    }
    ++emitted;
  }
}

std::vector<Triple> instantiate(const RowTemplate& tmpl, const CsvTableSpec& spec, const CsvRow& row) {
  CollectingSink sink;
  std::uint64_t emitted = 0;
  instantiate_into(tmpl, spec, row, sink, emitted);
  return sink.take();
}

}  // namespace lodforge::csv
