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


#include <doctest.h>

#include <fstream>
#include <sstream>

#include "lodforge/core/error.hpp"
#include "lodforge/core/ntriples.hpp"
#include "lodforge/core/sink.hpp"
#include "lodforge/core/vocab.hpp"
#include "lodforge/csv/dialect.hpp"
#include "lodforge/csv/mapper.hpp"
#include "lodforge/csv/table_spec.hpp"
#include "lodforge/csv/templates.hpp"
#include "lodforge/datagen/emit.hpp"
#include "lodforge/datagen/model.hpp"
#include "support/test_support.hpp"

using namespace lodforge;
using namespace lodforge::csv;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected lodforge::Error");
  return ErrorCode::kIoError;
}

const Vocabulary& vocab() {
  static const Vocabulary v = Vocabulary::load(test::mappings_dir() / "vocab.tsv");
  return v;
}

const CsvSpecSet& specs() {
  static const CsvSpecSet s = CsvSpecSet::load(test::mappings_dir() / "csv_specs.txt", vocab());
  return s;
}

const TemplateSet& templates() {
  static const TemplateSet t = TemplateSet::load(test::mappings_dir() / "csv_templates.txt", specs(), vocab());
  return t;
}

// The reference export row, with its display line breaks kept.
const char* const kReferenceListing =
    "#dedup_wf_001::39b91277f9a2c25b1655436ab996a76b#!#The Data Model of the OpenAIRE\n"
    "Scientific Communication e-Infrastructure#!#null#!#null#!#Springer#!#null#!#null\n"
    "#!#null#!#null#!#2012#!#2012-01-01#!#Open Access#!#Open Access#!#Access#!#null#!#\n"
    "0#!#null#!#nulloai:http://helios-eie.ekt.gr:!#publication#10442/13187oai:pumaoai.\n"
    "isti.cnr.it:cnr.isti/cnr.isti/2012-A2-040#!#1#!\n";

CsvSpecSet reference_spec() {
  std::string text = "table reference_result entity result\ncolumn id id:result\ncolumn title string\n";
  for (int i = 2; i <= 8; ++i) text += "column c" + std::to_string(i) + " string\n";
  text += "column year int\ncolumn accepted date\n";
  for (int i = 11; i <= 18; ++i) text += "column c" + std::to_string(i) + " string\n";
  std::istringstream in(text);
  return CsvSpecSet::parse(in, vocab());
}

std::string row_text(std::initializer_list<const char*> cells) {
  std::string out = "#";
  bool first = true;
  for (const char* c : cells) {
    if (!first) out += "#!#";
    out += c;
    first = false;
  }
  return out + "#!";
}

}  // namespace

TEST_CASE("split_record handles the hash-bang dialect") {
  const auto cells = split_record("#a#!#null#!#b, c#!");
  REQUIRE(cells.size() == 3);
  CHECK(cells[0] == "a");
  CHECK_FALSE(cells[1].has_value());
  CHECK(cells[2] == "b, c");
  CHECK(split_record("#x#").size() == 1);
  CHECK(split_record("##!").at(0) == "");
  CHECK(code_of([] { split_record("a#!#b#!"); }) == ErrorCode::kUnbalancedHashes);
  CHECK(code_of([] { split_record("#a#!#b"); }) == ErrorCode::kUnbalancedHashes);
}

TEST_CASE("reference export row: 19 cells spread over five display lines") {
  const CsvSpecSet spec_set = reference_spec();
  const CsvTableSpec& spec = *spec_set.find("reference_result");
  REQUIRE(spec.columns.size() == 19);

  std::istringstream in(kReferenceListing);
  RecordReader reader(in, spec.columns.size());
  std::string record;
  std::size_t first_line = 0;
  REQUIRE(reader.next(record, first_line));
  CHECK(first_line == 1);
  CHECK(count_cells(record) == 19);
  CHECK_FALSE(reader.next(record, first_line));

  // Removing the typesetting line breaks yields the stored record.
  std::string joined;
  for (char c : std::string(kReferenceListing)) {
    if (c != '\n') joined.push_back(c);
  }
  const CsvRow row = parse_row(joined, spec);
  CHECK(row.cells[0] == "dedup_wf_001::39b91277f9a2c25b1655436ab996a76b");
  CHECK(row.cells[1]->starts_with("The Data Model of the OpenAIRE"));
  CHECK(row.cells[4] == "Springer");
  CHECK(row.cells[9] == "2012");
  CHECK(row.cells[10] == "2012-01-01");
  CHECK(row.cells[18] == "1");
  // '!' and '#' inside a cell are data, not delimiters.
  CHECK(row.cells[17]->find(":!#publication#") != std::string::npos);
  std::size_t nulls = 0;
  for (const auto& c : row.cells) nulls += c.has_value() ? 0 : 1;
  CHECK(nulls == 8);
}

TEST_CASE("parse_row validates arity and typed cells") {
  const CsvTableSpec& result = *specs().find("result");
  CHECK(code_of([&] { parse_row("#a#!#b#!", result); }) == ErrorCode::kColumnCountMismatch);
  CHECK(code_of([&] {
          parse_row(row_text({"dedup_wf_001::39b91277f9a2c25b1655436ab996a76b", "T", "2012-01-01", "P", "20x2",
                              "publication"}),
                    result);
        }) == ErrorCode::kBadCell);
  CHECK(code_of([&] {
          parse_row(row_text({"dedup_wf_001::39b91277f9a2c25b1655436ab996a76b", "T", "01/01/2012", "P", "2012",
                              "publication"}),
                    result);
        }) == ErrorCode::kBadCell);
}

TEST_CASE("template instantiation for a result row") {
  const CsvTableSpec& result = *specs().find("result");
  const RowTemplate& tmpl = *templates().find("result");
  const CsvRow row = parse_row(row_text({"dedup_wf_001::39b91277f9a2c25b1655436ab996a76b",
                                         "The Data Model of the OpenAIRE Scientific Communication e-Infrastructure",
                                         "2012-01-01", "Springer", "2012", "publication"}),
                               result);
  std::vector<std::string> lines;
  for (const auto& t : instantiate(tmpl, result, row)) lines.push_back(to_ntriples(t));
  std::sort(lines.begin(), lines.end());
  const std::string r = "<http://lod.openaire.eu/data/result/dedup_wf_001::39b91277f9a2c25b1655436ab996a76b>";
  std::vector<std::string> expected = {
      r + " <http://lod.openaire.eu/vocab#publicationYear> \"2012\"^^<http://www.w3.org/2001/XMLSchema#integer> .",
      r + " <http://purl.org/dc/terms/dateAccepted> \"2012-01-01\"^^<http://www.w3.org/2001/XMLSchema#date> .",
      r + " <http://purl.org/dc/terms/publisher> \"Springer\" .",
      r + " <http://purl.org/dc/terms/title> \"The Data Model of the OpenAIRE Scientific Communication e-Infrastructure\"@en .",
      r + " <http://www.w3.org/1999/02/22-rdf-syntax-ns#type> <http://lod.openaire.eu/vocab#Result> .",
      r + " <http://www.w3.org/1999/02/22-rdf-syntax-ns#type> <http://purl.org/ontology/bibo/Publication> .",
  };
  std::sort(expected.begin(), expected.end());
  CHECK(lines == expected);
}

TEST_CASE("null cells emit nothing and conditions gate class triples") {
  const CsvTableSpec& result = *specs().find("result");
  const RowTemplate& tmpl = *templates().find("result");
  const CsvRow row =
      parse_row(row_text({"dedup_wf_001::39b91277f9a2c25b1655436ab996a76b", "null", "null", "null", "null", "other"}),
                result);
  const auto triples = instantiate(tmpl, result, row);
  REQUIRE(triples.size() == 1);
  CHECK(std::get<Iri>(triples[0].object).str() == "http://lod.openaire.eu/vocab#Result");
}

TEST_CASE("bad id cells reject the record") {
  const CsvTableSpec& authors = *specs().find("result_authors");
  const RowTemplate& tmpl = *templates().find("result_authors");
  std::istringstream in(row_text({"dedup_wf_001::39b91277f9a2c25b1655436ab996a76b", "not-an-id", "1"}) + "\n" +
                        row_text({"dedup_wf_001::39b91277f9a2c25b1655436ab996a76b",
                                  "dedup_wf_001::98973e5bd1c7f2a64e0b8d13c5a9f720", "1"}) +
                        "\n");
  CollectingSink sink;
  const RunStats stats = run_table(in, authors, tmpl, sink);
  CHECK(stats.records_read == 2);
  CHECK(stats.error_count == 1);
  CHECK(sink.triples().size() == 2);
}

TEST_CASE("multi-line cells survive record assembly") {
  const CsvTableSpec& result = *specs().find("result");
  const RowTemplate& tmpl = *templates().find("result");
  std::istringstream in(
      "#dedup_wf_001::39b91277f9a2c25b1655436ab996a76b#!#line one\n#line two#!#null#!#null#!#null#!#null#!\n"
      "#dedup_wf_001::00000000000000000000000000000000#!#t#!#null#!#null#!#null#!#null#!\n");
  CollectingSink sink;
  const RunStats stats = run_table(in, result, tmpl, sink);
  CHECK(stats.records_read == 2);
  CHECK(stats.error_count == 0);
  bool found = false;
  for (const auto& t : sink.triples()) {
    if (const auto* lit = std::get_if<Literal>(&t.object)) found = found || lit->lexical == "line one\n#line two";
  }
  CHECK(found);
}

TEST_CASE("template and spec file errors") {
  std::istringstream bad_template("result.nosuch -> dcterms:title\n");
  CHECK(code_of([&] { TemplateSet::parse(bad_template, specs(), vocab()); }) == ErrorCode::kConfigError);
  std::istringstream bad_term("result.title -> dcterms:nope\n");
  CHECK(code_of([&] { TemplateSet::parse(bad_term, specs(), vocab()); }) == ErrorCode::kUnknownTerm);
  std::istringstream no_id("table t entity result\ncolumn title string\n");
  CHECK(code_of([&] { CsvSpecSet::parse(no_id, vocab()); }) == ErrorCode::kConfigError);
}

TEST_CASE("unknown table files are a usage error") {
  test::TempDir dir;
  test::write_file(dir / "mystery.csv", "#x#!\n");
  CollectingSink sink;
  CHECK(code_of([&] { run_tables(dir.path(), specs(), templates(), 1, sink); }) == ErrorCode::kMissingTemplate);
}

TEST_CASE("injected fault is counted and the remaining records still map") {
  test::TempDir dir;
  const auto graph = datagen::generate(datagen::GenConfig::for_total(200, 9));
  datagen::write_csv(graph, dir.path(), /*inject_fault=*/true);
  LineCollectorSink sink;
  const RunStats stats = run_tables(dir.path(), specs(), templates(), 1, sink);
  CHECK(stats.error_count == 1);
  CHECK(stats.tables.at("result").errors == 1);
  sink.normalize();
  const auto oracle = datagen::oracle_lines(graph);
  CHECK(sink.lines().size() < oracle.size());
  CHECK(std::includes(oracle.begin(), oracle.end(), sink.lines().begin(), sink.lines().end()));
}

TEST_CASE("property: parallel table mapping equals the serial run and the oracle") {
  test::TempDir dir;
  for (std::uint64_t seed : {4u, 21u}) {
    const auto graph = datagen::generate(datagen::GenConfig::for_total(300, seed));
    const auto csv_dir = dir / ("csv" + std::to_string(seed));
    datagen::write_csv(graph, csv_dir);
    std::ostringstream serial;
    {
      NTriplesSink sink(serial);
      run_tables(csv_dir, specs(), templates(), 1, sink);
      sink.flush();
    }
    for (int workers : {2, 4, 8}) {
      std::ostringstream out;
      NTriplesSink sink(out);
      const RunStats stats = run_tables(csv_dir, specs(), templates(), workers, sink);
      sink.flush();
      CHECK(stats.error_count == 0);
      CHECK(out.str() == serial.str());
    }
    CHECK(test::sorted_unique(test::split_lines(serial.str())) == datagen::oracle_lines(graph));
  }
}
