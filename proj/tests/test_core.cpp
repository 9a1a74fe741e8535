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

#include <random>
#include <set>
#include <sstream>

#include "lodforge/core/entity_id.hpp"
#include "lodforge/core/error.hpp"
#include "lodforge/core/md5.hpp"
#include "lodforge/core/ntriples.hpp"
#include "lodforge/core/rdf.hpp"
#include "lodforge/core/run_stats.hpp"
#include "lodforge/core/sink.hpp"
#include "lodforge/core/text.hpp"
#include "lodforge/core/turtle.hpp"
#include "lodforge/core/vocab.hpp"
#include "support/nt_oracle.hpp"
#include "support/test_support.hpp"

using namespace lodforge;

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

std::string random_hex(std::mt19937_64& rng, std::size_t n) {
  static constexpr char kHex[] = "0123456789abcdef";
  std::string s;
  for (std::size_t i = 0; i < n; ++i) s.push_back(kHex[rng() % 16]);
  return s;
}

std::string random_namespace(std::mt19937_64& rng) {
  static constexpr char kChars[] = "abcdefghijklmnopqrstuvwxyz0123456789_";
  std::string s;
  for (int i = 0; i < 12; ++i) s.push_back(kChars[rng() % (sizeof(kChars) - 1)]);
  return s;
}

}  // namespace

TEST_CASE("entity id parses the running example") {
  const auto id = EntityId::parse("50|dedup_wf_001::39b91277f9a2c25b1655436ab996a76b");
  CHECK(id.kind() == EntityKind::kResult);
  CHECK(id.namespace_prefix() == "dedup_wf_001");
  CHECK(id.hash() == "39b91277f9a2c25b1655436ab996a76b");
  CHECK(entity_uri(id).str() ==
        "http://lod.openaire.eu/data/result/dedup_wf_001::39b91277f9a2c25b1655436ab996a76b");
}

TEST_CASE("type codes follow the fixed table") {
  CHECK(type_code(EntityKind::kDatasource) == 10);
  CHECK(type_code(EntityKind::kOrganization) == 20);
  CHECK(type_code(EntityKind::kPerson) == 30);
  CHECK(type_code(EntityKind::kProject) == 40);
  CHECK(type_code(EntityKind::kResult) == 50);
  CHECK_FALSE(kind_from_code(60));
  CHECK_FALSE(kind_from_code(0));
  CHECK_FALSE(kind_from_code(15));
}

TEST_CASE("malformed ids are rejected with the right code") {
  const std::string hash(32, 'a');
  CHECK(code_of([&] { EntityId::parse("60|dedup_wf_001::" + hash); }) == ErrorCode::kUnknownTypePrefix);
  CHECK(code_of([&] { EntityId::parse("5|dedup_wf_001::" + hash); }) == ErrorCode::kMalformedId);
  CHECK(code_of([&] { EntityId::parse("50|dedup_wf_01::" + hash); }) == ErrorCode::kMalformedId);
  CHECK(code_of([&] { EntityId::parse("50|dedup_wf_001:" + hash); }) == ErrorCode::kMalformedId);
  CHECK(code_of([&] { EntityId::parse("50|dedup_wf_001::" + hash + "0"); }) == ErrorCode::kMalformedId);
  CHECK(code_of([&] { EntityId::parse("50|dedup_wf_001::" + std::string(32, 'A')); }) ==
        ErrorCode::kMalformedId);
  CHECK(code_of([&] { EntityId::parse(""); }) == ErrorCode::kMalformedId);
}

TEST_CASE("property: id parse/format round trip and URI injectivity over 1000 ids") {
  std::mt19937_64 rng(20260101);
  std::set<std::string> ids;
  std::set<std::string> uris;
  for (int i = 0; i < 1000; ++i) {
    const auto kind = kAllEntityKinds[rng() % kAllEntityKinds.size()];
    const std::string raw = std::to_string(type_code(kind)) + "|" + random_namespace(rng) + "::" + random_hex(rng, 32);
    const auto id = EntityId::parse(raw);
    CHECK(id.to_string() == raw);
    CHECK(EntityId::parse(id.to_string()) == id);
    const auto uri = entity_uri(id).str();
    CHECK(Iri::is_valid(uri));
    CHECK(uri.starts_with(std::string(kDataNamespace) + std::string(kind_name(kind)) + "/"));
    ids.insert(raw);
    uris.insert(uri);
  }
  // Distinct ids must never collapse onto the same URI.
  CHECK(uris.size() == ids.size());
}

TEST_CASE("IRI validation") {
  CHECK(Iri::is_valid("http://example.org/a"));
  CHECK(Iri::is_valid("urn:x"));
  CHECK_FALSE(Iri::is_valid("no-scheme"));
  CHECK_FALSE(Iri::is_valid(":x"));
  CHECK_FALSE(Iri::is_valid("http://example.org/a b"));
  CHECK_FALSE(Iri::is_valid("http://example.org/<a>"));
  CHECK(code_of([] { Iri("http://x/\"q\""); }) == ErrorCode::kInvalidIri);
  CHECK(percent_encode_segment("a b/c") == "a%20b%2Fc");
}

TEST_CASE("literals carry at most one of datatype and language") {
  CHECK_THROWS_AS(Literal::tagged("x", ""), Error);
  const Literal l{"x", Iri("http://www.w3.org/2001/XMLSchema#string"), std::string("en")};
  const Triple t{Iri("http://a/s"), Iri("http://a/p"), l};
  CHECK_THROWS_AS(to_ntriples(t), Error);
}

TEST_CASE("N-Triples escaping matches an independent reader") {
  std::mt19937_64 rng(7);
  const std::vector<std::string> alphabet = {"a", "Z", " ", "\"", "\\", "\n", "\r", "\t", "#", "!",
                                             "<", ">", "&", "\xc3\xa9", "\xe2\x82\xac", "\x01", "\x7f"};
  for (int i = 0; i < 500; ++i) {
    std::string lexical;
    const int len = static_cast<int>(rng() % 20);
    for (int j = 0; j < len; ++j) lexical += alphabet[rng() % alphabet.size()];
    Term object = Literal::plain(lexical);
    if (i % 3 == 1) object = Literal::tagged(lexical, "en");
    if (i % 3 == 2) object = Literal::typed(lexical, Iri("http://www.w3.org/2001/XMLSchema#date"));
    const Triple t{Iri("http://a/s"), Iri("http://a/p"), object};
    const std::string line = to_ntriples(t);
    CHECK(line.find('\n') == std::string::npos);
    const auto parsed = test::oracle_parse(line);
    REQUIRE_MESSAGE(parsed.has_value(), line);
    CHECK(parsed->object.value == lexical);
    CHECK(parse_ntriples_line(line) == t);
  }
}

TEST_CASE("N-Triples parser reports the line number") {
  try {
    parse_ntriples_line("<http://a> <http://b> \"x", 42);
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kParseError);
    CHECK(std::string(e.what()).find("42") != std::string::npos);
  }
}

TEST_CASE("sorted sink deduplicates and orders bytewise") {
  std::ostringstream out;
  SortedNTriplesSink sink(out);
  const Triple b{Iri("http://a/b"), Iri("http://a/p"), Iri("http://a/o")};
  const Triple a{Iri("http://a/a"), Iri("http://a/p"), Literal::plain("x")};
  sink.accept(b);
  sink.accept(a);
  sink.accept(b);
  sink.flush();
  CHECK(out.str() == to_ntriples(a) + "\n" + to_ntriples(b) + "\n");
  CHECK(sink.lines_written() == 2);
}

TEST_CASE("buffer and spool sinks replay in insertion order") {
  BufferSink buffer;
  SpoolSink spool;
  std::vector<std::string> expected;
  for (int i = 0; i < 50; ++i) {
    const Triple t{Iri("http://a/s" + std::to_string(i % 7)), Iri("http://a/p"), Literal::plain("v\n" + std::to_string(i))};
    buffer.accept(t);
    spool.accept(t);
    expected.push_back(to_ntriples(t));
  }
  LineCollectorSink from_buffer;
  LineCollectorSink from_spool;
  buffer.replay_into(from_buffer);
  spool.replay_into(from_spool);
  CHECK(from_buffer.lines() == expected);
  CHECK(from_spool.lines() == expected);
}

TEST_CASE("md5 known vectors") {
  CHECK(md5_hex("") == "d41d8cd98f00b204e9800998ecf8427e");
  CHECK(md5_hex("abc") == "900150983cd24fb0d6963f7d28e17f72");
  CHECK(md5_hex("The quick brown fox jumps over the lazy dog") == "9e107d9d372bb6826bd81d3542a419d6");
}

TEST_CASE("vocabulary parsing") {
  const auto vocab = Vocabulary::load(test::mappings_dir() / "vocab.tsv");
  CHECK(vocab.version() == 1);
  CHECK(vocab.lookup("dcterms:title").iri.str() == "http://purl.org/dc/terms/title");
  CHECK(vocab.lookup_class("foaf:Person").domain_kind == EntityKind::kPerson);
  CHECK(code_of([&] { vocab.lookup("dcterms:nope"); }) == ErrorCode::kUnknownTerm);
  CHECK(code_of([&] { vocab.lookup_class("dcterms:title"); }) == ErrorCode::kUnknownTerm);

  std::istringstream mismatch("dcterms:title\thttp://example.org/title\tproperty\n");
  CHECK(code_of([&] { Vocabulary::parse(mismatch); }) == ErrorCode::kConfigError);
  std::istringstream dup("dcterms:title\thttp://purl.org/dc/terms/title\tproperty\n"
                         "dcterms:title\thttp://purl.org/dc/terms/title\tproperty\n");
  CHECK(code_of([&] { Vocabulary::parse(dup); }) == ErrorCode::kConfigError);
  CHECK(code_of([] { expand_curie("zz:x"); }) == ErrorCode::kUnknownTerm);
}

TEST_CASE("run stats round trip") {
  RunStats s;
  s.records_read = 10;
  s.triples_emitted = 99;
  s.cells_skipped = 1;
  s.unknown_fields = 2;
  s.rankings_decoded = 3;
  s.error_count = 4;
  s.warning_count = 5;
  s.peak_retained_values = 6;
  s.peak_retained_bytes = 7;
  s.tables["result"] = {3, 30, 1};
  std::stringstream io;
  write_stats(io, s);
  const RunStats r = read_stats(io);
  CHECK(r.records_read == 10);
  CHECK(r.triples_emitted == 99);
  CHECK(r.cells_skipped == 1);
  CHECK(r.unknown_fields == 2);
  CHECK(r.rankings_decoded == 3);
  CHECK(r.error_count == 4);
  CHECK(r.warning_count == 5);
  CHECK(r.peak_retained_values == 6);
  CHECK(r.peak_retained_bytes == 7);
  CHECK(r.tables.at("result").triples == 30);
}

TEST_CASE("error classes map to exit categories") {
  CHECK(classify(ErrorCode::kConfigError) == ErrorClass::kUsage);
  CHECK(classify(ErrorCode::kColumnCountMismatch) == ErrorClass::kData);
  CHECK(classify(ErrorCode::kIoError) == ErrorClass::kIo);
  CHECK(classify(ErrorCode::kHttpError) == ErrorClass::kIo);
}

TEST_CASE("turtle writer groups by subject") {
  const Triple a{Iri("http://a/s"), Iri("http://a/p"), Literal::plain("x")};
  const Triple b{Iri("http://a/s"), Iri("http://a/q"), Iri("http://a/o")};
  const std::vector<Triple> ts{a, b};
  std::ostringstream out;
  write_turtle(ts, out);
  const std::string text = out.str();
  CHECK(text.find("<http://a/s>") != std::string::npos);
  CHECK(text.find("<http://a/s>", text.find("<http://a/s>") + 1) == std::string::npos);
}

TEST_CASE("text helpers") {
  CHECK(trim("  a b \t") == "a b");
  CHECK(split("a#!#b#!##", "#!#").size() == 3);
  CHECK(split_ws("  a  b c ").size() == 3);
  CHECK(is_blank_or_comment("   # x"));
  CHECK_FALSE(is_blank_or_comment("x # y"));
}
