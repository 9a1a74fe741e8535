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

#include <map>
#include <set>
#include <sstream>

#include "lodforge/datagen/emit.hpp"
#include "lodforge/datagen/model.hpp"
#include "lodforge/datagen/prng.hpp"
#include "support/reference_listing.hpp"
#include "support/test_support.hpp"

using namespace lodforge;
using namespace lodforge::datagen;

namespace {

std::map<std::string, std::string> tree_contents(const std::filesystem::path& root) {
  std::map<std::string, std::string> out;
  for (const auto& e : std::filesystem::recursive_directory_iterator(root)) {
    if (e.is_regular_file()) out[std::filesystem::relative(e.path(), root).string()] = test::read_file(e.path());
  }
  return out;
}

}  // namespace

TEST_CASE("SplitMix64 reference sequence") {
  // First outputs for seed 1234567 from the reference SplitMix64 implementation.
  SplitMix64 rng(1234567);
  CHECK(rng.next() == 6457827717110365317ULL);
  CHECK(rng.next() == 3203168211198807973ULL);
  CHECK(rng.next() == 9817491932198370423ULL);
}

TEST_CASE("entity split is 40/35/10/10/5") {
  const auto c = GenConfig::for_total(1000, 1);
  CHECK(c.count(EntityKind::kResult) == 400);
  CHECK(c.count(EntityKind::kPerson) == 350);
  CHECK(c.count(EntityKind::kProject) == 100);
  CHECK(c.count(EntityKind::kOrganization) == 100);
  CHECK(c.count(EntityKind::kDatasource) == 50);
  CHECK(GenConfig::for_total(7, 1).total() == 7);
}

TEST_CASE("running example oracle equals the reference listing") {
  CHECK(oracle_lines(running_example()) == test::reference_listing_lines());
}

TEST_CASE("generated graph invariants") {
  const auto graph = generate(GenConfig::for_total(2000, 42));
  CHECK(graph.entities.size() == 2000);

  std::set<EntityId> ids;
  for (const auto& e : graph.entities) ids.insert(e.id);
  CHECK(ids.size() == graph.entities.size());

  std::map<EntityId, std::vector<std::int64_t>> author_ranks;
  std::set<std::tuple<std::string, std::string, std::string>> link_set;
  for (const auto& l : graph.links) {
    CHECK(graph.find(l.subject) != nullptr);
    CHECK(graph.find(l.object) != nullptr);
    link_set.emplace(l.subject.to_string(), l.family, l.object.to_string());
    if (l.family == "hasAuthor") {
      REQUIRE(l.ranking.has_value());
      author_ranks[l.subject].push_back(*l.ranking);
    }
  }
  // Every link is stored in both directions.
  for (const auto& l : graph.links) {
    bool inverse = false;
    const LinkDef* def = find_link(l.family, &inverse);
    REQUIRE(def != nullptr);
    const std::string back(inverse ? def->family : def->inverse_family);
    CHECK(link_set.contains({l.object.to_string(), back, l.subject.to_string()}));
  }
  // Results carry 1..3 authors ranked 1..n.
  for (const auto& e : graph.entities) {
    if (e.id.kind() != EntityKind::kResult) continue;
    auto ranks = author_ranks[e.id];
    std::sort(ranks.begin(), ranks.end());
    REQUIRE(!ranks.empty());
    CHECK(ranks.size() <= 3);
    for (std::size_t i = 0; i < ranks.size(); ++i) CHECK(ranks[i] == static_cast<std::int64_t>(i + 1));
  }
  // Values stay representable in every input format.
  for (const auto& e : graph.entities) {
    for (const auto& [name, values] : e.attributes) {
      for (const auto& v : values) {
        CHECK(v != "null");
        CHECK(v.find("#!#") == std::string::npos);
        CHECK_FALSE(v.empty());
      }
    }
  }
}

TEST_CASE("oracle size follows from the graph") {
  const auto graph = generate(GenConfig::for_total(500, 3));
  std::set<std::string> expected;
  for (const auto& e : graph.entities) {
    const auto& def = kind_def(e.id.kind());
    for (const auto& cls : def.classes) expected.insert(e.id.to_string() + " a " + std::string(cls));
    for (const auto& attr : def.attributes) {
      const auto* values = e.values(attr.name);
      if (values == nullptr) continue;
      for (const auto& v : *values) {
        if (attr.form == ObjectForm::kResultClass) {
          if (const auto cls = result_class(v)) expected.insert(e.id.to_string() + " a " + std::string(*cls));
        } else {
          expected.insert(e.id.to_string() + " " + std::string(attr.predicate) + " " + v);
        }
      }
    }
  }
  for (const auto& l : graph.links) expected.insert(l.subject.to_string() + " " + l.family + " " + l.object.to_string());
  CHECK(oracle_lines(graph).size() == expected.size());
}

TEST_CASE("same seed gives byte-identical corpora; different seeds differ") {
  test::TempDir a;
  test::TempDir b;
  test::TempDir c;
  EmitOptions options;
  options.rows_per_split = 50;
  options.records_per_xml_file = 60;
  emit_all(generate(GenConfig::for_total(300, 77)), 77, a.path(), options);
  emit_all(generate(GenConfig::for_total(300, 77)), 77, b.path(), options);
  emit_all(generate(GenConfig::for_total(300, 78)), 78, c.path(), options);
  const auto ta = tree_contents(a.path());
  CHECK(ta.size() > 10);
  CHECK(ta == tree_contents(b.path()));
  CHECK(ta != tree_contents(c.path()));
}

TEST_CASE("manifest records the emitted counts") {
  test::TempDir dir;
  EmitOptions options;
  options.rows_per_split = 100;
  options.records_per_xml_file = 70;
  const auto graph = generate(GenConfig::for_total(400, 8));
  const Manifest m = emit_all(graph, 8, dir.path(), options);
  CHECK(m.row_count == 400);
  CHECK(m.snapshot_splits == 4);
  CHECK(m.xml_record_count == 400);
  CHECK(m.xml_files == 6);
  CHECK(m.oracle_triples == oracle_lines(graph).size());
  CHECK(m.csv_records() > 400);  // multi-valued attributes and links add rows
  CHECK(m.entity_counts.at("result") == 160);

  std::ifstream in(dir / "manifest.txt");
  const Manifest back = read_manifest(in);
  CHECK(back.row_count == m.row_count);
  CHECK(back.csv_record_counts == m.csv_record_counts);
  CHECK(back.oracle_triples == m.oracle_triples);
  CHECK(std::filesystem::exists(dir / "fixture" / "expected.nt"));
}

TEST_CASE("empty graph emits empty but well-formed inputs") {
  test::TempDir dir;
  const auto graph = generate(GenConfig::for_total(0, 1));
  CHECK(graph.entities.empty());
  CHECK(oracle_lines(graph).empty());
  const Manifest m = emit_all(graph, 1, dir.path());
  CHECK(m.row_count == 0);
  CHECK(m.csv_records() == 0);
}

TEST_CASE("wire writer varints") {
  std::string out;
  WireWriter::append_varint(out, 300);
  CHECK(out == "\xac\x02");
  out.clear();
  WireWriter::append_varint(out, 0);
  CHECK(out == std::string(1, '\0'));
}
