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

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lodforge/core/entity_id.hpp"
#include "lodforge/core/rdf.hpp"

namespace lodforge::datagen {

/// How an attribute value becomes an RDF object in the target vocabulary.
enum class ObjectForm { kPlain, kEnglish, kDate, kInteger, kResultClass };

struct AttributeDef {
  std::string_view name;
  bool repeated;
  bool optional;
  std::string_view predicate;  // full IRI; rdf:type for kResultClass
  ObjectForm form;
  std::uint32_t wire_field;
  bool wire_int;
};

struct KindDef {
  EntityKind kind;
  std::vector<std::string_view> classes;  // full IRIs emitted for every entity
  std::vector<AttributeDef> attributes;
};

struct LinkDef {
  std::string_view family;
  EntityKind subject_kind;
  std::string_view predicate;
  EntityKind object_kind;
  std::string_view inverse_family;
  std::string_view inverse_predicate;
  bool ranked;
};

const KindDef& kind_def(EntityKind kind);
std::span<const LinkDef> link_defs();
/// Lookup by forward or inverse family name; `inverse` reports which.
const LinkDef* find_link(std::string_view family, bool* inverse = nullptr);

/// Class IRI for a resulttype value ("publication", "dataset").
std::optional<std::string_view> result_class(std::string_view resulttype);

struct Language {
  std::string_view three;  // ISO 639-2/B
  std::string_view two;    // ISO 639-1
  std::string_view english_name;
};
std::span<const Language> languages();
const Language* find_language_by_three(std::string_view code);
const Language* find_language_by_two(std::string_view code);

struct GenConfig {
  std::uint64_t seed = 42;
  std::array<std::size_t, 5> counts{};  // indexed by EntityKind
  int authors_min = 1;
  int authors_max = 3;
  std::vector<std::string> languages;  // ISO 639-2 codes; empty means all known

  std::size_t& count(EntityKind kind) { return counts[static_cast<std::size_t>(kind)]; }
  std::size_t count(EntityKind kind) const { return counts[static_cast<std::size_t>(kind)]; }
  std::size_t total() const;

  /// Splits `entities` 40/35/10/10/5 over result/person/project/organization/datasource.
  static GenConfig for_total(std::size_t entities, std::uint64_t seed);
};

struct Entity {
  EntityId id;
  /// Attribute name -> values in emission order. Absent optional attributes
  /// have no entry; repeated attributes may have several values.
  std::map<std::string, std::vector<std::string>, std::less<>> attributes;

  const std::vector<std::string>* values(std::string_view name) const;
};

struct Link {
  EntityId subject;
  std::string family;
  EntityId object;
  std::optional<std::int64_t> ranking;
};

/// Entities sorted by id; links hold both directions, sorted by
/// (subject, family, object).
struct EntityGraph {
  std::vector<Entity> entities;
  std::vector<Link> links;

  const Entity* find(const EntityId& id) const;
  std::size_t count(EntityKind kind) const;
};

/// Throws Error{kConfigError} for unknown language codes or a bad author range.
EntityGraph generate(const GenConfig& config);

/// The publication and two authors of the running example.
EntityGraph running_example();

/// Maps the in-memory graph straight to triples from the tables above,
/// without any serialization or mapping file. Sorted and deduplicated.
std::vector<Triple> oracle_triples(const EntityGraph& graph);

/// Sorted, deduplicated N-Triples lines of oracle_triples().
std::vector<std::string> oracle_lines(const EntityGraph& graph);

}  // namespace lodforge::datagen
