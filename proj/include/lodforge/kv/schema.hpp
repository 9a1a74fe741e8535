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

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lodforge/core/entity_id.hpp"
#include "lodforge/core/rdf.hpp"
#include "lodforge/core/vocab.hpp"

namespace lodforge::kv {

enum class ValueKind { kString, kInt, kNested };

/// How a decoded leaf value becomes an RDF object.
struct AttributeMapping {
  const VocabTerm* predicate = nullptr;
  std::optional<Iri> datatype;
  std::optional<std::string> language;
  /// Non-empty for rdf:type mappings: field value -> class IRI.
  std::vector<std::pair<std::string, Iri>> class_map;
};

struct MessageSchema;

struct FieldDef {
  std::uint32_t number = 0;
  std::string name;
  ValueKind kind = ValueKind::kString;
  bool repeated = false;
  /// Nested fields marked `inline` contribute their mapped leaves to the
  /// enclosing entity; other nested fields are decoded but not mapped.
  bool inline_nested = false;
  const MessageSchema* nested = nullptr;
  std::optional<AttributeMapping> mapping;
};

struct MessageSchema {
  std::string name;
  std::map<std::uint32_t, FieldDef> fields;

  const FieldDef* field(std::uint32_t number) const noexcept;
};

/// Binds an entity kind to its body message and rdf:type classes.
struct EntitySchema {
  EntityKind kind;
  const MessageSchema* body = nullptr;
  std::vector<const VocabTerm*> classes;
};

/// A link column family such as `hasAuthor`, whose qualifiers are target
/// row keys. Both directions of a link are stored as separate families.
struct LinkSpec {
  std::string family;
  EntityKind subject_kind;
  const VocabTerm* predicate = nullptr;
  EntityKind object_kind;
  std::optional<std::string> inverse_family;
  const VocabTerm* inverse_predicate = nullptr;
  const MessageSchema* payload = nullptr;
};

/// Message schemas, entity bindings and link families loaded from the
/// shipped schema and link files.
///
/// Schema file lines:
///   message <Name>
///   field <n> <name> <string|int|MessageName> [repeated] [inline]
///         [-> <predicate> [^^<datatype>|@<lang>|<value>=<class>...]]
///   entity <kind> <MessageName> <class>...
/// Link file lines:
///   link <family> <subjectKind> <predicate> <objectKind> [inverse <family>]
///        [payload <MessageName>]
class SchemaSet {
 public:
  static SchemaSet parse(std::istream& schemas, std::istream& links, const Vocabulary& vocab);
  static SchemaSet load(const std::filesystem::path& schema_file,
                        const std::filesystem::path& link_file, const Vocabulary& vocab);

  const EntitySchema* entity(EntityKind kind) const noexcept;
  const MessageSchema* message(std::string_view name) const noexcept;
  const LinkSpec* link(std::string_view family) const noexcept;
  const std::vector<LinkSpec>& links() const noexcept { return links_; }

 private:
  std::map<std::string, std::unique_ptr<MessageSchema>, std::less<>> messages_;
  std::map<EntityKind, EntitySchema> entities_;
  std::vector<LinkSpec> links_;
};

}  // namespace lodforge::kv
