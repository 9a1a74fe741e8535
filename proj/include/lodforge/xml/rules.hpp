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
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "lodforge/core/entity_id.hpp"
#include "lodforge/core/rdf.hpp"
#include "lodforge/core/vocab.hpp"
#include "lodforge/xml/path.hpp"

namespace lodforge::xml {

/// Where a rule's subject id comes from, relative to the scope element.
struct SubjectSource {
  PathExpr path;  // "@objIdentifier" for the scope's id attribute
  EntityKind kind;
};

struct ObjectForm {
  enum class Kind { kLiteral, kLangCode, kEntityRef, kConstIri };
  Kind kind = Kind::kLiteral;
  std::optional<Iri> datatype;
  std::optional<std::string> language;
  EntityKind entity_kind = EntityKind::kResult;  // kEntityRef
  std::optional<Iri> constant;                   // kConstIri
};

/// One triple template: values found at `object_path` below each `scope`
/// element become objects of `predicate` for that element's subject.
struct XmlRule {
  int rule_id = 0;
  PathExpr scope;
  SubjectSource subject;
  const VocabTerm* predicate = nullptr;
  PathExpr object_path;
  ObjectForm object_form;
};

/// Rule file: `@prefix p: <iri>` header lines, then one rule per line:
///   scope | subject-path kind | predicate | object-path | object-form
/// object-form: literal, literal^^<dt>, literal@<lang>, langcode,
/// entity:<kind>, const <class>. Rule ids are assigned in file order,
/// starting at 1.
struct RuleSet {
  NamespaceMap namespaces;
  std::vector<XmlRule> rules;

  static RuleSet parse(std::istream& in, const Vocabulary& vocab);
  static RuleSet load(const std::filesystem::path& path, const Vocabulary& vocab);
};

/// ISO 639-2 (three-letter) -> ISO 639-1 (two-letter) table.
/// File lines: `<639-2> TAB <639-1>`, `#` comments.
class LanguageMap {
 public:
  static LanguageMap parse(std::istream& in);
  static LanguageMap load(const std::filesystem::path& path);

  std::optional<std::string_view> to_two_letter(std::string_view code) const noexcept;
  std::size_t size() const noexcept { return table_.size(); }

 private:
  std::unordered_map<std::string, std::string> table_;
};

}  // namespace lodforge::xml
