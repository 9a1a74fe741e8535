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

namespace lodforge {

enum class TermRole { kClass, kProperty };

struct VocabTerm {
  std::string short_name;  // e.g. "dcterms:title"
  Iri iri;
  TermRole role;
  std::optional<EntityKind> domain_kind;
};

/// Fixed prefix table shared by the vocabulary file, templates and rules.
struct PrefixBinding {
  std::string_view prefix;
  std::string_view namespace_iri;
};
const std::vector<PrefixBinding>& standard_prefixes();

/// Expands "prefix:local" against the fixed prefix table.
/// Throws Error{kUnknownTerm} for an unknown prefix.
Iri expand_curie(std::string_view curie);

/// Read-only term registry loaded from the shipped vocabulary file.
///
/// File format: UTF-8 lines `shortName TAB iri TAB role [TAB domainKind]`,
/// `#` comment lines, and an `@version N` directive. Every term's IRI must
/// equal the expansion of its short name.
class Vocabulary {
 public:
  static Vocabulary parse(std::istream& in, std::string_view source_name = "<stream>");
  static Vocabulary load(const std::filesystem::path& path);

  /// Throws Error{kUnknownTerm}.
  const VocabTerm& lookup(std::string_view short_name) const;
  const VocabTerm* find(std::string_view short_name) const noexcept;

  /// Looks up a class term; throws Error{kUnknownTerm} if it is a property.
  const VocabTerm& lookup_class(std::string_view short_name) const;
  const VocabTerm& lookup_property(std::string_view short_name) const;

  const std::vector<VocabTerm>& terms() const noexcept { return terms_; }
  int version() const noexcept { return version_; }

 private:
  std::vector<VocabTerm> terms_;
  std::unordered_map<std::string, std::size_t> index_;
  int version_ = 0;
};

}  // namespace lodforge
