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

#include "lodforge/core/vocab.hpp"

#include <fstream>
#include <istream>

#include "lodforge/core/error.hpp"
#include "lodforge/core/text.hpp"

namespace lodforge {

const std::vector<PrefixBinding>& standard_prefixes() {
  static const std::vector<PrefixBinding> kPrefixes = {
      {"oad", "http://lod.openaire.eu/data/"},
      {"oav", "http://lod.openaire.eu/vocab#"},
      {"dcterms", "http://purl.org/dc/terms/"},
      {"foaf", "http://xmlns.com/foaf/0.1/"},
      {"bibo", "http://purl.org/ontology/bibo/"},
      {"dcat", "http://www.w3.org/ns/dcat#"},
      {"skos", "http://www.w3.org/2004/02/skos/core#"},
      {"rdf", "http://www.w3.org/1999/02/22-rdf-syntax-ns#"},
      {"xsd", "http://www.w3.org/2001/XMLSchema#"},
  };
  return kPrefixes;
}

Iri expand_curie(std::string_view curie) {
  const auto colon = curie.find(':');
  if (colon == std::string_view::npos) {
    throw Error(ErrorCode::kUnknownTerm, "not a prefixed name: '" + std::string(curie) + "'");
  }
  const auto prefix = curie.substr(0, colon);
  for (const auto& binding : standard_prefixes()) {
    if (binding.prefix == prefix) {
      return Iri(std::string(binding.namespace_iri) + std::string(curie.substr(colon + 1)));
    }
  }
  throw Error(ErrorCode::kUnknownTerm, "unknown prefix '" + std::string(prefix) + "'");
}

Vocabulary Vocabulary::parse(std::istream& in, std::string_view source_name) {
  Vocabulary vocab;
  std::string line;
  std::size_t line_no = 0;
  auto fail = [&](const std::string& what) {
    throw Error(ErrorCode::kConfigError,
                std::string(source_name) + ":" + std::to_string(line_no) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (is_blank_or_comment(line)) continue;
    if (line.starts_with("@version")) {
      vocab.version_ = std::stoi(std::string(trim(std::string_view(line).substr(8))));
      continue;
    }
    const auto fields = split(line, '\t');
    if (fields.size() < 3 || fields.size() > 4) fail("expected 3 or 4 tab-separated fields");
    const std::string short_name(trim(fields[0]));
    Iri iri(std::string(trim(fields[1])));
    if (expand_curie(short_name) != iri) fail("IRI does not match prefix expansion of " + short_name);
    TermRole role;
    const auto role_text = trim(fields[2]);
    if (role_text == "class") {
      role = TermRole::kClass;
    } else if (role_text == "property") {
      role = TermRole::kProperty;
    } else {
      fail("unknown role '" + std::string(role_text) + "'");
    }
    std::optional<EntityKind> domain;
    if (fields.size() == 4) {
      domain = kind_from_name(trim(fields[3]));
      if (!domain) fail("unknown domain kind '" + std::string(fields[3]) + "'");
    }
    if (vocab.index_.contains(short_name)) fail("duplicate term " + short_name);
    vocab.index_.emplace(short_name, vocab.terms_.size());
    vocab.terms_.push_back(VocabTerm{short_name, std::move(iri), role, domain});
  }
  return vocab;
}

Vocabulary Vocabulary::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open vocabulary " + path.string());
  return parse(in, path.string());
}

const VocabTerm* Vocabulary::find(std::string_view short_name) const noexcept {
  const auto it = index_.find(std::string(short_name));
  return it == index_.end() ? nullptr : &terms_[it->second];
}

const VocabTerm& Vocabulary::lookup(std::string_view short_name) const {
  if (const auto* term = find(short_name)) return *term;
  throw Error(ErrorCode::kUnknownTerm, std::string(short_name));
}

const VocabTerm& Vocabulary::lookup_class(std::string_view short_name) const {
  const auto& term = lookup(short_name);
  if (term.role != TermRole::kClass) {
    throw Error(ErrorCode::kUnknownTerm, std::string(short_name) + " is not a class");
  }
  return term;
}

const VocabTerm& Vocabulary::lookup_property(std::string_view short_name) const {
  const auto& term = lookup(short_name);
  if (term.role != TermRole::kProperty) {
    throw Error(ErrorCode::kUnknownTerm, std::string(short_name) + " is not a property");
  }
  return term;
}

}  // namespace lodforge
