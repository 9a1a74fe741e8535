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

#include "lodforge/kv/schema.hpp"

#include <fstream>
#include <istream>
#include <tuple>

#include "lodforge/core/error.hpp"
#include "lodforge/core/text.hpp"

namespace lodforge::kv {
namespace {

struct PendingNested {
  FieldDef* field;
  std::string message_name;
  std::size_t line_no;
};

[[noreturn]] void config_error(std::string_view file, std::size_t line_no, const std::string& what) {
  throw Error(ErrorCode::kConfigError, std::string(file) + ":" + std::to_string(line_no) + ": " + what);
}

EntityKind parse_kind(std::string_view text, std::string_view file, std::size_t line_no) {
  const auto kind = kind_from_name(text);
  if (!kind) config_error(file, line_no, "unknown entity kind '" + std::string(text) + "'");
  return *kind;
}

AttributeMapping parse_mapping(const std::vector<std::string_view>& tokens, std::size_t first,
                               const Vocabulary& vocab, std::size_t line_no) {
  if (first >= tokens.size()) config_error("schema", line_no, "missing predicate after '->'");
  AttributeMapping mapping;
  mapping.predicate = &vocab.lookup_property(tokens[first]);
  for (std::size_t i = first + 1; i < tokens.size(); ++i) {
    const auto tok = tokens[i];
    if (tok.starts_with("^^")) {
      mapping.datatype = expand_curie(tok.substr(2));
    } else if (tok.starts_with("@")) {
      mapping.language = std::string(tok.substr(1));
    } else if (const auto eq = tok.find('='); eq != std::string_view::npos) {
      const auto& cls = vocab.lookup_class(tok.substr(eq + 1));
      mapping.class_map.emplace_back(std::string(tok.substr(0, eq)), cls.iri);
    } else {
      config_error("schema", line_no, "unexpected token '" + std::string(tok) + "'");
    }
  }
  if (mapping.datatype && mapping.language) {
    config_error("schema", line_no, "datatype and language are mutually exclusive");
  }
  if (!mapping.class_map.empty() && mapping.predicate->iri.str() != iri::kRdfType) {
    config_error("schema", line_no, "value=class pairs require rdf:type");
  }
  return mapping;
}

}  // namespace

const FieldDef* MessageSchema::field(std::uint32_t number) const noexcept {
  const auto it = fields.find(number);
  return it == fields.end() ? nullptr : &it->second;
}

SchemaSet SchemaSet::parse(std::istream& schemas, std::istream& links, const Vocabulary& vocab) {
  SchemaSet set;
  std::vector<PendingNested> pending;
  std::vector<std::tuple<EntityKind, std::string, std::vector<std::string>, std::size_t>> entity_lines;
  MessageSchema* current = nullptr;

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(schemas, line)) {
    ++line_no;
    if (is_blank_or_comment(line)) continue;
    const auto tokens = split_ws(line);
    if (tokens[0] == "message") {
      if (tokens.size() != 2) config_error("schema", line_no, "expected 'message <Name>'");
      auto msg = std::make_unique<MessageSchema>();
      msg->name = std::string(tokens[1]);
      current = msg.get();
      if (!set.messages_.emplace(msg->name, std::move(msg)).second) {
        config_error("schema", line_no, "duplicate message " + std::string(tokens[1]));
      }
    } else if (tokens[0] == "field") {
      if (current == nullptr) config_error("schema", line_no, "field outside message");
      if (tokens.size() < 4) config_error("schema", line_no, "expected 'field <n> <name> <type>'");
      FieldDef def;
      def.number = static_cast<std::uint32_t>(std::stoul(std::string(tokens[1])));
      if (def.number == 0) config_error("schema", line_no, "field numbers start at 1");
      def.name = std::string(tokens[2]);
      const auto type = tokens[3];
      def.kind = type == "string" ? ValueKind::kString : type == "int" ? ValueKind::kInt : ValueKind::kNested;
      std::size_t i = 4;
      for (; i < tokens.size() && tokens[i] != "->"; ++i) {
        if (tokens[i] == "repeated") def.repeated = true;
        else if (tokens[i] == "inline") def.inline_nested = true;
        else config_error("schema", line_no, "unexpected token '" + std::string(tokens[i]) + "'");
      }
      if (i < tokens.size()) {
        if (def.kind == ValueKind::kNested) config_error("schema", line_no, "nested fields cannot map directly");
        def.mapping = parse_mapping(tokens, i + 1, vocab, line_no);
      }
      auto [it, inserted] = current->fields.emplace(def.number, std::move(def));
      if (!inserted) config_error("schema", line_no, "duplicate field number in " + current->name);
      if (it->second.kind == ValueKind::kNested) {
        pending.push_back({&it->second, std::string(type), line_no});
      }
    } else if (tokens[0] == "entity") {
      if (tokens.size() < 3) config_error("schema", line_no, "expected 'entity <kind> <Message> <class>...'");
      std::vector<std::string> classes(tokens.begin() + 3, tokens.end());
      entity_lines.emplace_back(parse_kind(tokens[1], "schema", line_no), std::string(tokens[2]),
                                std::move(classes), line_no);
    } else {
      config_error("schema", line_no, "unknown directive '" + std::string(tokens[0]) + "'");
    }
  }
  for (const auto& p : pending) {
    p.field->nested = set.message(p.message_name);
    if (p.field->nested == nullptr) config_error("schema", p.line_no, "unknown message " + p.message_name);
  }
  for (const auto& [kind, message_name, classes, where] : entity_lines) {
    EntitySchema entity{kind, set.message(message_name), {}};
    if (entity.body == nullptr) config_error("schema", where, "unknown message " + message_name);
    for (const auto& cls : classes) entity.classes.push_back(&vocab.lookup_class(cls));
    if (!set.entities_.emplace(kind, std::move(entity)).second) {
      config_error("schema", where, "duplicate entity binding");
    }
  }

  line_no = 0;
  while (std::getline(links, line)) {
    ++line_no;
    if (is_blank_or_comment(line)) continue;
    const auto tokens = split_ws(line);
    if (tokens[0] != "link" || tokens.size() < 5) {
      config_error("links", line_no, "expected 'link <family> <kind> <predicate> <kind> ...'");
    }
    LinkSpec spec;
    spec.family = std::string(tokens[1]);
    spec.subject_kind = parse_kind(tokens[2], "links", line_no);
    spec.predicate = &vocab.lookup_property(tokens[3]);
    spec.object_kind = parse_kind(tokens[4], "links", line_no);
    for (std::size_t i = 5; i + 1 < tokens.size(); i += 2) {
      if (tokens[i] == "inverse") {
        spec.inverse_family = std::string(tokens[i + 1]);
      } else if (tokens[i] == "payload") {
        spec.payload = set.message(tokens[i + 1]);
        if (spec.payload == nullptr) config_error("links", line_no, "unknown payload message");
      } else {
        config_error("links", line_no, "unexpected token '" + std::string(tokens[i]) + "'");
      }
    }
    if (tokens.size() % 2 == 0) config_error("links", line_no, "dangling option");
    if (set.link(spec.family) != nullptr) config_error("links", line_no, "duplicate family " + spec.family);
    set.links_.push_back(std::move(spec));
  }
  for (auto& spec : set.links_) {
    if (!spec.inverse_family) continue;
    const auto* inverse = set.link(*spec.inverse_family);
    if (inverse == nullptr || inverse->subject_kind != spec.object_kind ||
        inverse->object_kind != spec.subject_kind) {
      throw Error(ErrorCode::kConfigError, "links: inconsistent inverse for family " + spec.family);
    }
    spec.inverse_predicate = inverse->predicate;
  }
  return set;
}

SchemaSet SchemaSet::load(const std::filesystem::path& schema_file,
                          const std::filesystem::path& link_file, const Vocabulary& vocab) {
  std::ifstream schemas(schema_file);
  if (!schemas) throw Error(ErrorCode::kIoError, "cannot open " + schema_file.string());
  std::ifstream links(link_file);
  if (!links) throw Error(ErrorCode::kIoError, "cannot open " + link_file.string());
  return parse(schemas, links, vocab);
}

const EntitySchema* SchemaSet::entity(EntityKind kind) const noexcept {
  const auto it = entities_.find(kind);
  return it == entities_.end() ? nullptr : &it->second;
}

const MessageSchema* SchemaSet::message(std::string_view name) const noexcept {
  const auto it = messages_.find(name);
  return it == messages_.end() ? nullptr : it->second.get();
}

const LinkSpec* SchemaSet::link(std::string_view family) const noexcept {
  for (const auto& spec : links_) {
    if (spec.family == family) return &spec;
  }
  return nullptr;
}

}  // namespace lodforge::kv
