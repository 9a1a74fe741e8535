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

#include "lodforge/xml/rules.hpp"

#include <fstream>
#include <istream>

#include "lodforge/core/error.hpp"
#include "lodforge/core/text.hpp"

namespace lodforge::xml {
namespace {

[[noreturn]] void config_error(std::size_t line_no, const std::string& what) {
  throw Error(ErrorCode::kConfigError, "rules:" + std::to_string(line_no) + ": " + what);
}

EntityKind parse_kind(std::string_view text, std::size_t line_no) {
  const auto kind = kind_from_name(text);
  if (!kind) config_error(line_no, "unknown entity kind '" + std::string(text) + "'");
  return *kind;
}

ObjectForm parse_form(std::string_view text, const Vocabulary& vocab, std::size_t line_no) {
  ObjectForm form;
  if (text.starts_with("literal")) {
    form.kind = ObjectForm::Kind::kLiteral;
    const auto rest = text.substr(7);
    if (rest.starts_with("^^")) {
      form.datatype = expand_curie(rest.substr(2));
    } else if (rest.starts_with("@") && rest.size() > 1) {
      form.language = std::string(rest.substr(1));
    } else if (!rest.empty()) {
      config_error(line_no, "bad literal form '" + std::string(text) + "'");
    }
  } else if (text == "langcode") {
    form.kind = ObjectForm::Kind::kLangCode;
  } else if (text.starts_with("entity:")) {
    form.kind = ObjectForm::Kind::kEntityRef;
    form.entity_kind = parse_kind(text.substr(7), line_no);
  } else if (text.starts_with("const ")) {
    form.kind = ObjectForm::Kind::kConstIri;
    form.constant = vocab.lookup_class(trim(text.substr(6))).iri;
  } else {
    config_error(line_no, "unknown object form '" + std::string(text) + "'");
  }
  return form;
}

}  // namespace

RuleSet RuleSet::parse(std::istream& in, const Vocabulary& vocab) {
  RuleSet set;
  std::string line;
  std::size_t line_no = 0;
  int next_id = 1;
  while (std::getline(in, line)) {
    ++line_no;
    chomp_cr(line);
    if (is_blank_or_comment(line)) continue;
    const auto t = trim(line);
    if (t.starts_with("@prefix")) {
      const auto tokens = split_ws(t);
      if (tokens.size() != 3 || !tokens[1].ends_with(':') || !tokens[2].starts_with('<') ||
          !tokens[2].ends_with('>')) {
        config_error(line_no, "expected '@prefix p: <iri>'");
      }
      set.namespaces[std::string(tokens[1].substr(0, tokens[1].size() - 1))] =
          std::string(tokens[2].substr(1, tokens[2].size() - 2));
      continue;
    }
    const auto fields = split(t, '|');
    if (fields.size() != 5) config_error(line_no, "expected 5 '|'-separated fields");
    XmlRule rule;
    rule.rule_id = next_id++;
    rule.scope = parse_path(trim(fields[0]), set.namespaces);
    if (rule.scope.steps.empty() || rule.scope.terminal != Terminal::kElement) {
      throw Error(ErrorCode::kInvalidPath, "rules:" + std::to_string(line_no) + ": scope must select elements");
    }
    const auto subject = trim(fields[1]);
    const auto space = subject.rfind(' ');
    if (space == std::string_view::npos) config_error(line_no, "subject needs '<path> <kind>'");
    rule.subject.path = parse_path(trim(subject.substr(0, space)), set.namespaces);
    if (rule.subject.path.terminal == Terminal::kElement) {
      throw Error(ErrorCode::kInvalidPath, "rules:" + std::to_string(line_no) + ": subject path must select a value");
    }
    rule.subject.kind = parse_kind(subject.substr(space + 1), line_no);
    rule.predicate = &vocab.lookup_property(trim(fields[2]));
    rule.object_path = parse_path(trim(fields[3]), set.namespaces);
    rule.object_form = parse_form(trim(fields[4]), vocab, line_no);
    set.rules.push_back(std::move(rule));
  }
  return set;
}

RuleSet RuleSet::load(const std::filesystem::path& path, const Vocabulary& vocab) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path.string());
  return parse(in, vocab);
}

LanguageMap LanguageMap::parse(std::istream& in) {
  LanguageMap map;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_blank_or_comment(line)) continue;
    const auto fields = split_ws(line);
    if (fields.size() != 2) {
      throw Error(ErrorCode::kConfigError, "langmap:" + std::to_string(line_no) + ": expected two codes");
    }
    map.table_.emplace(std::string(fields[0]), std::string(fields[1]));
  }
  return map;
}

LanguageMap LanguageMap::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path.string());
  return parse(in);
}

std::optional<std::string_view> LanguageMap::to_two_letter(std::string_view code) const noexcept {
  const auto it = table_.find(std::string(code));
  if (it == table_.end()) return std::nullopt;
  return it->second;
}

}  // namespace lodforge::xml
