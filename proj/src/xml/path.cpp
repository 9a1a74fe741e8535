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

#include "lodforge/xml/path.hpp"

#include <cctype>

#include "lodforge/core/error.hpp"
#include "lodforge/core/text.hpp"

namespace lodforge::xml {
namespace {

[[noreturn]] void invalid(std::string_view path, const std::string& why) {
  throw Error(ErrorCode::kInvalidPath, "'" + std::string(path) + "': " + why);
}

bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.' || c == ':' ||
         static_cast<unsigned char>(c) >= 0x80;
}

bool is_valid_qname(std::string_view name) {
  if (name.empty() || name.front() == ':' || name.back() == ':' || name.front() == '.' || name.front() == '-') {
    return false;
  }
  std::size_t colons = 0;
  for (char c : name) {
    if (!is_name_char(c)) return false;
    if (c == ':') ++colons;
  }
  return colons <= 1;
}

// Parses `name[@a='v'][@b="w"]`.
PathStep parse_step(std::string_view text, std::string_view whole, const NamespaceMap& namespaces) {
  PathStep step;
  const auto bracket = text.find('[');
  const auto name = text.substr(0, bracket);
  if (name == "*") {
    step.wildcard = true;
  } else if (name == "." || name == "..") {
    invalid(whole, "only the child axis is supported");
  } else if (name.find("::") != std::string_view::npos) {
    invalid(whole, "explicit axes are not supported");
  } else if (name.find('(') != std::string_view::npos) {
    invalid(whole, "function '" + std::string(name) + "' is not supported");
  } else if (!is_valid_qname(name)) {
    invalid(whole, "bad element name '" + std::string(name) + "'");
  } else {
    step.name = resolve_qname(name, namespaces);
  }
  std::string_view rest = bracket == std::string_view::npos ? std::string_view{} : text.substr(bracket);
  while (!rest.empty()) {
    if (!rest.starts_with("[@")) invalid(whole, "predicates must have the form [@attr='value']");
    const auto close = rest.find(']');
    if (close == std::string_view::npos) invalid(whole, "unterminated predicate");
    const auto body = rest.substr(2, close - 2);
    const auto eq = body.find('=');
    if (eq == std::string_view::npos) invalid(whole, "predicate without '='");
    const auto attr = trim(body.substr(0, eq));
    auto value = trim(body.substr(eq + 1));
    if (value.size() < 2 || (value.front() != '\'' && value.front() != '"') || value.back() != value.front()) {
      invalid(whole, "predicate value must be quoted");
    }
    if (!is_valid_qname(attr)) invalid(whole, "bad attribute name '" + std::string(attr) + "'");
    step.predicates.push_back(
        AttrPredicate{resolve_qname(attr, namespaces), std::string(value.substr(1, value.size() - 2))});
    rest.remove_prefix(close + 1);
  }
  return step;
}

// Splits on '/' outside of predicate brackets and quotes.
std::vector<std::string_view> split_steps(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  int depth = 0;
  char quote = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (quote != 0) {
      if (c == quote) quote = 0;
    } else if (c == '\'' || c == '"') {
      quote = c;
    } else if (c == '[') {
      ++depth;
    } else if (c == ']') {
      --depth;
    } else if (c == '/' && depth == 0) {
      parts.push_back(text.substr(start, i - start));
      start = i + 1;
    }
  }
  parts.push_back(text.substr(start));
  return parts;
}

}  // namespace

std::string resolve_qname(std::string_view qname, const NamespaceMap& namespaces) {
  const auto colon = qname.find(':');
  if (colon == std::string_view::npos) return std::string(qname);
  const auto prefix = qname.substr(0, colon);
  const auto it = namespaces.find(prefix);
  if (it == namespaces.end()) {
    throw Error(ErrorCode::kInvalidPath, "unbound namespace prefix '" + std::string(prefix) + "'");
  }
  std::string out = it->second;
  out.push_back(kNamespaceSeparator);
  out.append(qname.substr(colon + 1));
  return out;
}

std::string display_name(std::string_view resolved) {
  const auto sep = resolved.find(kNamespaceSeparator);
  if (sep == std::string_view::npos) return std::string(resolved);
  return "{" + std::string(resolved.substr(0, sep)) + "}" + std::string(resolved.substr(sep + 1));
}

PathExpr parse_path(std::string_view text, const NamespaceMap& namespaces) {
  PathExpr expr;
  expr.source = std::string(text);
  const auto trimmed = trim(text);
  if (trimmed.empty()) invalid(text, "empty path");
  if (trimmed.find("//") != std::string_view::npos) invalid(text, "the descendant axis '//' is not supported");
  if (trimmed.front() == '/') invalid(text, "absolute paths are not supported");
  if (trimmed == ".") return expr;

  auto parts = split_steps(trimmed);
  std::string_view last = parts.back();
  if (last == "text()") {
    expr.terminal = Terminal::kText;
    parts.pop_back();
  } else if (last.starts_with('@')) {
    const auto attr = last.substr(1);
    if (!is_valid_qname(attr)) invalid(text, "bad attribute name");
    expr.terminal = Terminal::kAttribute;
    expr.attribute = resolve_qname(attr, namespaces);
    parts.pop_back();
  }
  // "./@id", "./text()"
  if (!parts.empty() && parts.front() == ".") parts.erase(parts.begin());
  for (const auto part : parts) {
    if (part.empty()) invalid(text, "empty step");
    if (part.starts_with('@')) invalid(text, "the attribute axis is only allowed as the last step");
    if (part == "text()") invalid(text, "text() is only allowed as the last step");
    expr.steps.push_back(parse_step(part, text, namespaces));
  }
  return expr;
}

std::optional<std::string_view> find_attribute(AttributeList attributes, std::string_view name) noexcept {
  for (const auto& [key, value] : attributes) {
    if (key == name) return value;
  }
  return std::nullopt;
}

bool predicates_hold(std::span<const AttrPredicate> predicates, AttributeList attributes) noexcept {
  for (const auto& p : predicates) {
    const auto value = find_attribute(attributes, p.name);
    if (!value || *value != p.value) return false;
  }
  return true;
}

bool step_matches(const PathStep& step, std::string_view name, AttributeList attributes) noexcept {
  return (step.wildcard || step.name == name) && predicates_hold(step.predicates, attributes);
}

}  // namespace lodforge::xml
