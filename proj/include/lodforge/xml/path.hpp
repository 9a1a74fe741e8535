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

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <span>
#include <vector>

namespace lodforge::xml {

/// Separator between namespace IRI and local name in resolved names. The
/// streaming parser reports element names in the same form.
inline constexpr char kNamespaceSeparator = '\x01';

/// prefix -> namespace IRI, from `@prefix` lines in the rule file.
using NamespaceMap = std::map<std::string, std::string, std::less<>>;

/// Resolves "prefix:local" to "<iri>\x01local"; unprefixed names stay as
/// they are. Throws Error{kInvalidPath} for an unbound prefix.
std::string resolve_qname(std::string_view qname, const NamespaceMap& namespaces);

/// Renders a resolved name back as "{iri}local" for messages.
std::string display_name(std::string_view resolved);

/// [@name='value']
struct AttrPredicate {
  std::string name;  // resolved
  std::string value;

  friend bool operator==(const AttrPredicate&, const AttrPredicate&) = default;
};

struct PathStep {
  std::string name;  // resolved; empty for the wildcard
  bool wildcard = false;
  std::vector<AttrPredicate> predicates;

  friend bool operator==(const PathStep&, const PathStep&) = default;
};

enum class Terminal { kElement, kText, kAttribute };

/// Child-axis location path relative to a context element. The supported
/// grammar: steps `name`, `prefix:name` or `*` joined by '/', each with
/// optional `[@attr='v']` predicates, ending in an element step, `text()`,
/// or `@attr`. "." is the context element itself. No '//', no other axes,
/// no functions other than text().
struct PathExpr {
  std::vector<PathStep> steps;
  Terminal terminal = Terminal::kElement;
  std::string attribute;  // resolved, for kAttribute
  std::string source;     // as written

  friend bool operator==(const PathExpr& a, const PathExpr& b) {
    return a.steps == b.steps && a.terminal == b.terminal && a.attribute == b.attribute;
  }
};

/// Throws Error{kInvalidPath}.
PathExpr parse_path(std::string_view text, const NamespaceMap& namespaces);

/// Attributes of one start tag as (resolved name, value) pairs.
using AttributeList = std::span<const std::pair<std::string_view, std::string_view>>;

std::optional<std::string_view> find_attribute(AttributeList attributes, std::string_view name) noexcept;

/// True when every predicate holds on `attributes`; a predicate on an absent
/// attribute does not hold.
bool predicates_hold(std::span<const AttrPredicate> predicates, AttributeList attributes) noexcept;

/// Name test plus predicates for one step.
bool step_matches(const PathStep& step, std::string_view name, AttributeList attributes) noexcept;

}  // namespace lodforge::xml
