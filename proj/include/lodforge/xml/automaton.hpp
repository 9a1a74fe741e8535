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
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lodforge/xml/path.hpp"
#include "lodforge/xml/rules.hpp"

namespace lodforge::xml {

inline constexpr std::uint32_t kNoScope = std::numeric_limits<std::uint32_t>::max();

enum class Role : std::uint8_t { kSubject, kObject };

/// A value produced when an element reaches an accepting state.
struct Accept {
  Role role = Role::kObject;
  std::uint32_t index = 0;       // rule index (kObject) or subject source (kSubject)
  std::uint32_t scope_slot = 0;  // frame stack the value binds to
  Terminal terminal = Terminal::kElement;
  std::string attribute;         // kAttribute

  friend bool operator==(const Accept&, const Accept&) = default;
};

struct Edge {
  PathStep step;
  std::uint32_t target = 0;
};

struct State {
  std::vector<Edge> edges;
  std::vector<Accept> accepts;
  /// Set when some rule's scope path ends here; identifies its frame stack.
  std::uint32_t scope_slot = kNoScope;
};

/// Rule paths compiled into one trie-shaped NFA in the manner of YFilter:
/// scope paths hang off the root and may start at any depth (the root is
/// active at every element), subject and object paths continue from the
/// scope state with child steps. Steps with equal name test and predicates
/// share a state, so rules over one scope share their prefix and identical
/// paths share accept states. State count <= total steps + 1.
class FilterAutomaton {
 public:
  /// Throws Error{kDuplicateRuleId} or Error{kInvalidPath}.
  static FilterAutomaton compile(std::vector<XmlRule> rules);

  std::size_t state_count() const noexcept { return states_.size(); }
  std::size_t scope_count() const noexcept { return scope_states_.size(); }
  const State& state(std::uint32_t index) const { return states_[index]; }
  const std::vector<XmlRule>& rules() const noexcept { return rules_; }

  /// Subject source `index`: the rule whose subject path defines it.
  const XmlRule& subject_source_rule(std::uint32_t index) const { return rules_[subject_sources_[index]]; }
  /// Subject source used by rule `rule_index`.
  std::uint32_t subject_source_of(std::uint32_t rule_index) const { return rule_subject_[rule_index]; }
  std::uint32_t scope_slot_of(std::uint32_t rule_index) const { return rule_scope_slot_[rule_index]; }

  /// Appends to `next` the states reachable by an element named `name`
  /// with `attributes` from `active` or from the root. No duplicates.
  void advance(std::span<const std::uint32_t> active, std::string_view name, AttributeList attributes,
               std::vector<std::uint32_t>& next) const;

 private:
  std::uint32_t child(std::uint32_t from, const PathStep& step);
  void add_accept(std::uint32_t state, Accept accept);

  std::vector<State> states_;
  std::vector<XmlRule> rules_;
  std::vector<std::uint32_t> scope_states_;
  std::vector<std::uint32_t> subject_sources_;  // -> defining rule index
  std::vector<std::uint32_t> rule_subject_;
  std::vector<std::uint32_t> rule_scope_slot_;
};

}  // namespace lodforge::xml
