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

#include "lodforge/xml/automaton.hpp"

#include <algorithm>
#include <set>

#include "lodforge/core/error.hpp"

namespace lodforge::xml {

std::uint32_t FilterAutomaton::child(std::uint32_t from, const PathStep& step) {
  for (const auto& edge : states_[from].edges) {
    if (edge.step == step) return edge.target;
  }
  const auto target = static_cast<std::uint32_t>(states_.size());
  states_.emplace_back();
  states_[from].edges.push_back(Edge{step, target});
  return target;
}

void FilterAutomaton::add_accept(std::uint32_t state, Accept accept) {
  auto& accepts = states_[state].accepts;
  if (std::find(accepts.begin(), accepts.end(), accept) == accepts.end()) accepts.push_back(std::move(accept));
}

FilterAutomaton FilterAutomaton::compile(std::vector<XmlRule> rules) {
  FilterAutomaton fa;
  fa.states_.emplace_back();  // root
  std::set<int> ids;
  for (const auto& rule : rules) {
    if (!ids.insert(rule.rule_id).second) {
      throw Error(ErrorCode::kDuplicateRuleId, "rule id " + std::to_string(rule.rule_id));
    }
    if (rule.scope.steps.empty() || rule.scope.terminal != Terminal::kElement) {
      throw Error(ErrorCode::kInvalidPath, "scope '" + rule.scope.source + "' must select elements");
    }
    if (rule.subject.path.terminal == Terminal::kElement) {
      throw Error(ErrorCode::kInvalidPath, "subject '" + rule.subject.path.source + "' must select a value");
    }
  }
  fa.rules_ = std::move(rules);

  // (scope state, subject path, kind) -> subject source
  std::vector<std::pair<std::uint32_t, std::uint32_t>> source_keys;
  for (std::uint32_t r = 0; r < fa.rules_.size(); ++r) {
    const XmlRule& rule = fa.rules_[r];
    std::uint32_t scope = 0;
    for (const auto& step : rule.scope.steps) scope = fa.child(scope, step);
    if (fa.states_[scope].scope_slot == kNoScope) {
      fa.states_[scope].scope_slot = static_cast<std::uint32_t>(fa.scope_states_.size());
      fa.scope_states_.push_back(scope);
    }
    const std::uint32_t slot = fa.states_[scope].scope_slot;
    fa.rule_scope_slot_.push_back(slot);

    std::uint32_t source = 0;
    for (; source < fa.subject_sources_.size(); ++source) {
      const XmlRule& other = fa.rules_[fa.subject_sources_[source]];
      if (fa.rule_scope_slot_[fa.subject_sources_[source]] == slot && other.subject.path == rule.subject.path &&
          other.subject.kind == rule.subject.kind) {
        break;
      }
    }
    if (source == fa.subject_sources_.size()) {
      fa.subject_sources_.push_back(r);
      std::uint32_t s = scope;
      for (const auto& step : rule.subject.path.steps) s = fa.child(s, step);
      fa.add_accept(s, Accept{Role::kSubject, source, slot, rule.subject.path.terminal, rule.subject.path.attribute});
    }
    fa.rule_subject_.push_back(source);

    std::uint32_t s = scope;
    for (const auto& step : rule.object_path.steps) s = fa.child(s, step);
    fa.add_accept(s, Accept{Role::kObject, r, slot, rule.object_path.terminal, rule.object_path.attribute});
  }
  return fa;
}

void FilterAutomaton::advance(std::span<const std::uint32_t> active, std::string_view name,
                              AttributeList attributes, std::vector<std::uint32_t>& next) const {
  const std::size_t first = next.size();
  auto push_unique = [&](std::uint32_t target) {
    if (std::find(next.begin() + static_cast<std::ptrdiff_t>(first), next.end(), target) == next.end()) {
      next.push_back(target);
    }
  };
  for (const auto& edge : states_[0].edges) {
    if (step_matches(edge.step, name, attributes)) push_unique(edge.target);
  }
  for (const std::uint32_t s : active) {
    for (const auto& edge : states_[s].edges) {
      if (step_matches(edge.step, name, attributes)) push_unique(edge.target);
    }
  }
}

}  // namespace lodforge::xml
