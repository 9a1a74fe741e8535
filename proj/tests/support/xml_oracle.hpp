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


// Naive reference matcher for linear child-axis paths: every element is
// checked against every rule by walking its ancestor chain directly.
#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "lodforge/xml/automaton.hpp"
#include "lodforge/xml/path.hpp"

namespace lodforge::test {

struct NaiveElement {
  std::string name;
  std::vector<std::pair<std::string, std::string>> attributes;
};

inline bool naive_step(const xml::PathStep& step, const NaiveElement& e) {
  if (!step.wildcard && step.name != e.name) return false;
  for (const auto& p : step.predicates) {
    bool ok = false;
    for (const auto& [k, v] : e.attributes) ok = ok || (k == p.name && v == p.value);
    if (!ok) return false;
  }
  return true;
}

// True when `chain[first .. first + steps.size())` matches `steps`.
inline bool naive_run(const std::vector<xml::PathStep>& steps, const std::vector<NaiveElement>& chain,
                      std::size_t first) {
  if (first + steps.size() > chain.size()) return false;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (!naive_step(steps[i], chain[first + i])) return false;
  }
  return true;
}

// (role, index) pairs that accept at the last element of `chain`: some
// suffix anchor matches the scope path and the remainder matches the
// rule's subject or object path exactly.
inline std::set<std::pair<int, std::uint32_t>> naive_accepts(const xml::FilterAutomaton& automaton,
                                                             const std::vector<NaiveElement>& chain) {
  std::set<std::pair<int, std::uint32_t>> out;
  const auto& rules = automaton.rules();
  for (std::uint32_t r = 0; r < rules.size(); ++r) {
    const auto& scope = rules[r].scope.steps;
    for (std::size_t start = 0; start + scope.size() <= chain.size(); ++start) {
      if (!naive_run(scope, chain, start)) continue;
      const std::size_t rel = start + scope.size();
      const auto& obj = rules[r].object_path.steps;
      if (rel + obj.size() == chain.size() && naive_run(obj, chain, rel)) {
        out.emplace(static_cast<int>(xml::Role::kObject), r);
      }
      const auto& subj = rules[r].subject.path.steps;
      if (rel + subj.size() == chain.size() && naive_run(subj, chain, rel)) {
        out.emplace(static_cast<int>(xml::Role::kSubject), automaton.subject_source_of(r));
      }
    }
  }
  return out;
}

}  // namespace lodforge::test
