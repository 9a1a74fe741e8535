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

#include "lodforge/core/turtle.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "lodforge/core/ntriples.hpp"
#include "lodforge/core/vocab.hpp"

namespace lodforge {
namespace {

bool is_plain_local(std::string_view local) {
  if (local.empty()) return false;
  return std::all_of(local.begin(), local.end(), [](unsigned char c) {
    return std::isalnum(c) || c == '_' || c == '-';
  });
}

std::string render_iri(const Iri& iri, std::set<std::string_view>& used) {
  for (const auto& binding : standard_prefixes()) {
    const auto& value = iri.str();
    if (value.starts_with(binding.namespace_iri)) {
      const std::string_view local = std::string_view(value).substr(binding.namespace_iri.size());
      if (is_plain_local(local)) {
        used.insert(binding.prefix);
        return std::string(binding.prefix) + ":" + std::string(local);
      }
    }
  }
  std::string out;
  append_iri(out, iri);
  return out;
}

std::string render_object(const Term& term, std::set<std::string_view>& used) {
  if (const auto* iri = std::get_if<Iri>(&term)) return render_iri(*iri, used);
  const auto& literal = std::get<Literal>(term);
  std::string out = "\"";
  append_escaped_literal(out, literal.lexical);
  out.push_back('"');
  if (literal.datatype) {
    out += "^^" + render_iri(*literal.datatype, used);
  } else if (literal.language) {
    out += "@" + *literal.language;
  }
  return out;
}

}  // namespace

void write_turtle(std::span<const Triple> triples, std::ostream& out) {
  std::vector<Triple> sorted(triples.begin(), triples.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  std::set<std::string_view> used;
  std::string body;
  for (std::size_t i = 0; i < sorted.size();) {
    const Iri& subject = sorted[i].subject;
    body += render_iri(subject, used);
    bool first_predicate = true;
    while (i < sorted.size() && sorted[i].subject == subject) {
      const Iri& predicate = sorted[i].predicate;
      body += first_predicate ? " " : " ;\n    ";
      first_predicate = false;
      body += render_iri(predicate, used);
      bool first_object = true;
      while (i < sorted.size() && sorted[i].subject == subject && sorted[i].predicate == predicate) {
        body += first_object ? " " : ", ";
        first_object = false;
        body += render_object(sorted[i].object, used);
        ++i;
      }
    }
    body += " .\n";
  }

  for (const auto& binding : standard_prefixes()) {
    if (used.contains(binding.prefix)) {
      out << "@prefix " << binding.prefix << ": <" << binding.namespace_iri << "> .\n";
    }
  }
  if (!used.empty()) out << '\n';
  out << body;
}

}  // namespace lodforge
