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

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace lodforge {

/// An absolute IRI. Construction validates: a scheme is present, and there
/// is no whitespace, no control character and none of <>"{}|^`\ .
class Iri {
 public:
  explicit Iri(std::string value);

  static bool is_valid(std::string_view value) noexcept;

  const std::string& str() const noexcept { return value_; }

  friend auto operator<=>(const Iri&, const Iri&) = default;

 private:
  std::string value_;
};

/// Percent-encodes every byte outside the RFC 3987 path-segment safe set
/// (unreserved, sub-delims, ':' and '@'). Non-ASCII bytes are encoded too.
std::string percent_encode_segment(std::string_view segment);

struct Literal {
  std::string lexical;
  std::optional<Iri> datatype;
  std::optional<std::string> language;

  /// Throws Error{kInvalidIri} when both datatype and language are given.
  static Literal plain(std::string lexical);
  static Literal typed(std::string lexical, Iri datatype);
  static Literal tagged(std::string lexical, std::string language);

  friend auto operator<=>(const Literal&, const Literal&) = default;
};

using Term = std::variant<Iri, Literal>;

struct Triple {
  Iri subject;
  Iri predicate;
  Term object;

  friend auto operator<=>(const Triple&, const Triple&) = default;
};

namespace iri {
inline constexpr std::string_view kRdfType = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";
inline constexpr std::string_view kXsd = "http://www.w3.org/2001/XMLSchema#";
}  // namespace iri

}  // namespace lodforge
