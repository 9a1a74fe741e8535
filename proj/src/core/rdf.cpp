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

#include "lodforge/core/rdf.hpp"

#include <cctype>

#include "lodforge/core/error.hpp"

namespace lodforge {
namespace {

bool is_scheme_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }

bool is_scheme_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '+' || c == '-' || c == '.';
}

bool is_segment_safe(unsigned char c) {
  if (std::isalnum(c)) return true;
  switch (c) {
    case '-': case '.': case '_': case '~':                        // unreserved
    case '!': case '$': case '&': case '\'': case '(': case ')':   // sub-delims
    case '*': case '+': case ',': case ';': case '=':
    case ':': case '@':
      return true;
    default:
      return false;
  }
}

}  // namespace

Iri::Iri(std::string value) : value_(std::move(value)) {
  if (!is_valid(value_)) {
    throw Error(ErrorCode::kInvalidIri, "'" + value_ + "'");
  }
}

bool Iri::is_valid(std::string_view value) noexcept {
  const auto colon = value.find(':');
  if (colon == std::string_view::npos || colon == 0 || !is_scheme_start(value[0])) return false;
  for (std::size_t i = 1; i < colon; ++i) {
    if (!is_scheme_char(value[i])) return false;
  }
  for (unsigned char c : value) {
    if (c <= 0x20 || c == 0x7f) return false;
    switch (c) {
      case '<': case '>': case '"': case '{': case '}':
      case '|': case '^': case '`': case '\\':
        return false;
      default:
        break;
    }
  }
  return true;
}

std::string percent_encode_segment(std::string_view segment) {
  static constexpr char kHex[] = "0123456789ABCDEF";
  std::string out;
  out.reserve(segment.size());
  for (unsigned char c : segment) {
    if (is_segment_safe(c)) {
      out.push_back(static_cast<char>(c));
    } else {
      out.push_back('%');
      out.push_back(kHex[c >> 4]);
      out.push_back(kHex[c & 0xf]);
    }
  }
  return out;
}

Literal Literal::plain(std::string lexical) {
  return Literal{std::move(lexical), std::nullopt, std::nullopt};
}

Literal Literal::typed(std::string lexical, Iri datatype) {
  return Literal{std::move(lexical), std::move(datatype), std::nullopt};
}

Literal Literal::tagged(std::string lexical, std::string language) {
  if (language.empty()) {
    throw Error(ErrorCode::kParseError, "empty language tag");
  }
  return Literal{std::move(lexical), std::nullopt, std::move(language)};
}

}  // namespace lodforge
