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

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>

#include "lodforge/core/rdf.hpp"

namespace lodforge {

/// Appends the N-Triples form of `term` to `out`.
void append_term(std::string& out, const Term& term);
void append_iri(std::string& out, const Iri& iri);

/// Escapes a literal's lexical form: \" \\ \n \r \t, other C0 controls and
/// DEL as \u00XX. Bytes >= 0x80 pass through (UTF-8 is legal N-Triples).
void append_escaped_literal(std::string& out, std::string_view lexical);

/// One N-Triples statement without the trailing newline: `<s> <p> o .`
std::string to_ntriples(const Triple& triple);
void append_ntriples(std::string& out, const Triple& triple);

/// Parses one statement. Blank and comment lines are not accepted here; the
/// caller filters them. Throws Error{kParseError} mentioning `line_no`.
Triple parse_ntriples_line(std::string_view line, std::size_t line_no = 0);

/// Writes one line per triple. With `sorted`, buffers all lines, sorts them
/// bytewise and drops duplicates first. Returns the number of lines written.
/// Throws Error{kIoError} when the stream fails.
std::size_t serialize_ntriples(std::span<const Triple> triples, std::ostream& out,
                               bool sorted = false);

}  // namespace lodforge
