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

#include <iosfwd>
#include <span>

#include "lodforge/core/rdf.hpp"

namespace lodforge {

/// Minimal Turtle rendering: triples grouped by subject and predicate with
/// ';' and ',' separators, IRIs compacted against the standard prefix table
/// when the local part is a plain name. Output is sorted and deduplicated.
/// Not a general Turtle writer.
void write_turtle(std::span<const Triple> triples, std::ostream& out);

}  // namespace lodforge
