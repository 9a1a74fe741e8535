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

#include <string>
#include <string_view>
#include <vector>

// Small string helpers shared by the line-oriented config parsers.
namespace lodforge {

std::string_view trim(std::string_view s) noexcept;

/// Splits on every occurrence of `sep`; keeps empty fields.
std::vector<std::string_view> split(std::string_view s, char sep);
std::vector<std::string_view> split(std::string_view s, std::string_view sep);

/// Splits on runs of spaces/tabs; drops empty fields.
std::vector<std::string_view> split_ws(std::string_view s);

/// True for empty, whitespace-only, or `#` comment lines (first non-blank
/// character is '#').
bool is_blank_or_comment(std::string_view line) noexcept;

/// Strips a trailing '\r' so CRLF config files read the same as LF ones.
void chomp_cr(std::string& line) noexcept;

}  // namespace lodforge
