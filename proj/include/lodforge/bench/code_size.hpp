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
#include <filesystem>
#include <span>
#include <string>
#include <string_view>

namespace lodforge::bench {

inline constexpr std::string_view kCompressorId = "xz-9e";

/// Drops full-line '#' comments and blank lines, then concatenates the files
/// in sorted filename order. Throws Error{kIoError}.
std::string normalized_mapping_source(std::span<const std::filesystem::path> files);

/// Length of the xz stream (preset 9, extreme) of `data`.
std::uint64_t compressed_size(std::string_view data);

/// compressed_size(normalized_mapping_source(files)).
std::uint64_t code_size(std::span<const std::filesystem::path> files);

}  // namespace lodforge::bench
