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
#include <cstdint>
#include <string_view>

namespace lodforge::kv {

enum class WireType : std::uint8_t {
  kVarint = 0,
  kFixed64 = 1,
  kLengthDelimited = 2,
  kFixed32 = 5,
};

inline constexpr std::size_t kMaxVarintBytes = 10;

/// Reads a base-128 varint starting at `pos` and advances `pos`.
/// Throws Error{kTruncatedRecord} at end of input and Error{kOverlongVarint}
/// past ten bytes or on 64-bit overflow.
std::uint64_t read_varint(std::string_view data, std::size_t& pos);

struct WireField {
  std::uint32_t number = 0;
  WireType type = WireType::kVarint;
  std::uint64_t varint = 0;     // kVarint, kFixed32, kFixed64
  std::string_view bytes;       // kLengthDelimited
};

/// Sequential reader over one encoded record. Fixed-width types are accepted
/// so that unknown fields of those types can be skipped.
class WireReader {
 public:
  explicit WireReader(std::string_view data) noexcept : data_(data) {}

  /// Returns false at a clean end of record.
  bool next(WireField& field);

 private:
  std::string_view data_;
  std::size_t pos_ = 0;
};

}  // namespace lodforge::kv
