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

#include "lodforge/kv/wire.hpp"

#include <string>

#include "lodforge/core/error.hpp"

namespace lodforge::kv {

std::uint64_t read_varint(std::string_view data, std::size_t& pos) {
  std::uint64_t value = 0;
  for (std::size_t i = 0; i < kMaxVarintBytes; ++i) {
    if (pos >= data.size()) throw Error(ErrorCode::kTruncatedRecord, "varint runs past end of record");
    const auto byte = static_cast<std::uint8_t>(data[pos++]);
    if (i == kMaxVarintBytes - 1 && byte > 1) {
      throw Error(ErrorCode::kOverlongVarint, "varint overflows 64 bits");
    }
    value |= static_cast<std::uint64_t>(byte & 0x7f) << (7 * i);
    if ((byte & 0x80) == 0) return value;
  }
  throw Error(ErrorCode::kOverlongVarint, "varint longer than 10 bytes");
}

bool WireReader::next(WireField& field) {
  if (pos_ >= data_.size()) return false;
  const std::uint64_t header = read_varint(data_, pos_);
  const auto number = header >> 3;
  if (number == 0 || number > 0x1fffffff) {
    throw Error(ErrorCode::kTruncatedRecord, "invalid field number " + std::to_string(number));
  }
  field = WireField{};
  field.number = static_cast<std::uint32_t>(number);
  switch (header & 0x7) {
    case 0:
      field.type = WireType::kVarint;
      field.varint = read_varint(data_, pos_);
      return true;
    case 1:
    case 5: {
      const std::size_t width = (header & 0x7) == 1 ? 8 : 4;
      if (data_.size() - pos_ < width) throw Error(ErrorCode::kTruncatedRecord, "fixed-width field truncated");
      field.type = width == 8 ? WireType::kFixed64 : WireType::kFixed32;
      for (std::size_t i = 0; i < width; ++i) {
        field.varint |= static_cast<std::uint64_t>(static_cast<std::uint8_t>(data_[pos_ + i])) << (8 * i);
      }
      pos_ += width;
      return true;
    }
    case 2: {
      const std::uint64_t length = read_varint(data_, pos_);
      if (length > data_.size() - pos_) {
        throw Error(ErrorCode::kTruncatedRecord, "length-delimited payload runs past end of record");
      }
      field.type = WireType::kLengthDelimited;
      field.bytes = data_.substr(pos_, static_cast<std::size_t>(length));
      pos_ += static_cast<std::size_t>(length);
      return true;
    }
    default:
      throw Error(ErrorCode::kTruncatedRecord, "unsupported wire type " + std::to_string(header & 0x7));
  }
}

}  // namespace lodforge::kv
