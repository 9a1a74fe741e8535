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
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "lodforge/kv/schema.hpp"

namespace lodforge::kv {

struct DecodedRecord;

using DecodedValue = std::variant<std::string, std::int64_t, std::shared_ptr<const DecodedRecord>>;

/// Field name -> values in wire order. Non-repeated fields hold one value
/// (the last occurrence wins, as in protobuf).
struct DecodedRecord {
  std::map<std::string, std::vector<DecodedValue>> fields;
  std::uint64_t unknown_fields = 0;  // includes nested records

  friend bool operator==(const DecodedRecord& a, const DecodedRecord& b);
};

/// Decodes one record under `schema`. Unknown field numbers (and fields
/// whose wire type disagrees with the schema) are skipped and counted.
/// Throws Error{kTruncatedRecord} or Error{kOverlongVarint}.
DecodedRecord decode_record(std::string_view bytes, const MessageSchema& schema);

}  // namespace lodforge::kv
