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

#include "lodforge/kv/record.hpp"

#include "lodforge/kv/wire.hpp"

namespace lodforge::kv {

bool operator==(const DecodedRecord& a, const DecodedRecord& b) {
  if (a.fields.size() != b.fields.size()) return false;
  for (auto ia = a.fields.begin(), ib = b.fields.begin(); ia != a.fields.end(); ++ia, ++ib) {
    if (ia->first != ib->first || ia->second.size() != ib->second.size()) return false;
    for (std::size_t i = 0; i < ia->second.size(); ++i) {
      const auto& va = ia->second[i];
      const auto& vb = ib->second[i];
      if (va.index() != vb.index()) return false;
      if (const auto* ra = std::get_if<std::shared_ptr<const DecodedRecord>>(&va)) {
        if (!(**ra == *std::get<std::shared_ptr<const DecodedRecord>>(vb))) return false;
      } else if (va != vb) {
        return false;
      }
    }
  }
  return true;
}

DecodedRecord decode_record(std::string_view bytes, const MessageSchema& schema) {
  DecodedRecord record;
  WireReader reader(bytes);
  WireField wire;
  while (reader.next(wire)) {
    const FieldDef* def = schema.field(wire.number);
    const bool wants_varint = def != nullptr && def->kind == ValueKind::kInt;
    const bool type_ok = def != nullptr && (wants_varint ? wire.type == WireType::kVarint
                                                         : wire.type == WireType::kLengthDelimited);
    if (!type_ok) {
      ++record.unknown_fields;
      continue;
    }
    DecodedValue value;
    switch (def->kind) {
      case ValueKind::kString:
        value = std::string(wire.bytes);
        break;
      case ValueKind::kInt:
        value = static_cast<std::int64_t>(wire.varint);
        break;
      case ValueKind::kNested: {
        auto nested = std::make_shared<DecodedRecord>(decode_record(wire.bytes, *def->nested));
        record.unknown_fields += nested->unknown_fields;
        value = std::shared_ptr<const DecodedRecord>(std::move(nested));
        break;
      }
    }
    auto& slot = record.fields[def->name];
    if (!def->repeated) slot.clear();
    slot.push_back(std::move(value));
  }
  return record;
}

}  // namespace lodforge::kv
