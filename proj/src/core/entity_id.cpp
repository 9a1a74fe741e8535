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

#include "lodforge/core/entity_id.hpp"

#include <algorithm>
#include <cctype>

#include "lodforge/core/error.hpp"
#include "lodforge/core/rdf.hpp"

namespace lodforge {
namespace {

bool is_namespace_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
}

bool is_lower_hex(char c) { return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'f'); }

void validate_parts(std::string_view ns, std::string_view hash, std::string_view raw) {
  if (ns.size() != EntityId::kNamespaceLength ||
      !std::all_of(ns.begin(), ns.end(), is_namespace_char)) {
    throw Error(ErrorCode::kMalformedId, "bad namespace prefix in '" + std::string(raw) + "'");
  }
  if (hash.size() != EntityId::kHashLength ||
      !std::all_of(hash.begin(), hash.end(), is_lower_hex)) {
    throw Error(ErrorCode::kMalformedId, "bad md5 hash in '" + std::string(raw) + "'");
  }
}

}  // namespace

int type_code(EntityKind kind) noexcept {
  return (static_cast<int>(kind) + 1) * 10;
}

std::optional<EntityKind> kind_from_code(int code) noexcept {
  if (code % 10 != 0 || code < 10 || code > 50) return std::nullopt;
  return static_cast<EntityKind>(code / 10 - 1);
}

std::string_view kind_name(EntityKind kind) noexcept {
  switch (kind) {
    case EntityKind::kDatasource: return "datasource";
    case EntityKind::kOrganization: return "organization";
    case EntityKind::kPerson: return "person";
    case EntityKind::kProject: return "project";
    case EntityKind::kResult: return "result";
  }
  return "";
}

std::optional<EntityKind> kind_from_name(std::string_view name) noexcept {
  for (EntityKind kind : kAllEntityKinds) {
    if (kind_name(kind) == name) return kind;
  }
  return std::nullopt;
}

EntityId::EntityId(EntityKind kind, std::string namespace_prefix, std::string hash)
    : kind_(kind), namespace_prefix_(std::move(namespace_prefix)), hash_(std::move(hash)) {
  validate_parts(namespace_prefix_, hash_, namespace_prefix_ + "::" + hash_);
}

EntityId EntityId::parse(std::string_view raw) {
  // "NN|" + 12 + "::" + 32
  const auto bar = raw.find('|');
  if (bar != 2) {
    throw Error(ErrorCode::kMalformedId, "expected two-digit type prefix in '" + std::string(raw) + "'");
  }
  if (!std::isdigit(static_cast<unsigned char>(raw[0])) ||
      !std::isdigit(static_cast<unsigned char>(raw[1]))) {
    throw Error(ErrorCode::kMalformedId, "non-numeric type prefix in '" + std::string(raw) + "'");
  }
  const int code = (raw[0] - '0') * 10 + (raw[1] - '0');
  const auto kind = kind_from_code(code);
  if (!kind) {
    throw Error(ErrorCode::kUnknownTypePrefix, "type prefix " + std::string(raw.substr(0, 2)));
  }
  return parse_local(*kind, raw.substr(3));
}

EntityId EntityId::parse_local(EntityKind kind, std::string_view local) {
  const auto sep = local.find("::");
  if (sep == std::string_view::npos) {
    throw Error(ErrorCode::kMalformedId, "missing '::' in '" + std::string(local) + "'");
  }
  const auto ns = local.substr(0, sep);
  const auto hash = local.substr(sep + 2);
  validate_parts(ns, hash, local);
  return EntityId(kind, std::string(ns), std::string(hash));
}

std::string EntityId::local_part() const {
  std::string out;
  out.reserve(kNamespaceLength + 2 + kHashLength);
  out.append(namespace_prefix_).append("::").append(hash_);
  return out;
}

std::string EntityId::to_string() const {
  std::string out = std::to_string(type_code(kind_));
  out.push_back('|');
  out.append(local_part());
  return out;
}

Iri entity_uri(const EntityId& id) {
  std::string value(kDataNamespace);
  value.append(kind_name(id.kind()));
  value.push_back('/');
  value.append(percent_encode_segment(id.local_part()));
  return Iri(std::move(value));
}

}  // namespace lodforge
