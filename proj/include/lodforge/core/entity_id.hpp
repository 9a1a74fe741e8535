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

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace lodforge {

class Iri;

/// The five main entity types. Each maps to a two-digit type prefix code.
enum class EntityKind : std::uint8_t {
  kDatasource,
  kOrganization,
  kPerson,
  kProject,
  kResult,
};

inline constexpr std::array<EntityKind, 5> kAllEntityKinds = {
    EntityKind::kDatasource, EntityKind::kOrganization, EntityKind::kPerson,
    EntityKind::kProject, EntityKind::kResult};

/// 10, 20, 30, 40 or 50.
int type_code(EntityKind kind) noexcept;
std::optional<EntityKind> kind_from_code(int code) noexcept;

/// Lowercase name used in URIs, column families and CSV table names.
std::string_view kind_name(EntityKind kind) noexcept;
std::optional<EntityKind> kind_from_name(std::string_view name) noexcept;

/// Typed entity identifier, textual form "{code}|{namespacePrefix}::{hash}".
///
/// The namespace prefix is exactly 12 characters from [a-z0-9_]; the hash is
/// exactly 32 lowercase hex digits. Uppercase hex is rejected.
class EntityId {
 public:
  static constexpr std::size_t kNamespaceLength = 12;
  static constexpr std::size_t kHashLength = 32;

  EntityId(EntityKind kind, std::string namespace_prefix, std::string hash);

  /// Throws Error{kUnknownTypePrefix} or Error{kMalformedId}.
  static EntityId parse(std::string_view raw);

  /// Parses the prefix-less "{namespacePrefix}::{hash}" form used by CSV
  /// exports, injecting the type code for `kind`.
  static EntityId parse_local(EntityKind kind, std::string_view local);

  EntityKind kind() const noexcept { return kind_; }
  const std::string& namespace_prefix() const noexcept { return namespace_prefix_; }
  const std::string& hash() const noexcept { return hash_; }

  /// "{namespacePrefix}::{hash}"
  std::string local_part() const;
  std::string to_string() const;

  friend auto operator<=>(const EntityId&, const EntityId&) = default;

 private:
  EntityKind kind_;
  std::string namespace_prefix_;
  std::string hash_;
};

inline constexpr std::string_view kDataNamespace = "http://lod.openaire.eu/data/";

/// http://lod.openaire.eu/data/{kindName}/{namespacePrefix}::{hash}
Iri entity_uri(const EntityId& id);

}  // namespace lodforge
