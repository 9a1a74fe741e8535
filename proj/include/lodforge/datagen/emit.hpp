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
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <string_view>

#include "lodforge/datagen/model.hpp"

namespace lodforge::datagen {

/// Minimal field-tagged wire encoder (varint and length-delimited fields).
/// Kept separate from the decoder in the kv module on purpose.
class WireWriter {
 public:
  void varint_field(std::uint32_t number, std::uint64_t value);
  void bytes_field(std::uint32_t number, std::string_view bytes);
  const std::string& bytes() const noexcept { return out_; }

  static void append_varint(std::string& out, std::uint64_t value);

 private:
  std::string out_;
};

/// Body cell value: Kind{metadata = 2: Kind.Metadata{...}} plus occasional
/// fields the shipped schema does not know (forward compatibility).
std::string encode_body(const Entity& entity);
/// AuthorRel{ranking = 1}.
std::string encode_ranking(std::int64_t ranking);

/// Links whose subject is `id`; `graph.links` must be sorted.
std::span<const Link> outgoing_links(const EntityGraph& graph, const EntityId& id);

/// One serialized snapshot row (key, cells sorted by family and qualifier).
std::string encode_row(const Entity& entity, std::span<const Link> outgoing);

/// One `<oaf:{kind} objIdentifier="...">` element, newline-terminated.
void append_xml_record(std::string& out, const EntityGraph& graph, const Entity& entity);

/// Opening and closing lines of a generated XML file.
std::string_view xml_file_header();
std::string_view xml_file_footer();

struct EmitOptions {
  std::size_t rows_per_split = 4096;
  std::size_t records_per_xml_file = 2000;
  /// Writes the whole record sequence this many times (memory tests).
  std::size_t xml_repeat = 1;
  /// Appends an extra cell to the first result.csv record.
  bool inject_csv_fault = false;
  bool with_fixture = true;
  bool with_snapshot = true;
  bool with_csv = true;
  bool with_xml = true;
};

struct Manifest {
  std::uint64_t seed = 0;
  std::map<std::string, std::size_t> entity_counts;  // kind name -> count
  std::size_t row_count = 0;
  std::size_t snapshot_splits = 0;
  std::map<std::string, std::size_t> csv_record_counts;  // table -> records
  std::size_t xml_record_count = 0;
  std::size_t xml_files = 0;
  std::size_t xml_repeat = 1;
  std::size_t oracle_triples = 0;

  std::size_t csv_records() const;
};

void write_manifest(std::ostream& out, const Manifest& manifest);
Manifest read_manifest(std::istream& in);

std::size_t write_snapshot(const EntityGraph& graph, const std::filesystem::path& dir, std::size_t rows_per_split);
std::map<std::string, std::size_t> write_csv(const EntityGraph& graph, const std::filesystem::path& dir,
                                             bool inject_fault = false);
/// Returns the number of files written.
std::size_t write_xml(const EntityGraph& graph, const std::filesystem::path& dir, std::size_t per_file,
                      std::size_t repeat = 1);

/// Writes snapshot/, csv/, xml/, oracle.nt, manifest.txt and (optionally)
/// fixture/ under `out_dir`. Throws Error{kIoError}.
Manifest emit_all(const EntityGraph& graph, std::uint64_t seed, const std::filesystem::path& out_dir,
                  const EmitOptions& options = {});

/// The running example in all three formats plus expected.nt.
void emit_fixture(const std::filesystem::path& dir);

/// CSV table names in emission order.
std::span<const std::string_view> csv_table_names();

}  // namespace lodforge::datagen
