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
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace lodforge::kv {

/// Container magic: the first 8 bytes of every snapshot split.
inline constexpr std::string_view kSnapshotMagic = "KVSNAP01";

/// Non-owning views into a loaded snapshot split.
struct KvCell {
  std::string_view family;
  std::string_view qualifier;
  std::string_view value;
};

struct KvRow {
  std::string_view row_key;
  std::vector<KvCell> cells;
};

/// One snapshot split loaded into memory and indexed by row.
///
/// Layout: magic, then rows until end of file. Row = varint keyLen, key,
/// varint cellCount, cells; cell = varint-prefixed family, qualifier, value.
/// Rows never straddle split files.
class SnapshotSplit {
 public:
  /// Throws Error{kCorruptContainer} (bad magic, truncated row) or
  /// Error{kIoError}.
  static SnapshotSplit open(const std::filesystem::path& path);
  static SnapshotSplit from_bytes(std::string bytes, std::string name = "<memory>");

  std::size_t row_count() const noexcept { return offsets_.size(); }
  KvRow row(std::size_t index) const;
  std::size_t byte_size() const noexcept { return bytes_.size(); }
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
  std::string bytes_;
  std::vector<std::size_t> offsets_;
};

/// A file path is one split; a directory contributes every `*.kvsnap` file
/// in it, in filename order.
std::vector<std::filesystem::path> snapshot_split_paths(const std::filesystem::path& path);

}  // namespace lodforge::kv
