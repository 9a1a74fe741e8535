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

#include "lodforge/kv/snapshot.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>

#include "lodforge/core/error.hpp"
#include "lodforge/kv/wire.hpp"

namespace lodforge::kv {
namespace {

std::string_view read_chunk(std::string_view data, std::size_t& pos) {
  const std::uint64_t len = read_varint(data, pos);
  if (len > data.size() - pos) throw Error(ErrorCode::kTruncatedRecord, "chunk runs past end");
  const auto out = data.substr(pos, static_cast<std::size_t>(len));
  pos += static_cast<std::size_t>(len);
  return out;
}

// Parses the row at `pos`, advancing it; returns the row.
KvRow parse_row(std::string_view data, std::size_t& pos) {
  KvRow row;
  row.row_key = read_chunk(data, pos);
  const std::uint64_t cells = read_varint(data, pos);
  // each cell needs at least three length bytes
  if (cells > (data.size() - pos) / 3) throw Error(ErrorCode::kTruncatedRecord, "cell count too large");
  row.cells.reserve(static_cast<std::size_t>(cells));
  for (std::uint64_t i = 0; i < cells; ++i) {
    KvCell cell;
    cell.family = read_chunk(data, pos);
    cell.qualifier = read_chunk(data, pos);
    cell.value = read_chunk(data, pos);
    row.cells.push_back(cell);
  }
  return row;
}

}  // namespace

SnapshotSplit SnapshotSplit::from_bytes(std::string bytes, std::string name) {
  SnapshotSplit split;
  split.name_ = std::move(name);
  split.bytes_ = std::move(bytes);
  const std::string_view data(split.bytes_);
  if (!data.starts_with(kSnapshotMagic)) {
    throw Error(ErrorCode::kCorruptContainer, split.name_ + ": bad magic");
  }
  std::size_t pos = kSnapshotMagic.size();
  while (pos < data.size()) {
    const std::size_t start = pos;
    try {
      parse_row(data, pos);
    } catch (const Error& e) {
      throw Error(ErrorCode::kCorruptContainer,
                  split.name_ + ": bad row at byte " + std::to_string(start) + " (" + e.what() + ")");
    }
    split.offsets_.push_back(start);
  }
  return split;
}

SnapshotSplit SnapshotSplit::open(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open snapshot " + path.string());
  std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw Error(ErrorCode::kIoError, "read failed: " + path.string());
  return from_bytes(std::move(bytes), path.string());
}

KvRow SnapshotSplit::row(std::size_t index) const {
  std::size_t pos = offsets_.at(index);
  return parse_row(bytes_, pos);
}

std::vector<std::filesystem::path> snapshot_split_paths(const std::filesystem::path& path) {
  std::error_code ec;
  if (!std::filesystem::is_directory(path, ec)) {
    if (!std::filesystem::exists(path, ec)) throw Error(ErrorCode::kIoError, "no such snapshot " + path.string());
    return {path};
  }
  std::vector<std::filesystem::path> out;
  for (const auto& entry : std::filesystem::directory_iterator(path)) {
    if (entry.is_regular_file() && entry.path().extension() == ".kvsnap") out.push_back(entry.path());
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace lodforge::kv
