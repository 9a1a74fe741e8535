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

#include "lodforge/bench/code_size.hpp"

#include <lzma.h>

#include <algorithm>
#include <fstream>
#include <vector>

#include "lodforge/core/error.hpp"
#include "lodforge/core/text.hpp"

namespace lodforge::bench {

std::string normalized_mapping_source(std::span<const std::filesystem::path> files) {
  std::vector<std::filesystem::path> sorted(files.begin(), files.end());
  std::sort(sorted.begin(), sorted.end(),
            [](const auto& a, const auto& b) { return a.filename() < b.filename(); });
  std::string out;
  for (const auto& path : sorted) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path.string());
    std::string line;
    while (std::getline(in, line)) {
      chomp_cr(line);
      if (is_blank_or_comment(line)) continue;
      out += line;
      out.push_back('\n');
    }
    if (in.bad()) throw Error(ErrorCode::kIoError, "read failed: " + path.string());
  }
  return out;
}

std::uint64_t compressed_size(std::string_view data) {
  std::vector<std::uint8_t> buf(lzma_stream_buffer_bound(data.size()));
  std::size_t out_pos = 0;
  const lzma_ret rc =
      lzma_easy_buffer_encode(9 | LZMA_PRESET_EXTREME, LZMA_CHECK_CRC64, nullptr,
                              reinterpret_cast<const std::uint8_t*>(data.data()), data.size(), buf.data(), &out_pos,
                              buf.size());
  if (rc != LZMA_OK) throw Error(ErrorCode::kIoError, "xz encoder failed (" + std::to_string(rc) + ")");
  return out_pos;
}

std::uint64_t code_size(std::span<const std::filesystem::path> files) {
  return compressed_size(normalized_mapping_source(files));
}

}  // namespace lodforge::bench
