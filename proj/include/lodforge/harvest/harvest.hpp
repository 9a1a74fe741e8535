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

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

namespace lodforge::harvest {

inline constexpr std::string_view kOaiNamespace = "http://www.openarchives.org/OAI/2.0/";

/// Persisted after every page as key=value lines.
struct HarvestState {
  std::string endpoint;
  std::optional<std::string> resumption_token;
  std::uint64_t records_fetched = 0;
  std::uint64_t pages_fetched = 0;
  std::string last_response_hash;  // md5 hex of the last page body
  bool complete = false;

  friend bool operator==(const HarvestState&, const HarvestState&) = default;
};

/// Atomic (temp file + rename). Throws Error{kIoError}.
void write_state(const std::filesystem::path& path, const HarvestState& state);
/// nullopt if the file does not exist. Throws Error{kConfigError} if malformed.
std::optional<HarvestState> read_state(const std::filesystem::path& path);

/// One ListRecords response.
struct Page {
  std::size_t records = 0;
  std::optional<std::string> resumption_token;  // absent or empty element: last page
};

/// Throws Error{kProtocolError} (no ListRecords, malformed XML, protocol
/// error other than noRecordsMatch) or Error{kStaleToken} (badResumptionToken).
/// noRecordsMatch yields an empty final page.
Page parse_page(std::string_view body);

struct HarvestOptions {
  int max_attempts = 5;
  std::chrono::milliseconds base_delay{250};  // doubled after each failed attempt
  std::chrono::seconds timeout{30};
  std::string metadata_prefix = "oaf";
  /// Stop after this many pages in this call, leaving the state resumable.
  std::optional<std::size_t> max_pages;
};

struct HarvestResult {
  std::size_t pages = 0;    // fetched by this call
  std::size_t records = 0;  // fetched by this call
  bool complete = false;
};

/// Fetches ListRecords pages from `endpoint` (http://host[:port]/path) into
/// out_dir/page-NNNNN.xml, following resumption tokens. Resumes from
/// `state_file` when it exists; a completed state makes this a no-op.
/// Throws Error{kHttpError} after max_attempts, Error{kProtocolError},
/// Error{kStaleToken}, Error{kConfigError}, Error{kIoError}.
HarvestResult harvest(const std::string& endpoint, const std::filesystem::path& out_dir,
                      const std::filesystem::path& state_file, const HarvestOptions& options = {});

std::string page_file_name(std::uint64_t page_number);

}  // namespace lodforge::harvest
