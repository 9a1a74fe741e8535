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

#include <stdexcept>
#include <string>
#include <string_view>

namespace lodforge {

enum class ErrorCode {
  // core-model
  kUnknownTypePrefix,
  kMalformedId,
  kInvalidIri,
  kUnknownTerm,
  kParseError,
  // kv-mapper
  kTruncatedRecord,
  kOverlongVarint,
  kSchemaMissing,
  kBadLinkQualifier,
  kCorruptContainer,
  // csv-mapper
  kUnbalancedHashes,
  kColumnCountMismatch,
  kBadIdCell,
  kBadCell,
  kMissingTemplate,
  // xml-mapper
  kInvalidPath,
  kDuplicateRuleId,
  kMalformedXml,
  kSubjectUnresolved,
  // bench / harvest
  kPipelineFailed,
  kHttpError,
  kProtocolError,
  kStaleToken,
  // shared
  kConfigError,
  kIoError,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Coarse grouping used to derive process exit codes.
enum class ErrorClass { kUsage, kData, kIo };

ErrorClass classify(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace lodforge
