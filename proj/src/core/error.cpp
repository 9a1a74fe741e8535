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

#include "lodforge/core/error.hpp"

namespace lodforge {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kUnknownTypePrefix: return "UnknownTypePrefix";
    case ErrorCode::kMalformedId: return "MalformedId";
    case ErrorCode::kInvalidIri: return "InvalidIri";
    case ErrorCode::kUnknownTerm: return "UnknownTerm";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kTruncatedRecord: return "TruncatedRecord";
    case ErrorCode::kOverlongVarint: return "OverlongVarint";
    case ErrorCode::kSchemaMissing: return "SchemaMissing";
    case ErrorCode::kBadLinkQualifier: return "BadLinkQualifier";
    case ErrorCode::kCorruptContainer: return "CorruptContainer";
    case ErrorCode::kUnbalancedHashes: return "UnbalancedHashes";
    case ErrorCode::kColumnCountMismatch: return "ColumnCountMismatch";
    case ErrorCode::kBadIdCell: return "BadIdCell";
    case ErrorCode::kBadCell: return "BadCell";
    case ErrorCode::kMissingTemplate: return "MissingTemplate";
    case ErrorCode::kInvalidPath: return "InvalidPath";
    case ErrorCode::kDuplicateRuleId: return "DuplicateRuleId";
    case ErrorCode::kMalformedXml: return "MalformedXml";
    case ErrorCode::kSubjectUnresolved: return "SubjectUnresolved";
    case ErrorCode::kPipelineFailed: return "PipelineFailed";
    case ErrorCode::kHttpError: return "HttpError";
    case ErrorCode::kProtocolError: return "ProtocolError";
    case ErrorCode::kStaleToken: return "StaleToken";
    case ErrorCode::kConfigError: return "ConfigError";
    case ErrorCode::kIoError: return "IoError";
  }
  return "Unknown";
}

ErrorClass classify(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kConfigError:
    case ErrorCode::kUnknownTerm:
    case ErrorCode::kInvalidPath:
    case ErrorCode::kDuplicateRuleId:
    case ErrorCode::kSchemaMissing:
    case ErrorCode::kMissingTemplate:
      return ErrorClass::kUsage;
    case ErrorCode::kIoError:
    case ErrorCode::kHttpError:
      return ErrorClass::kIo;
    default:
      return ErrorClass::kData;
  }
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code) {}

}  // namespace lodforge
