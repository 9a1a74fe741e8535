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
#include <exception>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lodforge/core/run_stats.hpp"
#include "lodforge/core/sink.hpp"
#include "lodforge/xml/automaton.hpp"
#include "lodforge/xml/rules.hpp"

typedef struct XML_ParserStruct* XML_Parser;

namespace lodforge::xml {

/// Push-style streaming mapper over one XML document.
///
/// Keeps one stack of active automaton states per open element and one
/// stack of open scope frames. A matched value binds to the innermost open
/// frame of its rule's scope; when that frame's element closes, the subject
/// is resolved and the frame's triples are emitted. Retained data is
/// therefore bounded by the largest record, not the document.
class StreamMapper {
 public:
  StreamMapper(const FilterAutomaton& automaton, const LanguageMap& languages, TripleSink& sink,
               std::string source_name = "<xml>");
  ~StreamMapper();
  StreamMapper(const StreamMapper&) = delete;
  StreamMapper& operator=(const StreamMapper&) = delete;

  /// Throws Error{kMalformedXml} with line and column.
  void feed(std::string_view data, bool is_final);

  const RunStats& stats() const noexcept { return stats_; }

 private:
  struct Frame {
    std::uint32_t slot;
    std::size_t depth;
    std::vector<std::pair<std::uint32_t, std::string>> subjects;  // (source, value)
    std::vector<std::pair<std::uint32_t, std::string>> values;    // (rule, value)
  };
  struct Capture {
    std::size_t depth;
    std::vector<const Accept*> accepts;
    std::string text;
    bool seen = false;
  };

  static void on_start(void* self, const char* name, const char** attributes);
  static void on_end(void* self, const char* name);
  static void on_text(void* self, const char* text, int length);

  void start_element(std::string_view name, const char** attributes);
  void end_element();
  void bind(const Accept& accept, std::string value);
  void close_frame(Frame& frame);
  void retain(std::int64_t values, std::int64_t bytes);
  void fail(std::exception_ptr error);

  const FilterAutomaton& automaton_;
  const LanguageMap& languages_;
  TripleSink& sink_;
  std::string source_;
  XML_Parser parser_;
  RunStats stats_;

  std::vector<std::uint32_t> active_;
  std::vector<std::size_t> active_begin_;  // per depth
  std::vector<Frame> frames_;
  std::vector<std::vector<std::size_t>> open_by_slot_;
  std::vector<Capture> captures_;
  std::vector<std::pair<std::string_view, std::string_view>> attr_scratch_;
  std::size_t depth_ = 0;
  std::int64_t retained_values_ = 0;
  std::int64_t retained_bytes_ = 0;
  std::exception_ptr error_;
};

/// Maps a whole stream. Throws Error{kMalformedXml} or Error{kIoError}.
RunStats stream_map(std::istream& in, const FilterAutomaton& automaton, const LanguageMap& languages,
                    TripleSink& sink, const std::string& source_name = "<xml>");

/// `input` is a file or a directory of *.xml files (sorted by name). With
/// workers > 1 files are mapped concurrently and replayed in name order.
RunStats run_xml(const std::filesystem::path& input, const FilterAutomaton& automaton,
                 const LanguageMap& languages, int workers, TripleSink& sink);

}  // namespace lodforge::xml
