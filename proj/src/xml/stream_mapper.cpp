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

#include "lodforge/xml/stream_mapper.hpp"

#include <expat.h>
#include <omp.h>

#include <algorithm>
#include <chrono>
#include <cstring>
#include <fstream>
#include <istream>
#include <memory>

#include "lodforge/core/entity_id.hpp"
#include "lodforge/core/error.hpp"
#include "lodforge/core/log.hpp"

namespace lodforge::xml {

StreamMapper::StreamMapper(const FilterAutomaton& automaton, const LanguageMap& languages, TripleSink& sink,
                           std::string source_name)
    : automaton_(automaton),
      languages_(languages),
      sink_(sink),
      source_(std::move(source_name)),
      parser_(XML_ParserCreateNS(nullptr, kNamespaceSeparator)),
      open_by_slot_(automaton.scope_count()) {
  if (parser_ == nullptr) throw std::bad_alloc();
  XML_SetUserData(parser_, this);
  XML_SetElementHandler(parser_, &StreamMapper::on_start, &StreamMapper::on_end);
  XML_SetCharacterDataHandler(parser_, &StreamMapper::on_text);
}

StreamMapper::~StreamMapper() { XML_ParserFree(parser_); }

// Exceptions must not unwind through expat; park them and stop the parser.
void StreamMapper::fail(std::exception_ptr error) {
  if (!error_) error_ = std::move(error);
  XML_StopParser(parser_, XML_FALSE);
}

void StreamMapper::on_start(void* self, const char* name, const char** attributes) {
  auto* m = static_cast<StreamMapper*>(self);
  try {
    m->start_element(name, attributes);
  } catch (...) {
    m->fail(std::current_exception());
  }
}

void StreamMapper::on_end(void* self, const char*) {
  auto* m = static_cast<StreamMapper*>(self);
  try {
    m->end_element();
  } catch (...) {
    m->fail(std::current_exception());
  }
}

void StreamMapper::on_text(void* self, const char* text, int length) {
  auto* m = static_cast<StreamMapper*>(self);
  if (m->captures_.empty() || m->captures_.back().depth != m->depth_) return;
  auto& capture = m->captures_.back();
  capture.text.append(text, static_cast<std::size_t>(length));
  capture.seen = true;
  m->retain(0, length);
}

void StreamMapper::retain(std::int64_t values, std::int64_t bytes) {
  retained_values_ += values;
  retained_bytes_ += bytes;
  stats_.peak_retained_values = std::max<std::uint64_t>(stats_.peak_retained_values, retained_values_);
  stats_.peak_retained_bytes = std::max<std::uint64_t>(stats_.peak_retained_bytes, retained_bytes_);
}

void StreamMapper::start_element(std::string_view name, const char** attributes) {
  ++depth_;
  attr_scratch_.clear();
  for (const char** a = attributes; *a != nullptr; a += 2) attr_scratch_.emplace_back(a[0], a[1]);

  const std::size_t parent_begin = active_begin_.empty() ? 0 : active_begin_.back();
  const std::size_t parent_end = active_.size();
  active_begin_.push_back(parent_end);
  // advance() appends, so the parent set is read through indices.
  std::vector<std::uint32_t> parent(active_.begin() + static_cast<std::ptrdiff_t>(parent_begin),
                                    active_.begin() + static_cast<std::ptrdiff_t>(parent_end));
  automaton_.advance(parent, name, attr_scratch_, active_);

  const std::size_t begin = active_begin_.back();
  for (std::size_t i = begin; i < active_.size(); ++i) {
    const State& state = automaton_.state(active_[i]);
    if (state.scope_slot == kNoScope) continue;
    open_by_slot_[state.scope_slot].push_back(frames_.size());
    frames_.push_back(Frame{state.scope_slot, depth_, {}, {}});
  }

  Capture* capture = nullptr;
  for (std::size_t i = begin; i < active_.size(); ++i) {
    for (const Accept& accept : automaton_.state(active_[i]).accepts) {
      switch (accept.terminal) {
        case Terminal::kElement:
          bind(accept, std::string());
          break;
        case Terminal::kAttribute:
          if (const auto value = find_attribute(attr_scratch_, accept.attribute)) bind(accept, std::string(*value));
          break;
        case Terminal::kText:
          if (capture == nullptr) {
            captures_.push_back(Capture{depth_, {}, {}, false});
            capture = &captures_.back();
          }
          capture->accepts.push_back(&accept);
          break;
      }
    }
  }
}

void StreamMapper::bind(const Accept& accept, std::string value) {
  auto& open = open_by_slot_[accept.scope_slot];
  if (open.empty()) return;  // unreachable: the scope state precedes its accepts
  Frame& frame = frames_[open.back()];
  retain(1, static_cast<std::int64_t>(value.size()));
  if (accept.role == Role::kSubject) {
    frame.subjects.emplace_back(accept.index, std::move(value));
  } else {
    frame.values.emplace_back(accept.index, std::move(value));
  }
}

void StreamMapper::end_element() {
  if (!captures_.empty() && captures_.back().depth == depth_) {
    Capture capture = std::move(captures_.back());
    captures_.pop_back();
    retain(0, -static_cast<std::int64_t>(capture.text.size()));
    if (capture.seen) {
      for (const Accept* accept : capture.accepts) bind(*accept, capture.text);
    }
  }
  while (!frames_.empty() && frames_.back().depth == depth_) {
    Frame frame = std::move(frames_.back());
    frames_.pop_back();
    open_by_slot_[frame.slot].pop_back();
    close_frame(frame);
  }
  active_.resize(active_begin_.back());
  active_begin_.pop_back();
  --depth_;
}

void StreamMapper::close_frame(Frame& frame) {
  std::int64_t bytes = 0;
  for (const auto& [_, v] : frame.subjects) bytes += static_cast<std::int64_t>(v.size());
  for (const auto& [_, v] : frame.values) bytes += static_cast<std::int64_t>(v.size());
  retain(-static_cast<std::int64_t>(frame.subjects.size() + frame.values.size()), -bytes);
  ++stats_.records_read;
  if (frame.values.empty()) return;

  const auto line = XML_GetCurrentLineNumber(parser_);
  auto where = [&] { return source_ + ":" + std::to_string(line) + ": "; };

  // One subject IRI per subject source used in this frame.
  std::vector<std::pair<std::uint32_t, Iri>> subjects;
  for (const auto& [rule_index, _] : frame.values) {
    const std::uint32_t source = automaton_.subject_source_of(rule_index);
    if (std::any_of(subjects.begin(), subjects.end(), [&](const auto& s) { return s.first == source; })) continue;
    const auto found = std::find_if(frame.subjects.begin(), frame.subjects.end(),
                                    [&](const auto& s) { return s.first == source; });
    try {
      if (found == frame.subjects.end()) {
        throw Error(ErrorCode::kSubjectUnresolved,
                    "record closed with values but no subject for '" +
                        automaton_.subject_source_rule(source).subject.path.source + "'");
      }
      const EntityId id = EntityId::parse(found->second);
      const EntityKind expected = automaton_.subject_source_rule(source).subject.kind;
      if (id.kind() != expected) {
        throw Error(ErrorCode::kSubjectUnresolved, "subject " + found->second + " is not a " +
                                                       std::string(kind_name(expected)));
      }
      subjects.emplace_back(source, entity_uri(id));
    } catch (const Error& e) {
      ++stats_.error_count;
      log_warning(where() + e.what());
      return;
    }
  }

  BufferSink staged;
  std::uint64_t emitted = 0;
  std::uint64_t warnings = 0;
  try {
    for (const auto& [rule_index, value] : frame.values) {
      const XmlRule& rule = automaton_.rules()[rule_index];
      const std::uint32_t source = automaton_.subject_source_of(rule_index);
      const Iri& subject =
          std::find_if(subjects.begin(), subjects.end(), [&](const auto& s) { return s.first == source; })->second;
      const ObjectForm& form = rule.object_form;
      Term object = Literal::plain(value);
      switch (form.kind) {
        case ObjectForm::Kind::kLiteral:
          if (form.datatype) {
            object = Literal::typed(value, *form.datatype);
          } else if (form.language) {
            object = Literal::tagged(value, *form.language);
          }
          break;
        case ObjectForm::Kind::kLangCode:
          if (const auto two = languages_.to_two_letter(value)) {
            object = Literal::plain(std::string(*two));
          } else {
            ++warnings;
            log_warning(where() + "unmapped language code '" + value + "' passed through");
          }
          break;
        case ObjectForm::Kind::kEntityRef: {
          const EntityId target = value.find('|') == std::string::npos
                                      ? EntityId::parse_local(form.entity_kind, value)
                                      : EntityId::parse(value);
          if (target.kind() != form.entity_kind) {
            throw Error(ErrorCode::kMalformedId, "reference " + value + " is not a " +
                                                     std::string(kind_name(form.entity_kind)));
          }
          object = entity_uri(target);
          break;
        }
        case ObjectForm::Kind::kConstIri:
          object = *form.constant;
          break;
      }
      staged.accept(Triple{subject, rule.predicate->iri, std::move(object)});
      ++emitted;
    }
  } catch (const Error& e) {
    ++stats_.error_count;
    log_warning(where() + e.what());
    return;
  }
  staged.replay_into(sink_);
  stats_.triples_emitted += emitted;
  stats_.warning_count += warnings;
}

void StreamMapper::feed(std::string_view data, bool is_final) {
  const auto status = XML_Parse(parser_, data.data(), static_cast<int>(data.size()), is_final ? 1 : 0);
  if (error_) std::rethrow_exception(error_);
  if (status == XML_STATUS_ERROR) {
    throw Error(ErrorCode::kMalformedXml, source_ + ":" + std::to_string(XML_GetCurrentLineNumber(parser_)) + ":" +
                                              std::to_string(XML_GetCurrentColumnNumber(parser_)) + ": " +
                                              XML_ErrorString(XML_GetErrorCode(parser_)));
  }
}

RunStats stream_map(std::istream& in, const FilterAutomaton& automaton, const LanguageMap& languages,
                    TripleSink& sink, const std::string& source_name) {
  StreamMapper mapper(automaton, languages, sink, source_name);
  std::string buffer(1 << 16, '\0');
  while (in) {
    in.read(buffer.data(), static_cast<std::streamsize>(buffer.size()));
    const auto got = static_cast<std::size_t>(in.gcount());
    if (got == 0) break;
    mapper.feed(std::string_view(buffer.data(), got), false);
  }
  if (in.bad()) throw Error(ErrorCode::kIoError, "read failed on " + source_name);
  mapper.feed({}, true);
  return mapper.stats();
}

RunStats run_xml(const std::filesystem::path& input, const FilterAutomaton& automaton,
                 const LanguageMap& languages, int workers, TripleSink& sink) {
  if (workers < 1) throw Error(ErrorCode::kConfigError, "workers must be >= 1");
  const auto start = std::chrono::steady_clock::now();
  std::vector<std::filesystem::path> files;
  if (std::filesystem::is_directory(input)) {
    for (const auto& entry : std::filesystem::directory_iterator(input)) {
      if (entry.is_regular_file() && entry.path().extension() == ".xml") files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
  } else if (std::filesystem::is_regular_file(input)) {
    files.push_back(input);
  } else {
    throw Error(ErrorCode::kIoError, "no such file or directory: " + input.string());
  }

  auto run_file = [&](const std::filesystem::path& path, TripleSink& out) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path.string());
    return stream_map(in, automaton, languages, out, path.filename().string());
  };

  RunStats total;
  if (workers == 1 || files.size() <= 1) {
    for (const auto& f : files) total += run_file(f, sink);
  } else {
    std::vector<std::unique_ptr<SpoolSink>> spools(files.size());
    std::vector<RunStats> stats(files.size());
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 1) num_threads(workers)
    for (std::size_t i = 0; i < files.size(); ++i) {
      try {
        spools[i] = std::make_unique<SpoolSink>();
        stats[i] = run_file(files[i], *spools[i]);
      } catch (...) {
#pragma omp critical(lodforge_xml_failure)
        if (!failure) failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);
    for (std::size_t i = 0; i < files.size(); ++i) {
      spools[i]->replay_into(sink);
      total += stats[i];
    }
  }
  sink.flush();
  total.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return total;
}

}  // namespace lodforge::xml
