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

#include "lodforge/core/sink.hpp"

#include <algorithm>
#include <ostream>

#include "lodforge/core/error.hpp"
#include "lodforge/core/ntriples.hpp"

namespace lodforge {
namespace {

constexpr std::size_t kDrainThreshold = 1 << 16;

}  // namespace

void TripleSink::accept_line(std::string_view line) { accept(parse_ntriples_line(line)); }

NTriplesSink::NTriplesSink(std::ostream& out) : out_(out) { buffer_.reserve(kDrainThreshold * 2); }

NTriplesSink::~NTriplesSink() {
  if (!buffer_.empty()) {
    out_.write(buffer_.data(), static_cast<std::streamsize>(buffer_.size()));
  }
}

void NTriplesSink::accept(const Triple& triple) {
  append_ntriples(buffer_, triple);
  buffer_.push_back('\n');
  ++lines_;
  maybe_drain();
}

void NTriplesSink::accept_line(std::string_view line) {
  buffer_.append(line);
  buffer_.push_back('\n');
  ++lines_;
  maybe_drain();
}

void NTriplesSink::maybe_drain() {
  if (buffer_.size() < kDrainThreshold) return;
  out_.write(buffer_.data(), static_cast<std::streamsize>(buffer_.size()));
  buffer_.clear();
  if (!out_) throw Error(ErrorCode::kIoError, "failed writing N-Triples output");
}

void NTriplesSink::flush() {
  out_.write(buffer_.data(), static_cast<std::streamsize>(buffer_.size()));
  buffer_.clear();
  out_.flush();
  if (!out_) throw Error(ErrorCode::kIoError, "failed writing N-Triples output");
}

SortedNTriplesSink::SortedNTriplesSink(std::ostream& out) : out_(out) {}

void SortedNTriplesSink::accept(const Triple& triple) { lines_buffer_.push_back(to_ntriples(triple)); }

void SortedNTriplesSink::accept_line(std::string_view line) { lines_buffer_.emplace_back(line); }

void SortedNTriplesSink::flush() {
  std::sort(lines_buffer_.begin(), lines_buffer_.end());
  lines_buffer_.erase(std::unique(lines_buffer_.begin(), lines_buffer_.end()), lines_buffer_.end());
  std::string chunk;
  for (const auto& line : lines_buffer_) {
    chunk.append(line);
    chunk.push_back('\n');
    if (chunk.size() >= kDrainThreshold) {
      out_.write(chunk.data(), static_cast<std::streamsize>(chunk.size()));
      chunk.clear();
    }
  }
  out_.write(chunk.data(), static_cast<std::streamsize>(chunk.size()));
  lines_ += lines_buffer_.size();
  lines_buffer_.clear();
  lines_buffer_.shrink_to_fit();
  out_.flush();
  if (!out_) throw Error(ErrorCode::kIoError, "failed writing N-Triples output");
}

void LineCollectorSink::accept(const Triple& triple) { lines_.push_back(to_ntriples(triple)); }

void LineCollectorSink::normalize() {
  std::sort(lines_.begin(), lines_.end());
  lines_.erase(std::unique(lines_.begin(), lines_.end()), lines_.end());
}

void BufferSink::accept(const Triple& triple) {
  append_ntriples(data_, triple);
  data_.push_back('\n');
  ++count_;
}

void BufferSink::accept_line(std::string_view line) {
  data_.append(line);
  data_.push_back('\n');
  ++count_;
}

void BufferSink::clear() noexcept {
  data_.clear();
  count_ = 0;
}

void BufferSink::replay_into(TripleSink& target) const {
  std::string_view rest(data_);
  while (!rest.empty()) {
    const auto nl = rest.find('\n');
    target.accept_line(rest.substr(0, nl));
    rest.remove_prefix(nl + 1);
  }
}

SpoolSink::SpoolSink() : file_(std::tmpfile()) {
  if (file_ == nullptr) throw Error(ErrorCode::kIoError, "cannot create spool file");
}

SpoolSink::~SpoolSink() { std::fclose(file_); }

void SpoolSink::accept(const Triple& triple) {
  scratch_.clear();
  append_ntriples(scratch_, triple);
  accept_line(scratch_);
}

void SpoolSink::accept_line(std::string_view line) {
  if (std::fwrite(line.data(), 1, line.size(), file_) != line.size() || std::fputc('\n', file_) == EOF) {
    throw Error(ErrorCode::kIoError, "spool write failed");
  }
  ++count_;
}

void SpoolSink::replay_into(TripleSink& target) {
  std::fflush(file_);
  std::rewind(file_);
  std::string line;
  char buf[1 << 15];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, file_)) > 0) {
    std::string_view chunk(buf, n);
    while (!chunk.empty()) {
      const auto nl = chunk.find('\n');
      if (nl == std::string_view::npos) {
        line.append(chunk);
        break;
      }
      line.append(chunk.substr(0, nl));
      target.accept_line(line);
      line.clear();
      chunk.remove_prefix(nl + 1);
    }
  }
  if (std::ferror(file_)) throw Error(ErrorCode::kIoError, "spool read failed");
}

}  // namespace lodforge
