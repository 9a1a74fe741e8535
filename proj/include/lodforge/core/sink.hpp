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
#include <cstdio>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "lodforge/core/rdf.hpp"

namespace lodforge {

/// Receiver of an unbounded triple stream.
///
/// Duplicates may arrive; `deduplicates()` says whether the sink removes
/// them. Sinks are not thread-safe: parallel producers write into
/// per-worker buffers and replay them in a fixed order (see BufferSink and
/// SpoolSink), which keeps unsorted output deterministic as well.
class TripleSink {
 public:
  virtual ~TripleSink() = default;

  virtual void accept(const Triple& triple) = 0;

  /// Accepts one serialized N-Triples statement (no trailing newline).
  /// The default implementation parses it and forwards to accept().
  virtual void accept_line(std::string_view line);

  virtual void flush() {}
  virtual bool deduplicates() const noexcept { return false; }
};

/// Streams N-Triples to an ostream, LF line endings.
class NTriplesSink final : public TripleSink {
 public:
  explicit NTriplesSink(std::ostream& out);
  ~NTriplesSink() override;

  void accept(const Triple& triple) override;
  void accept_line(std::string_view line) override;
  void flush() override;

  std::size_t lines_written() const noexcept { return lines_; }

 private:
  void maybe_drain();

  std::ostream& out_;
  std::string buffer_;
  std::size_t lines_ = 0;
};

/// Buffers every statement; flush() sorts bytewise, drops duplicates and
/// writes. Used for golden files and cross-run comparisons.
class SortedNTriplesSink final : public TripleSink {
 public:
  explicit SortedNTriplesSink(std::ostream& out);

  void accept(const Triple& triple) override;
  void accept_line(std::string_view line) override;
  void flush() override;
  bool deduplicates() const noexcept override { return true; }

  std::size_t lines_written() const noexcept { return lines_; }

 private:
  std::ostream& out_;
  std::vector<std::string> lines_buffer_;
  std::size_t lines_ = 0;
};

/// Keeps parsed triples in memory. Test and small-input helper.
class CollectingSink final : public TripleSink {
 public:
  void accept(const Triple& triple) override { triples_.push_back(triple); }

  const std::vector<Triple>& triples() const noexcept { return triples_; }
  std::vector<Triple> take() { return std::move(triples_); }

 private:
  std::vector<Triple> triples_;
};

/// Collects serialized lines (sorted + deduplicated on request). Cheaper than
/// CollectingSink when the caller only compares text.
class LineCollectorSink final : public TripleSink {
 public:
  void accept(const Triple& triple) override;
  void accept_line(std::string_view line) override { lines_.emplace_back(line); }

  /// Sorts bytewise and removes duplicates in place.
  void normalize();
  const std::vector<std::string>& lines() const noexcept { return lines_; }

 private:
  std::vector<std::string> lines_;
};

/// Counts statements and drops them.
class CountingSink final : public TripleSink {
 public:
  void accept(const Triple&) override { ++count_; }
  void accept_line(std::string_view) override { ++count_; }
  std::size_t count() const noexcept { return count_; }

 private:
  std::size_t count_ = 0;
};

/// In-memory per-worker buffer of newline-terminated statements.
class BufferSink final : public TripleSink {
 public:
  void accept(const Triple& triple) override;
  void accept_line(std::string_view line) override;

  std::size_t size() const noexcept { return count_; }
  void clear() noexcept;

  /// Forwards every buffered statement, in insertion order.
  void replay_into(TripleSink& target) const;

 private:
  std::string data_;
  std::size_t count_ = 0;
};

/// Temporary-file backed per-worker buffer for outputs that must not be held
/// in memory (file-level parallelism over large inputs).
class SpoolSink final : public TripleSink {
 public:
  SpoolSink();
  ~SpoolSink() override;
  SpoolSink(const SpoolSink&) = delete;
  SpoolSink& operator=(const SpoolSink&) = delete;

  void accept(const Triple& triple) override;
  void accept_line(std::string_view line) override;

  std::size_t size() const noexcept { return count_; }

  /// Rewinds and forwards every spooled statement in insertion order.
  void replay_into(TripleSink& target);

 private:
  std::FILE* file_;
  std::string scratch_;
  std::size_t count_ = 0;
};

}  // namespace lodforge
