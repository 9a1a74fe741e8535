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

#include "lodforge/kv/mapper.hpp"

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <exception>
#include <optional>
#include <string>

#include "lodforge/core/error.hpp"
#include "lodforge/core/log.hpp"
#include "lodforge/kv/record.hpp"

namespace lodforge::kv {
namespace {

constexpr std::size_t kRowsPerBatch = 8192;

const Iri& rdf_type() {
  static const Iri kType{std::string(iri::kRdfType)};
  return kType;
}

std::string lexical_form(const DecodedValue& value) {
  if (const auto* s = std::get_if<std::string>(&value)) return *s;
  return std::to_string(std::get<std::int64_t>(value));
}

void emit_leaf(const Iri& subject, const FieldDef& def, const DecodedValue& value, TripleSink& sink,
               RowCounters& counters) {
  const AttributeMapping& mapping = *def.mapping;
  std::string lexical = lexical_form(value);
  if (!mapping.class_map.empty()) {
    for (const auto& [key, cls] : mapping.class_map) {
      if (key == lexical) {
        sink.accept(Triple{subject, rdf_type(), cls});
        ++counters.triples;
        return;
      }
    }
    log_warning("no class for " + def.name + "='" + lexical + "' on " + subject.str());
    ++counters.cells_skipped;
    return;
  }
  Literal literal{std::move(lexical), mapping.datatype, mapping.language};
  sink.accept(Triple{subject, mapping.predicate->iri, std::move(literal)});
  ++counters.triples;
}

void emit_record(const Iri& subject, const MessageSchema& schema, const DecodedRecord& record,
                 TripleSink& sink, RowCounters& counters) {
  for (const auto& [number, def] : schema.fields) {
    const auto it = record.fields.find(def.name);
    if (it == record.fields.end()) continue;
    for (const auto& value : it->second) {
      if (def.kind == ValueKind::kNested) {
        if (def.inline_nested) {
          emit_record(subject, *def.nested, *std::get<std::shared_ptr<const DecodedRecord>>(value), sink,
                      counters);
        }
      } else if (def.mapping) {
        emit_leaf(subject, def, value, sink, counters);
      }
    }
  }
}

void count_rankings(const DecodedRecord& record, RowCounters& counters) {
  if (const auto it = record.fields.find("ranking"); it != record.fields.end()) {
    counters.rankings += it->second.size();
  }
}

void map_link_cell(const Iri& subject, EntityKind subject_kind, const KvCell& cell,
                   const SchemaSet& schemas, TripleSink& sink, RowCounters& counters) {
  const LinkSpec* spec = schemas.link(cell.family);
  if (spec == nullptr || spec->subject_kind != subject_kind) {
    log_warning("unknown link family '" + std::string(cell.family) + "' on " + subject.str());
    ++counters.cells_skipped;
    return;
  }
  std::optional<EntityId> target;
  try {
    target = EntityId::parse(cell.qualifier);
  } catch (const Error& e) {
    log_warning(std::string(to_string(ErrorCode::kBadLinkQualifier)) + ": " + e.what());
    ++counters.cells_skipped;
    return;
  }
  if (target->kind() != spec->object_kind) {
    log_warning("BadLinkQualifier: " + std::string(cell.qualifier) + " is not a " +
                std::string(kind_name(spec->object_kind)));
    ++counters.cells_skipped;
    return;
  }
  sink.accept(Triple{subject, spec->predicate->iri, entity_uri(*target)});
  ++counters.triples;
  if (spec->payload != nullptr && !cell.value.empty()) {
    try {
      count_rankings(decode_record(cell.value, *spec->payload), counters);
    } catch (const Error& e) {
      log_warning("link payload on " + subject.str() + ": " + e.what());
    }
  }
}

template <typename RowVisitor>
void for_each_split(const std::filesystem::path& path, RowVisitor&& visit) {
  for (const auto& split_path : snapshot_split_paths(path)) {
    visit(SnapshotSplit::open(split_path));
  }
}

void map_row_counted(const KvRow& row, const SchemaSet& schemas, TripleSink& sink, RunStats& stats) {
  RowCounters counters;
  BufferSink staged;
  try {
    map_row_into(row, schemas, staged, counters);
  } catch (const Error& e) {
    ++stats.error_count;
    log_warning("row '" + std::string(row.row_key) + "' skipped: " + e.what());
    return;
  }
  staged.replay_into(sink);
  stats.triples_emitted += counters.triples;
  stats.cells_skipped += counters.cells_skipped;
  stats.unknown_fields += counters.unknown_fields;
  stats.rankings_decoded += counters.rankings;
  stats.warning_count += counters.cells_skipped;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

void map_row_into(const KvRow& row, const SchemaSet& schemas, TripleSink& sink, RowCounters& counters) {
  const EntityId id = EntityId::parse(row.row_key);
  const EntitySchema* entity = schemas.entity(id.kind());
  if (entity == nullptr) {
    throw Error(ErrorCode::kSchemaMissing, "no schema for kind " + std::string(kind_name(id.kind())));
  }
  const std::string_view body_family = kind_name(id.kind());
  const KvCell* body = nullptr;
  for (const auto& cell : row.cells) {
    if (cell.family == body_family && cell.qualifier == "body") {
      if (body != nullptr) throw Error(ErrorCode::kCorruptContainer, "row has two body cells");
      body = &cell;
    }
  }
  if (body == nullptr) throw Error(ErrorCode::kCorruptContainer, "row has no body cell");

  const Iri subject = entity_uri(id);
  const DecodedRecord record = decode_record(body->value, *entity->body);
  counters.unknown_fields += record.unknown_fields;

  for (const VocabTerm* cls : entity->classes) {
    sink.accept(Triple{subject, rdf_type(), cls->iri});
    ++counters.triples;
  }
  emit_record(subject, *entity->body, record, sink, counters);
  for (const auto& cell : row.cells) {
    if (&cell == body) continue;
    map_link_cell(subject, id.kind(), cell, schemas, sink, counters);
  }
}

std::vector<Triple> map_row(const KvRow& row, const SchemaSet& schemas) {
  CollectingSink sink;
  RowCounters counters;
  map_row_into(row, schemas, sink, counters);
  return sink.take();
}

RunStats run_snapshot(const std::filesystem::path& path, int workers, const SchemaSet& schemas,
                      TripleSink& sink) {
  if (workers < 1) throw Error(ErrorCode::kConfigError, "workers must be >= 1");
  const auto start = std::chrono::steady_clock::now();
  RunStats total;
  for_each_split(path, [&](const SnapshotSplit& split) {
    const std::size_t rows = split.row_count();
    total.records_read += rows;
    const std::size_t chunks_per_batch = static_cast<std::size_t>(workers) * 4;
    std::vector<BufferSink> buffers(chunks_per_batch);
    std::vector<RunStats> chunk_stats(chunks_per_batch);
    for (std::size_t batch_begin = 0; batch_begin < rows; batch_begin += kRowsPerBatch) {
      const std::size_t batch_end = std::min(rows, batch_begin + kRowsPerBatch);
      const std::size_t per_chunk = (batch_end - batch_begin + chunks_per_batch - 1) / chunks_per_batch;
      std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 1) num_threads(workers)
      for (std::size_t c = 0; c < chunks_per_batch; ++c) {
        const std::size_t lo = batch_begin + c * per_chunk;
        const std::size_t hi = std::min(batch_end, lo + per_chunk);
        try {
          for (std::size_t r = lo; r < hi; ++r) {
            map_row_counted(split.row(r), schemas, buffers[c], chunk_stats[c]);
          }
        } catch (...) {
#pragma omp critical(lodforge_kv_failure)
          if (!failure) failure = std::current_exception();
        }
      }
      if (failure) std::rethrow_exception(failure);
      for (std::size_t c = 0; c < chunks_per_batch; ++c) {
        buffers[c].replay_into(sink);
        buffers[c].clear();
        total += chunk_stats[c];
        chunk_stats[c] = RunStats{};
      }
    }
  });
  sink.flush();
  total.wall_seconds = seconds_since(start);
  return total;
}

RunStats run_snapshot_serial(const std::filesystem::path& path, const SchemaSet& schemas,
                             TripleSink& sink) {
  const auto start = std::chrono::steady_clock::now();
  RunStats total;
  for_each_split(path, [&](const SnapshotSplit& split) {
    total.records_read += split.row_count();
    for (std::size_t r = 0; r < split.row_count(); ++r) {
      map_row_counted(split.row(r), schemas, sink, total);
    }
  });
  sink.flush();
  total.wall_seconds = seconds_since(start);
  return total;
}

}  // namespace lodforge::kv
