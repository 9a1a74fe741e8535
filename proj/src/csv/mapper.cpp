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

#include "lodforge/csv/mapper.hpp"

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <exception>
#include <fstream>
#include <memory>
#include <vector>

#include "lodforge/core/error.hpp"
#include "lodforge/core/log.hpp"
#include "lodforge/csv/dialect.hpp"

namespace lodforge::csv {

RunStats run_table(std::istream& in, const CsvTableSpec& spec, const RowTemplate& tmpl, TripleSink& sink) {
  RunStats stats;
  auto& table = stats.tables[spec.table_name];
  RecordReader reader(in, spec.columns.size());
  std::string record;
  std::size_t line = 0;
  BufferSink staged;
  while (reader.next(record, line)) {
    ++stats.records_read;
    ++table.records;
    stats.peak_retained_bytes = std::max<std::uint64_t>(stats.peak_retained_bytes, record.size());
    staged.clear();
    std::uint64_t emitted = 0;
    try {
      const CsvRow row = parse_row(record, spec);
      stats.peak_retained_values = std::max<std::uint64_t>(stats.peak_retained_values, row.cells.size());
      instantiate_into(tmpl, spec, row, staged, emitted);
    } catch (const Error& e) {
      ++stats.error_count;
      ++table.errors;
      log_warning(spec.table_name + ".csv:" + std::to_string(line) + ": " + e.what());
      continue;
    }
    staged.replay_into(sink);
    stats.triples_emitted += emitted;
    table.triples += emitted;
  }
  if (in.bad()) throw Error(ErrorCode::kIoError, "read failed on table " + spec.table_name);
  return stats;
}

RunStats run_tables(const std::filesystem::path& dir, const CsvSpecSet& specs, const TemplateSet& templates,
                    int workers, TripleSink& sink) {
  if (workers < 1) throw Error(ErrorCode::kConfigError, "workers must be >= 1");
  const auto start = std::chrono::steady_clock::now();
  if (!std::filesystem::is_directory(dir)) throw Error(ErrorCode::kIoError, "not a directory: " + dir.string());

  struct Job {
    std::filesystem::path path;
    const CsvTableSpec* spec;
    const RowTemplate* tmpl;
  };
  std::vector<Job> jobs;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (!entry.is_regular_file() || entry.path().extension() != ".csv") continue;
    const std::string table = entry.path().stem().string();
    const auto* spec = specs.find(table);
    const auto* tmpl = templates.find(table);
    if (spec == nullptr || tmpl == nullptr) {
      throw Error(ErrorCode::kMissingTemplate, "no spec/template for " + entry.path().filename().string());
    }
    jobs.push_back({entry.path(), spec, tmpl});
  }
  std::sort(jobs.begin(), jobs.end(), [](const Job& a, const Job& b) { return a.path < b.path; });

  auto run_job = [](const Job& job, TripleSink& out) {
    std::ifstream in(job.path, std::ios::binary);
    if (!in) throw Error(ErrorCode::kIoError, "cannot open " + job.path.string());
    return run_table(in, *job.spec, *job.tmpl, out);
  };

  RunStats total;
  if (workers == 1 || jobs.size() <= 1) {
    for (const auto& job : jobs) total += run_job(job, sink);
  } else {
    std::vector<std::unique_ptr<SpoolSink>> spools(jobs.size());
    std::vector<RunStats> stats(jobs.size());
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 1) num_threads(workers)
    for (std::size_t i = 0; i < jobs.size(); ++i) {
      try {
        spools[i] = std::make_unique<SpoolSink>();
        stats[i] = run_job(jobs[i], *spools[i]);
      } catch (...) {
#pragma omp critical(lodforge_csv_failure)
        if (!failure) failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);
    for (std::size_t i = 0; i < jobs.size(); ++i) {
      spools[i]->replay_into(sink);
      total += stats[i];
    }
  }
  sink.flush();
  total.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return total;
}

}  // namespace lodforge::csv
