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


// Serial reference kernels against their OpenMP-parallel counterparts on a
// generated corpus. Corpus size: LODFORGE_BENCH_ENTITIES (default 10000).

#include <benchmark/benchmark.h>

#include <cstdlib>
#include <filesystem>
#include <memory>
#include <thread>

#include "lodforge/core/sink.hpp"
#include "lodforge/core/vocab.hpp"
#include "lodforge/csv/mapper.hpp"
#include "lodforge/csv/table_spec.hpp"
#include "lodforge/csv/templates.hpp"
#include "lodforge/datagen/emit.hpp"
#include "lodforge/datagen/model.hpp"
#include "lodforge/kv/mapper.hpp"
#include "lodforge/kv/schema.hpp"
#include "lodforge/xml/automaton.hpp"
#include "lodforge/xml/rules.hpp"
#include "lodforge/xml/stream_mapper.hpp"

namespace {

namespace fs = std::filesystem;
using namespace lodforge;

struct Fixture {
  fs::path dir;
  Vocabulary vocab;
  kv::SchemaSet schemas;
  csv::CsvSpecSet specs;
  csv::TemplateSet templates;
  xml::FilterAutomaton automaton;
  xml::LanguageMap langmap;

  static Fixture& get() {
    static Fixture f = make();
    return f;
  }

  ~Fixture() {
    std::error_code ec;
    fs::remove_all(dir, ec);
  }

 private:
  static Fixture make() {
    const fs::path mappings = LODFORGE_BENCH_MAPPINGS_DIR;
    std::size_t entities = 10000;
    if (const char* env = std::getenv("LODFORGE_BENCH_ENTITIES")) entities = std::strtoull(env, nullptr, 10);
    const fs::path dir = fs::temp_directory_path() / ("lodforge-bench-" + std::to_string(::getpid()));
    datagen::EmitOptions options;
    options.rows_per_split = 512;
    options.records_per_xml_file = 500;
    options.with_fixture = false;
    datagen::emit_all(datagen::generate(datagen::GenConfig::for_total(entities, 7)), 7, dir, options);

    Vocabulary vocab = Vocabulary::load(mappings / "vocab.tsv");
    kv::SchemaSet schemas = kv::SchemaSet::load(mappings / "schemas.txt", mappings / "links.txt", vocab);
    csv::CsvSpecSet specs = csv::CsvSpecSet::load(mappings / "csv_specs.txt", vocab);
    csv::TemplateSet templates = csv::TemplateSet::load(mappings / "csv_templates.txt", specs, vocab);
    xml::FilterAutomaton automaton =
        xml::FilterAutomaton::compile(xml::RuleSet::load(mappings / "xml_rules.txt", vocab).rules);
    xml::LanguageMap langmap = xml::LanguageMap::load(mappings / "langmap.tsv");
    return Fixture{dir, std::move(vocab), std::move(schemas), std::move(specs), std::move(templates),
                   std::move(automaton), std::move(langmap)};
  }
};

int parallel_workers() { return static_cast<int>(std::max(2u, std::thread::hardware_concurrency())); }

void report(benchmark::State& state, const RunStats& stats) {
  state.counters["records/s"] =
      benchmark::Counter(static_cast<double>(stats.records_read), benchmark::Counter::kIsIterationInvariantRate);
  state.counters["triples"] = static_cast<double>(stats.triples_emitted);
}

void BM_KvSerial(benchmark::State& state) {
  auto& f = Fixture::get();
  RunStats stats;
  for (auto _ : state) {
    CountingSink sink;
    stats = kv::run_snapshot_serial(f.dir / "snapshot", f.schemas, sink);
  }
  report(state, stats);
}

void BM_KvParallel(benchmark::State& state) {
  auto& f = Fixture::get();
  RunStats stats;
  for (auto _ : state) {
    CountingSink sink;
    stats = kv::run_snapshot(f.dir / "snapshot", static_cast<int>(state.range(0)), f.schemas, sink);
  }
  report(state, stats);
}

void BM_Csv(benchmark::State& state) {
  auto& f = Fixture::get();
  RunStats stats;
  for (auto _ : state) {
    CountingSink sink;
    stats = csv::run_tables(f.dir / "csv", f.specs, f.templates, static_cast<int>(state.range(0)), sink);
  }
  report(state, stats);
}

void BM_Xml(benchmark::State& state) {
  auto& f = Fixture::get();
  RunStats stats;
  for (auto _ : state) {
    CountingSink sink;
    stats = xml::run_xml(f.dir / "xml", f.automaton, f.langmap, static_cast<int>(state.range(0)), sink);
  }
  report(state, stats);
}

}  // namespace

BENCHMARK(BM_KvSerial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_KvParallel)->Arg(1)->Arg(parallel_workers())->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Csv)->Arg(1)->Arg(parallel_workers())->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Xml)->Arg(1)->Arg(parallel_workers())->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
