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

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <thread>

#include <unistd.h>

#include "lodforge/bench/code_size.hpp"
#include "lodforge/bench/diff.hpp"
#include "lodforge/bench/measure.hpp"
#include "lodforge/bench/report.hpp"
#include "lodforge/core/error.hpp"
#include "lodforge/core/log.hpp"
#include "lodforge/core/run_stats.hpp"
#include "lodforge/core/sink.hpp"
#include "lodforge/core/text.hpp"
#include "lodforge/core/vocab.hpp"
#include "lodforge/csv/mapper.hpp"
#include "lodforge/datagen/emit.hpp"
#include "lodforge/harvest/harvest.hpp"
#include "lodforge/kv/mapper.hpp"
#include "lodforge/xml/automaton.hpp"
#include "lodforge/xml/stream_mapper.hpp"

#ifndef LODFORGE_MAPPINGS_DIR
#define LODFORGE_MAPPINGS_DIR "mappings"
#endif

namespace fs = std::filesystem;
using namespace lodforge;

namespace {

fs::path mapping(std::string_view name) { return fs::path(LODFORGE_MAPPINGS_DIR) / name; }

int default_workers() { return static_cast<int>(std::max(1u, std::thread::hardware_concurrency())); }

struct MapOptions {
  std::string in;
  std::string out = "-";
  std::string vocab = mapping("vocab.tsv").string();
  std::string stats;
  int workers = default_workers();
  bool sorted = false;
  bool strict = false;
};

void add_map_options(CLI::App* cmd, MapOptions& o) {
  cmd->add_option("--in", o.in, "Input file or directory")->required();
  cmd->add_option("--out", o.out, "N-Triples output file, '-' for stdout")->capture_default_str();
  cmd->add_option("--vocab", o.vocab, "Vocabulary registry")->capture_default_str();
  cmd->add_option("--workers", o.workers, "Worker threads")
      ->envname("LODFORGE_WORKERS")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--stats", o.stats, "Write run statistics (key=value) to this file");
  cmd->add_flag("--sorted", o.sorted, "Sort and deduplicate output");
  cmd->add_flag("--strict", o.strict, "Exit 2 if any record was rejected");
}

/// Runs `body` against the sink selected by the options; handles stats and strictness.
template <typename Body>
int run_mapping(const MapOptions& o, Body&& body) {
  std::ofstream file;
  std::ostream* out = &std::cout;
  if (o.out != "-") {
    file.open(o.out, std::ios::binary | std::ios::trunc);
    if (!file) throw Error(ErrorCode::kIoError, "cannot write " + o.out);
    out = &file;
  }
  std::unique_ptr<TripleSink> sink;
  if (o.sorted) {
    sink = std::make_unique<SortedNTriplesSink>(*out);
  } else {
    sink = std::make_unique<NTriplesSink>(*out);
  }
  RunStats stats = body(*sink);
  sink->flush();
  out->flush();
  if (!*out) throw Error(ErrorCode::kIoError, "write failed: " + o.out);
  if (!o.stats.empty()) {
    std::ofstream s(o.stats, std::ios::trunc);
    if (!s) throw Error(ErrorCode::kIoError, "cannot write " + o.stats);
    write_stats(s, stats);
  }
  log_info("records=" + std::to_string(stats.records_read) + " triples=" + std::to_string(stats.triples_emitted) +
           " errors=" + std::to_string(stats.error_count));
  if (stats.error_count > 0) {
    log_warning(std::to_string(stats.error_count) + " record(s) rejected");
    if (o.strict) return 2;
  }
  return 0;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  for (const auto part : split(s, ',')) {
    const auto t = trim(part);
    if (!t.empty()) out.emplace_back(t);
  }
  return out;
}

std::uint64_t tree_bytes(const fs::path& p) {
  std::error_code ec;
  if (fs::is_regular_file(p, ec)) return fs::file_size(p, ec);
  std::uint64_t total = 0;
  if (!fs::is_directory(p, ec)) return 0;
  for (const auto& e : fs::recursive_directory_iterator(p, ec)) {
    if (e.is_regular_file()) total += e.file_size();
  }
  return total;
}

std::string cpu_model() {
  std::ifstream in("/proc/cpuinfo");
  std::string line;
  while (std::getline(in, line)) {
    if (line.starts_with("model name")) {
      const auto colon = line.find(':');
      if (colon != std::string::npos) return std::string(trim(std::string_view(line).substr(colon + 1)));
    }
  }
  return "unknown";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lodforge: research-metadata snapshot/CSV/XML to RDF converter and benchmark harness"};
  app.require_subcommand(1);
  std::string log_level = "warning";
  app.add_option("--log-level", log_level, "error|warning|info|debug")
      ->check(CLI::IsMember({"error", "warning", "info", "debug"}))
      ->capture_default_str();

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a synthetic corpus in all three formats");
  std::uint64_t seed = 42;
  std::size_t entities = 0;
  std::map<std::string, std::size_t> kind_counts;
  int authors_min = 1;
  int authors_max = 3;
  std::string languages;
  std::string gen_out;
  datagen::EmitOptions emit;
  bool no_fixture = false;
  gen->add_option("--seed", seed, "PRNG seed")->capture_default_str();
  gen->add_option("--entities", entities, "Total entities, split 40/35/10/10/5 over result/person/project/organization/datasource");
  for (const EntityKind kind : kAllEntityKinds) {
    const std::string name(kind_name(kind));
    gen->add_option("--" + name + "s", kind_counts[name], "Number of " + name + " entities (overrides --entities)");
  }
  gen->add_option("--authors-min", authors_min)->capture_default_str();
  gen->add_option("--authors-max", authors_max)->capture_default_str();
  gen->add_option("--languages", languages, "Comma-separated ISO 639-2 codes (default: all 25 known)");
  gen->add_option("--out", gen_out, "Output directory")->required();
  gen->add_option("--rows-per-split", emit.rows_per_split)->capture_default_str();
  gen->add_option("--records-per-file", emit.records_per_xml_file)->capture_default_str();
  gen->add_option("--xml-repeat", emit.xml_repeat, "Write every XML record this many times")->capture_default_str();
  gen->add_flag("--inject-csv-fault", emit.inject_csv_fault, "Add an extra cell to the first result.csv record");
  gen->add_flag("--no-fixture", no_fixture, "Skip the running-example fixture");

  // map-kv
  auto* map_kv = app.add_subcommand("map-kv", "Map a column-store snapshot to N-Triples");
  MapOptions kv_opts;
  std::string schemas = mapping("schemas.txt").string();
  std::string links = mapping("links.txt").string();
  bool serial = false;
  add_map_options(map_kv, kv_opts);
  map_kv->add_option("--schemas", schemas)->capture_default_str();
  map_kv->add_option("--links", links)->capture_default_str();
  map_kv->add_flag("--serial", serial, "Use the serial reference kernel");

  // map-csv
  auto* map_csv = app.add_subcommand("map-csv", "Map a directory of #!#-delimited tables to N-Triples");
  MapOptions csv_opts;
  std::string specs = mapping("csv_specs.txt").string();
  std::string templates = mapping("csv_templates.txt").string();
  add_map_options(map_csv, csv_opts);
  map_csv->add_option("--specs", specs)->capture_default_str();
  map_csv->add_option("--templates", templates)->capture_default_str();

  // map-xml
  auto* map_xml = app.add_subcommand("map-xml", "Stream-map XML records to N-Triples");
  MapOptions xml_opts;
  std::string rules = mapping("xml_rules.txt").string();
  std::string langmap = mapping("langmap.tsv").string();
  add_map_options(map_xml, xml_opts);
  map_xml->add_option("--rules", rules)->capture_default_str();
  map_xml->add_option("--langmap", langmap)->capture_default_str();

  // harvest
  auto* harvest_cmd = app.add_subcommand("harvest", "Fetch ListRecords pages following resumption tokens");
  std::string endpoint;
  std::string harvest_out;
  std::string state_file;
  harvest::HarvestOptions harvest_opts;
  int base_delay_ms = static_cast<int>(harvest_opts.base_delay.count());
  std::size_t max_pages = 0;
  harvest_cmd->add_option("--endpoint", endpoint, "http://host[:port]/path")->required();
  harvest_cmd->add_option("--out", harvest_out, "Directory for page files")->required();
  harvest_cmd->add_option("--state", state_file, "State file (default <out>/harvest.state)");
  harvest_cmd->add_option("--max-attempts", harvest_opts.max_attempts)->capture_default_str();
  harvest_cmd->add_option("--base-delay-ms", base_delay_ms)->capture_default_str();
  harvest_cmd->add_option("--metadata-prefix", harvest_opts.metadata_prefix)->capture_default_str();
  harvest_cmd->add_option("--max-pages", max_pages, "Stop after N pages (0 = no limit)");

  // bench
  auto* bench_cmd = app.add_subcommand("bench", "Measure the three pipelines on a generated corpus");
  std::string corpus;
  std::string pipelines = "kv,csv,xml";
  std::string report_path;
  std::string table_path;
  int bench_workers = default_workers();
  int repeat = 1;
  bool no_reference = false;
  bench_cmd->add_option("--corpus", corpus, "Directory written by 'gen'")->required();
  bench_cmd->add_option("--pipelines", pipelines)->capture_default_str();
  bench_cmd->add_option("--report", report_path, "Report file (key=value)")->required();
  bench_cmd->add_option("--table", table_path, "Also write the text table here ('-' for stdout)");
  bench_cmd->add_option("--workers", bench_workers)->envname("LODFORGE_WORKERS")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--repeat", repeat, "Runs per pipeline; the minimum time is reported")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  bench_cmd->add_flag("--no-reference", no_reference, "Omit the reference production figures from the table");

  // diff
  auto* diff_cmd = app.add_subcommand("diff", "Set difference of two N-Triples files (exit 0 iff equal)");
  std::string diff_a;
  std::string diff_b;
  std::size_t samples = 20;
  diff_cmd->add_option("a", diff_a)->required();
  diff_cmd->add_option("b", diff_b)->required();
  diff_cmd->add_option("--samples", samples)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << app.help();
    return 1;
  }

  set_log_level(log_level == "error"  ? LogLevel::kError
                : log_level == "info" ? LogLevel::kInfo
                : log_level == "debug" ? LogLevel::kDebug
                                       : LogLevel::kWarning);

  try {
    if (*gen) {
      datagen::GenConfig config = datagen::GenConfig::for_total(entities, seed);
      for (const EntityKind kind : kAllEntityKinds) {
        const auto* opt = gen->get_option("--" + std::string(kind_name(kind)) + "s");
        if (opt->count() > 0) config.count(kind) = kind_counts[std::string(kind_name(kind))];
      }
      config.authors_min = authors_min;
      config.authors_max = authors_max;
      config.languages = split_list(languages);
      emit.with_fixture = !no_fixture;
      const auto graph = datagen::generate(config);
      const auto manifest = datagen::emit_all(graph, seed, gen_out, emit);
      log_info("entities=" + std::to_string(manifest.row_count) +
               " oracleTriples=" + std::to_string(manifest.oracle_triples));
      return 0;
    }
    if (*map_kv) {
      const auto vocab = Vocabulary::load(kv_opts.vocab);
      const auto set = kv::SchemaSet::load(schemas, links, vocab);
      return run_mapping(kv_opts, [&](TripleSink& sink) {
        return serial ? kv::run_snapshot_serial(kv_opts.in, set, sink)
                      : kv::run_snapshot(kv_opts.in, kv_opts.workers, set, sink);
      });
    }
    if (*map_csv) {
      const auto vocab = Vocabulary::load(csv_opts.vocab);
      const auto spec_set = csv::CsvSpecSet::load(specs, vocab);
      const auto template_set = csv::TemplateSet::load(templates, spec_set, vocab);
      return run_mapping(csv_opts, [&](TripleSink& sink) {
        return csv::run_tables(csv_opts.in, spec_set, template_set, csv_opts.workers, sink);
      });
    }
    if (*map_xml) {
      const auto vocab = Vocabulary::load(xml_opts.vocab);
      auto rule_set = xml::RuleSet::load(rules, vocab);
      const auto automaton = xml::FilterAutomaton::compile(std::move(rule_set.rules));
      const auto languages_map = xml::LanguageMap::load(langmap);
      return run_mapping(xml_opts, [&](TripleSink& sink) {
        return xml::run_xml(xml_opts.in, automaton, languages_map, xml_opts.workers, sink);
      });
    }
    if (*harvest_cmd) {
      harvest_opts.base_delay = std::chrono::milliseconds(base_delay_ms);
      if (max_pages > 0) harvest_opts.max_pages = max_pages;
      const fs::path state = state_file.empty() ? fs::path(harvest_out) / "harvest.state" : fs::path(state_file);
      const auto result = harvest::harvest(endpoint, harvest_out, state, harvest_opts);
      std::cout << "pages=" << result.pages << "\nrecords=" << result.records
                << "\ncomplete=" << (result.complete ? "true" : "false") << '\n';
      return 0;
    }
    if (*bench_cmd) {
      const fs::path self = bench::self_executable();
      const fs::path root(corpus);
      bench::BenchReport report;
      report.environment["cpu"] = cpu_model();
      report.environment["logicalCpus"] = std::to_string(std::thread::hardware_concurrency());
      report.environment["workers"] = std::to_string(bench_workers);
      report.environment["repeat"] = std::to_string(repeat);
      report.environment["compressor"] = std::string(bench::kCompressorId);
      std::uint64_t input_bytes = 0;
      for (const auto& p : split_list(pipelines)) {
        std::string input;
        std::vector<fs::path> mapping_files;
        if (p == "kv") {
          input = "snapshot";
          mapping_files = {mapping("schemas.txt"), mapping("links.txt")};
        } else if (p == "csv") {
          input = "csv";
          mapping_files = {mapping("csv_specs.txt"), mapping("csv_templates.txt")};
        } else if (p == "xml") {
          input = "xml";
          mapping_files = {mapping("xml_rules.txt"), mapping("langmap.tsv")};
        } else {
          throw Error(ErrorCode::kConfigError, "unknown pipeline '" + p + "'");
        }
        const fs::path in = root / input;
        if (!fs::exists(in)) throw Error(ErrorCode::kIoError, "corpus has no " + in.string());
        input_bytes += tree_bytes(in);
        const fs::path stats_path = fs::temp_directory_path() / ("lodforge-bench-" + std::to_string(::getpid()) + "-" + p + ".stats");
        bench::PipelineRow row;
        for (int r = 0; r < repeat; ++r) {
          const auto m = bench::measure_command({self.string(), "--log-level", "error", "map-" + p, "--in", in.string(),
                                                 "--out", "/dev/null", "--workers", std::to_string(bench_workers),
                                                 "--stats", stats_path.string()});
          std::ifstream s(stats_path);
          const RunStats stats = read_stats(s);
          const double mb = static_cast<double>(m.peak_rss_kb) / 1024.0;
          if (r == 0 || m.wall_seconds < row.mapping_time_seconds) row.mapping_time_seconds = m.wall_seconds;
          row.peak_memory_mb = std::max(row.peak_memory_mb, mb);
          row.peak_retained_values = stats.peak_retained_values;
          row.peak_retained_bytes = stats.peak_retained_bytes;
          row.input_records = stats.records_read;
          row.triples_emitted = stats.triples_emitted;
          row.error_count = stats.error_count;
        }
        fs::remove(stats_path);
        row.mapping_source_compressed_bytes = bench::code_size(mapping_files);
        report.pipelines[p] = row;
      }
      report.environment["inputBytes"] = std::to_string(input_bytes);
      {
        std::ofstream out(report_path, std::ios::trunc);
        if (!out) throw Error(ErrorCode::kIoError, "cannot write " + report_path);
        bench::write_report(out, report);
      }
      if (!table_path.empty()) {
        if (table_path == "-") {
          bench::render_table(std::cout, report, !no_reference);
        } else {
          std::ofstream out(table_path, std::ios::trunc);
          bench::render_table(out, report, !no_reference);
        }
      }
      return 0;
    }
    if (*diff_cmd) {
      std::ifstream a(diff_a, std::ios::binary);
      if (!a) throw Error(ErrorCode::kIoError, "cannot open " + diff_a);
      std::ifstream b(diff_b, std::ios::binary);
      if (!b) throw Error(ErrorCode::kIoError, "cannot open " + diff_b);
      const auto d = bench::diff_ntriples(a, b, samples);
      bench::write_diff(std::cout, d);
      return d.equal() ? 0 : 2;
    }
  } catch (const Error& e) {
    std::cerr << "lodforge: " << e.what() << '\n';
    switch (classify(e.code())) {
      case ErrorClass::kUsage: return 1;
      case ErrorClass::kData: return 2;
      case ErrorClass::kIo: return 3;
    }
  } catch (const std::exception& e) {
    std::cerr << "lodforge: " << e.what() << '\n';
    return 3;
  }
  return 1;
}
