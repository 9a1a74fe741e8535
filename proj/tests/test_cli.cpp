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


#include <doctest.h>

#include <fstream>

#include "lodforge/bench/report.hpp"
#include "lodforge/core/run_stats.hpp"
#include "support/reference_listing.hpp"
#include "support/test_support.hpp"

using namespace lodforge;

namespace {

const std::string kCli = LODFORGE_TEST_CLI;

int cli(std::vector<std::string> args, const std::filesystem::path& out = {}) {
  args.insert(args.begin(), kCli);
  return test::run(args, out);
}

// One small corpus shared by the cases below.
const test::TempDir& corpus() {
  static test::TempDir dir;
  static const bool generated = [] {
    REQUIRE(cli({"gen", "--seed", "5", "--entities", "150", "--out", (dir / "c").string()}) == 0);
    REQUIRE(cli({"gen", "--seed", "5", "--entities", "150", "--inject-csv-fault", "--no-fixture", "--out",
                 (dir / "faulty").string()}) == 0);
    return true;
  }();
  (void)generated;
  return dir;
}

}  // namespace

TEST_CASE("usage errors exit 1") {
  CHECK(cli({}) == 1);
  CHECK(cli({"frobnicate"}) == 1);
  CHECK(cli({"map-kv"}) == 1);
  CHECK(cli({"map-kv", "--in", "x", "--workers", "0"}) == 1);
  test::TempDir dir;
  test::write_file(dir / "rules.txt", "oaf:result | @objIdentifier result | rdf:type | a//b | literal\n");
  CHECK(cli({"map-xml", "--in", (corpus() / "c" / "xml").string(), "--rules", (dir / "rules.txt").string(), "--out",
             "/dev/null"}) == 1);
}

TEST_CASE("I/O errors exit 3") {
  CHECK(cli({"map-kv", "--in", "/nonexistent/snapshot", "--out", "/dev/null"}) == 3);
  CHECK(cli({"map-csv", "--in", (corpus() / "c" / "csv").string(), "--vocab", "/nonexistent/vocab.tsv", "--out",
             "/dev/null"}) == 3);
}

TEST_CASE("fixture maps to the reference triples through every mapper") {
  const auto fixture = corpus() / "c" / "fixture";
  for (const auto& [cmd, input] : std::vector<std::pair<std::string, std::string>>{
           {"map-kv", "snapshot"}, {"map-csv", "csv"}, {"map-xml", "xml"}}) {
    const auto out = corpus() / ("fixture-" + cmd + ".nt");
    CHECK(cli({cmd, "--in", (fixture / input).string(), "--sorted", "--out", out.string()}) == 0);
    CHECK_MESSAGE(test::read_lines(out) == test::reference_listing_lines(), cmd);
  }
}

TEST_CASE("strict mode turns rejected records into exit 2") {
  const auto in = (corpus() / "faulty" / "csv").string();
  CHECK(cli({"map-csv", "--in", in, "--out", "/dev/null"}) == 0);
  CHECK(cli({"map-csv", "--in", in, "--out", "/dev/null", "--strict"}) == 2);
  CHECK(cli({"map-csv", "--in", (corpus() / "c" / "csv").string(), "--out", "/dev/null", "--strict"}) == 0);
}

TEST_CASE("stats report the emitted triple count") {
  const auto out = corpus() / "kv.nt";
  const auto stats_file = corpus() / "kv.stats";
  CHECK(cli({"map-kv", "--in", (corpus() / "c" / "snapshot").string(), "--out", out.string(), "--stats",
             stats_file.string()}) == 0);
  std::ifstream in(stats_file);
  const RunStats stats = read_stats(in);
  CHECK(stats.triples_emitted == test::read_lines(out).size());
  CHECK(stats.records_read == 150);
}

TEST_CASE("diff exits 0 on equal sets and 2 otherwise") {
  const auto a = corpus() / "a.nt";
  const auto b = corpus() / "b.nt";
  const auto c = corpus() / "c.nt";
  test::write_file(a, "<http://x/a> <http://x/p> \"1\" .\n<http://x/b> <http://x/p> \"2\" .\n");
  test::write_file(b, "<http://x/b> <http://x/p> \"2\" .\n<http://x/a> <http://x/p> \"1\" .\n");
  test::write_file(c, "<http://x/a> <http://x/p> \"1\" .\n");
  CHECK(cli({"diff", a.string(), b.string()}, "/dev/null") == 0);
  CHECK(cli({"diff", a.string(), c.string()}, corpus() / "diff.txt") == 2);
  CHECK(test::read_file(corpus() / "diff.txt").find("onlyA=1") != std::string::npos);
  test::write_file(c, "garbage\n");
  CHECK(cli({"diff", a.string(), c.string()}, "/dev/null") == 2);
}

TEST_CASE("bench writes a report whose triple counts match the outputs") {
  const auto report_file = corpus() / "report.txt";
  CHECK(cli({"bench", "--corpus", (corpus() / "c").string(), "--report", report_file.string(), "--workers", "1"}) == 0);
  std::ifstream in(report_file);
  const auto report = bench::read_report(in);
  REQUIRE(report.pipelines.size() == 3);
  const auto kv_out = corpus() / "bench-kv.nt";
  CHECK(cli({"map-kv", "--in", (corpus() / "c" / "snapshot").string(), "--out", kv_out.string()}) == 0);
  CHECK(report.pipelines.at("kv").triples_emitted == test::read_lines(kv_out).size());
  CHECK(report.pipelines.at("kv").input_records == 150);
  CHECK(report.pipelines.at("xml").peak_retained_values > 0);
  CHECK(report.environment.at("compressor") == "xz-9e");
}
