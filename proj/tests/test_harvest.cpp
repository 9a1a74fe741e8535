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

#include <atomic>
#include <sstream>

#include "lodforge/core/error.hpp"
#include "lodforge/core/sink.hpp"
#include "lodforge/core/vocab.hpp"
#include "lodforge/datagen/emit.hpp"
#include "lodforge/datagen/model.hpp"
#include "lodforge/harvest/harvest.hpp"
#include "lodforge/xml/automaton.hpp"
#include "lodforge/xml/rules.hpp"
#include "lodforge/xml/stream_mapper.hpp"
#include "support/mock_oai.hpp"
#include "support/test_support.hpp"

using namespace lodforge;
using namespace lodforge::harvest;
using lodforge::test::MockServer;
using lodforge::test::oai_error;
using lodforge::test::oai_page;
using lodforge::test::Repository;
using lodforge::test::serve_pages;

namespace {

HarvestOptions fast_options() {
  HarvestOptions o;
  o.base_delay = std::chrono::milliseconds(1);
  o.timeout = std::chrono::seconds(5);
  return o;
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected lodforge::Error");
  return ErrorCode::kIoError;
}

std::vector<std::string> map_xml_dir(const std::filesystem::path& dir) {
  const auto vocab = Vocabulary::load(test::mappings_dir() / "vocab.tsv");
  const auto automaton = xml::FilterAutomaton::compile(xml::RuleSet::load(test::mappings_dir() / "xml_rules.txt", vocab).rules);
  const auto langs = xml::LanguageMap::load(test::mappings_dir() / "langmap.tsv");
  LineCollectorSink sink;
  const RunStats stats = xml::run_xml(dir, automaton, langs, 1, sink);
  CHECK(stats.error_count == 0);
  sink.normalize();
  return sink.lines();
}

}  // namespace

TEST_CASE("page parsing") {
  const Page p = parse_page(oai_page("<oai:record/><oai:record/>", std::string("abc")));
  CHECK(p.records == 2);
  CHECK(p.resumption_token == "abc");
  CHECK_FALSE(parse_page(oai_page("<oai:record/>", std::string(""))).resumption_token);
  CHECK(parse_page(oai_error("noRecordsMatch")).records == 0);
  CHECK(code_of([] { parse_page(oai_error("badResumptionToken")); }) == ErrorCode::kStaleToken);
  CHECK(code_of([] { parse_page(oai_error("badVerb")); }) == ErrorCode::kProtocolError);
  CHECK(code_of([] { parse_page("<html>oops</html>"); }) == ErrorCode::kProtocolError);
  CHECK(code_of([] { parse_page("<oai:OAI-PMH"); }) == ErrorCode::kProtocolError);
}

TEST_CASE("state file round trip") {
  test::TempDir dir;
  HarvestState s{"http://h/oai", std::string("tok 2"), 17, 2, "abc", false};
  write_state(dir / "state", s);
  CHECK(read_state(dir / "state") == s);
  CHECK_FALSE(read_state(dir / "missing"));
  CHECK(page_file_name(3) == "page-00003.xml");
}

TEST_CASE("three-page harvest fetches every page once") {
  const Repository repo(90);
  MockServer server([&](const auto& req, auto& res) { serve_pages(repo, req, res); });
  test::TempDir dir;
  const auto result = harvest::harvest(server.endpoint(), dir / "out", dir / "state", fast_options());
  CHECK(result.pages == 3);
  CHECK(result.records == repo.graph.entities.size());
  CHECK(result.complete);
  CHECK(server.log() == std::vector<std::string>{"start:oaf", "tok1", "tok2"});
  for (int p = 1; p <= 3; ++p) {
    CHECK(test::read_file(dir / "out" / page_file_name(p)) == repo.pages[p - 1]);
  }
  // A completed harvest is a no-op.
  server.clear_log();
  const auto again = harvest::harvest(server.endpoint(), dir / "out", dir / "state", fast_options());
  CHECK(again.pages == 0);
  CHECK(again.complete);
  CHECK(server.log().empty());
}

TEST_CASE("interrupted harvest resumes with exactly the missing page") {
  const Repository repo(90);
  std::atomic<bool> fail_third{true};
  MockServer server([&](const httplib::Request& req, httplib::Response& res) {
    if (fail_third && req.has_param("resumptionToken") && req.get_param_value("resumptionToken") == "tok2") {
      res.status = 503;
      return;
    }
    serve_pages(repo, req, res);
  });
  test::TempDir dir;
  HarvestOptions once = fast_options();
  once.max_attempts = 1;
  CHECK(code_of([&] { harvest::harvest(server.endpoint(), dir / "out", dir / "state", once); }) == ErrorCode::kHttpError);
  const auto state = read_state(dir / "state");
  REQUIRE(state);
  CHECK(state->pages_fetched == 2);
  CHECK(state->resumption_token == "tok2");
  CHECK_FALSE(state->complete);

  fail_third = false;
  server.clear_log();
  const auto result = harvest::harvest(server.endpoint(), dir / "out", dir / "state", fast_options());
  CHECK(result.pages == 1);
  CHECK(server.log() == std::vector<std::string>{"tok2"});
  CHECK(result.complete);

  // Pages 1-3 together map to the same triples as the records mapped directly.
  test::TempDir direct;
  datagen::write_xml(repo.graph, direct.path(), 1000);
  const auto harvested = map_xml_dir(dir / "out");
  CHECK(harvested == map_xml_dir(direct.path()));
  CHECK(harvested == datagen::oracle_lines(repo.graph));
}

TEST_CASE("max_pages leaves a resumable state") {
  const Repository repo(30);
  MockServer server([&](const auto& req, auto& res) { serve_pages(repo, req, res); });
  test::TempDir dir;
  HarvestOptions two = fast_options();
  two.max_pages = 2;
  CHECK(harvest::harvest(server.endpoint(), dir / "out", dir / "state", two).pages == 2);
  server.clear_log();
  const auto rest = harvest::harvest(server.endpoint(), dir / "out", dir / "state", fast_options());
  CHECK(rest.pages == 1);
  CHECK(server.log() == std::vector<std::string>{"tok2"});
}

TEST_CASE("empty repository completes with no page files") {
  MockServer server([](const auto&, auto& res) { res.set_content(oai_error("noRecordsMatch"), "text/xml"); });
  test::TempDir dir;
  const auto result = harvest::harvest(server.endpoint(), dir / "out", dir / "state", fast_options());
  CHECK(result.complete);
  CHECK(result.records == 0);
  CHECK_FALSE(std::filesystem::exists(dir / "out" / page_file_name(1)));
}

TEST_CASE("stale resumption tokens are reported") {
  MockServer server([](const auto&, auto& res) { res.set_content(oai_error("badResumptionToken"), "text/xml"); });
  test::TempDir dir;
  write_state(dir / "state", HarvestState{server.endpoint(), std::string("expired"), 5, 1, "", false});
  CHECK(code_of([&] { harvest::harvest(server.endpoint(), dir / "out", dir / "state", fast_options()); }) ==
        ErrorCode::kStaleToken);
}

TEST_CASE("transient server errors are retried with backoff") {
  const Repository repo(30);
  std::atomic<int> failures{2};
  MockServer server([&](const auto& req, auto& res) {
    if (failures.fetch_sub(1) > 0) {
      res.status = 503;
      return;
    }
    serve_pages(repo, req, res);
  });
  test::TempDir dir;
  const auto result = harvest::harvest(server.endpoint(), dir / "out", dir / "state", fast_options());
  CHECK(result.complete);
  CHECK(server.log().size() == 5);
}

TEST_CASE("client errors are not retried") {
  MockServer server([](const auto&, auto& res) { res.status = 404; });
  test::TempDir dir;
  CHECK(code_of([&] { harvest::harvest(server.endpoint(), dir / "out", dir / "state", fast_options()); }) == ErrorCode::kHttpError);
  CHECK(server.log().size() == 1);
}

TEST_CASE("state for another endpoint is refused") {
  test::TempDir dir;
  write_state(dir / "state", HarvestState{"http://elsewhere/oai", std::nullopt, 0, 0, "", false});
  CHECK(code_of([&] { harvest::harvest("http://127.0.0.1:1/oai", dir / "out", dir / "state", fast_options()); }) ==
        ErrorCode::kConfigError);
  CHECK(code_of([&] { harvest::harvest("https://x/oai", dir / "out", dir / "state2", fast_options()); }) ==
        ErrorCode::kConfigError);
}
