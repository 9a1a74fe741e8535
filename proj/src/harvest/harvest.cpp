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

#include "lodforge/harvest/harvest.hpp"

#include <expat.h>
#include <httplib.h>

#include <cstdio>
#include <fstream>
#include <thread>

#include "lodforge/core/error.hpp"
#include "lodforge/core/log.hpp"
#include "lodforge/core/md5.hpp"
#include "lodforge/core/text.hpp"

namespace lodforge::harvest {
namespace {

constexpr char kSep = '\x01';

struct PageParser {
  bool list_records = false;
  std::size_t depth = 0;
  std::size_t records = 0;
  bool in_token = false;
  bool token_seen = false;
  std::string token;
  bool in_error = false;
  std::string error_code;
  std::string error_text;

  static bool is_oai(std::string_view name, std::string_view local) {
    const auto sep = name.find(kSep);
    if (sep == std::string_view::npos) return name == local;  // tolerate missing namespace
    return name.substr(0, sep) == kOaiNamespace && name.substr(sep + 1) == local;
  }

  void start(std::string_view name, const char** attrs) {
    ++depth;
    if (is_oai(name, "ListRecords")) {
      list_records = true;
    } else if (is_oai(name, "record") && list_records) {
      ++records;
    } else if (is_oai(name, "resumptionToken")) {
      in_token = true;
      token_seen = true;
    } else if (is_oai(name, "error")) {
      in_error = true;
      for (const char** a = attrs; *a != nullptr; a += 2) {
        if (std::string_view(a[0]) == "code") error_code = a[1];
      }
    }
  }

  void end(std::string_view name) {
    --depth;
    if (is_oai(name, "resumptionToken")) in_token = false;
    if (is_oai(name, "error")) in_error = false;
  }

  void text(std::string_view s) {
    if (in_token) token.append(s);
    if (in_error) error_text.append(s);
  }
};

struct Endpoint {
  std::string origin;  // scheme://host:port
  std::string path;
};

Endpoint split_endpoint(const std::string& url) {
  if (!url.starts_with("http://")) {
    throw Error(ErrorCode::kConfigError, "only http:// endpoints are supported: " + url);
  }
  const auto slash = url.find('/', 7);
  if (slash == std::string::npos) return {url, "/"};
  return {url.substr(0, slash), url.substr(slash)};
}

void write_atomic(const std::filesystem::path& path, std::string_view data) {
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::kIoError, "cannot write " + tmp);
    out.write(data.data(), static_cast<std::streamsize>(data.size()));
    out.flush();
    if (!out) throw Error(ErrorCode::kIoError, "write failed: " + tmp);
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw Error(ErrorCode::kIoError, "cannot rename " + tmp + ": " + ec.message());
}

std::string fetch(httplib::Client& client, const std::string& path, const httplib::Params& params,
                  const HarvestOptions& options) {
  std::string last_error;
  auto delay = options.base_delay;
  for (int attempt = 1; attempt <= options.max_attempts; ++attempt) {
    auto res = client.Get(path, params, httplib::Headers{});
    if (res && res->status == 200) return res->body;
    if (res) {
      last_error = "HTTP " + std::to_string(res->status);
      // client errors other than throttling will not improve on retry
      if (res->status >= 400 && res->status < 500 && res->status != 429) break;
    } else {
      last_error = httplib::to_string(res.error());
    }
    if (attempt < options.max_attempts) {
      log_warning("harvest: attempt " + std::to_string(attempt) + " failed (" + last_error + "), retrying");
      std::this_thread::sleep_for(delay);
      delay *= 2;
    }
  }
  throw Error(ErrorCode::kHttpError, last_error);
}

}  // namespace

std::string page_file_name(std::uint64_t page_number) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "page-%05llu.xml", static_cast<unsigned long long>(page_number));
  return buf;
}

void write_state(const std::filesystem::path& path, const HarvestState& s) {
  std::string out;
  out += "endpoint=" + s.endpoint + "\n";
  if (s.resumption_token) out += "resumptionToken=" + *s.resumption_token + "\n";
  out += "recordsFetched=" + std::to_string(s.records_fetched) + "\n";
  out += "pagesFetched=" + std::to_string(s.pages_fetched) + "\n";
  out += "lastResponseHash=" + s.last_response_hash + "\n";
  out += std::string("complete=") + (s.complete ? "true" : "false") + "\n";
  write_atomic(path, out);
}

std::optional<HarvestState> read_state(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    if (!std::filesystem::exists(path)) return std::nullopt;
    throw Error(ErrorCode::kIoError, "cannot read " + path.string());
  }
  HarvestState s;
  std::string line;
  while (std::getline(in, line)) {
    if (is_blank_or_comment(line)) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw Error(ErrorCode::kConfigError, "state file: bad line '" + line + "'");
    const std::string key = line.substr(0, eq);
    const std::string value = line.substr(eq + 1);
    try {
      if (key == "endpoint") s.endpoint = value;
      else if (key == "resumptionToken") s.resumption_token = value;
      else if (key == "recordsFetched") s.records_fetched = std::stoull(value);
      else if (key == "pagesFetched") s.pages_fetched = std::stoull(value);
      else if (key == "lastResponseHash") s.last_response_hash = value;
      else if (key == "complete") s.complete = value == "true";
      else throw Error(ErrorCode::kConfigError, "state file: unknown key '" + key + "'");
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::kConfigError, "state file: bad number for " + key);
    }
  }
  return s;
}

Page parse_page(std::string_view body) {
  PageParser p;
  XML_Parser parser = XML_ParserCreateNS(nullptr, kSep);
  XML_SetUserData(parser, &p);
  XML_SetElementHandler(
      parser,
      [](void* d, const char* name, const char** attrs) { static_cast<PageParser*>(d)->start(name, attrs); },
      [](void* d, const char* name) { static_cast<PageParser*>(d)->end(name); });
  XML_SetCharacterDataHandler(parser, [](void* d, const char* s, int len) {
    static_cast<PageParser*>(d)->text(std::string_view(s, static_cast<std::size_t>(len)));
  });
  const auto status = XML_Parse(parser, body.data(), static_cast<int>(body.size()), 1);
  std::string err;
  if (status == XML_STATUS_ERROR) {
    err = std::string(XML_ErrorString(XML_GetErrorCode(parser))) + " at line " +
          std::to_string(XML_GetCurrentLineNumber(parser));
  }
  XML_ParserFree(parser);
  if (!err.empty()) throw Error(ErrorCode::kProtocolError, "malformed response: " + err);

  if (!p.error_code.empty()) {
    if (p.error_code == "noRecordsMatch") return Page{};
    if (p.error_code == "badResumptionToken") {
      throw Error(ErrorCode::kStaleToken, "server rejected resumption token: " + std::string(trim(p.error_text)));
    }
    throw Error(ErrorCode::kProtocolError, p.error_code + ": " + std::string(trim(p.error_text)));
  }
  if (!p.list_records) throw Error(ErrorCode::kProtocolError, "response has no ListRecords element");
  Page page;
  page.records = p.records;
  const auto token = trim(p.token);
  if (p.token_seen && !token.empty()) page.resumption_token = std::string(token);
  return page;
}

HarvestResult harvest(const std::string& endpoint, const std::filesystem::path& out_dir,
                      const std::filesystem::path& state_file, const HarvestOptions& options) {
  if (options.max_attempts < 1) throw Error(ErrorCode::kConfigError, "max attempts must be >= 1");
  const Endpoint ep = split_endpoint(endpoint);
  HarvestState state;
  if (auto saved = read_state(state_file)) {
    if (saved->endpoint != endpoint) {
      throw Error(ErrorCode::kConfigError,
                  "state file belongs to " + saved->endpoint + ", not " + endpoint);
    }
    state = std::move(*saved);
  } else {
    state.endpoint = endpoint;
  }
  HarvestResult result;
  if (state.complete) {
    result.complete = true;
    return result;
  }
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw Error(ErrorCode::kIoError, "cannot create " + out_dir.string() + ": " + ec.message());

  httplib::Client client(ep.origin);
  client.set_connection_timeout(options.timeout);
  client.set_read_timeout(options.timeout);

  while (!options.max_pages || result.pages < *options.max_pages) {
    httplib::Params params{{"verb", "ListRecords"}};
    if (state.resumption_token) {
      params.emplace("resumptionToken", *state.resumption_token);
    } else {
      params.emplace("metadataPrefix", options.metadata_prefix);
    }
    const std::string body = fetch(client, ep.path, params, options);
    const Page page = parse_page(body);
    const std::uint64_t number = state.pages_fetched + 1;
    if (page.records > 0) write_atomic(out_dir / page_file_name(number), body);
    state.pages_fetched = number;
    state.records_fetched += page.records;
    state.last_response_hash = md5_hex(body);
    state.resumption_token = page.resumption_token;
    state.complete = !page.resumption_token;
    write_state(state_file, state);
    ++result.pages;
    result.records += page.records;
    if (state.complete) break;
  }
  result.complete = state.complete;
  return result;
}

}  // namespace lodforge::harvest
