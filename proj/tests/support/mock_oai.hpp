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


// In-process OAI-PMH endpoint serving a generated graph as three pages.
#pragma once

#include <httplib.h>

#include <algorithm>
#include <functional>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "lodforge/datagen/emit.hpp"
#include "lodforge/datagen/model.hpp"

namespace lodforge::test {

inline std::string oai_page(const std::string& records_xml, const std::optional<std::string>& token) {
  std::string body =
      "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      "<oai:OAI-PMH xmlns:oai=\"http://www.openarchives.org/OAI/2.0/\" "
      "xmlns:oaf=\"http://namespace.openaire.eu/oaf\">\n"
      "<oai:responseDate>2026-01-01T00:00:00Z</oai:responseDate>\n<oai:ListRecords>\n";
  body += records_xml;
  if (token) body += "<oai:resumptionToken completeListSize=\"x\">" + *token + "</oai:resumptionToken>\n";
  body += "</oai:ListRecords>\n</oai:OAI-PMH>\n";
  return body;
}

inline std::string oai_error(const std::string& code) {
  return "<?xml version=\"1.0\"?>\n<OAI-PMH xmlns=\"http://www.openarchives.org/OAI/2.0/\">"
         "<error code=\"" + code + "\">nothing here</error></OAI-PMH>\n";
}

// A graph split into three OAI-PMH pages.
struct Repository {
  datagen::EntityGraph graph;
  std::vector<std::string> pages;

  explicit Repository(std::size_t entities) : graph(datagen::generate(datagen::GenConfig::for_total(entities, 31))) {
    const std::size_t per_page = (graph.entities.size() + 2) / 3;
    for (std::size_t p = 0; p < 3; ++p) {
      std::string records;
      for (std::size_t i = p * per_page; i < std::min(graph.entities.size(), (p + 1) * per_page); ++i) {
        records += "<oai:record><oai:header><oai:identifier>" + graph.entities[i].id.to_string() +
                   "</oai:identifier></oai:header><oai:metadata>";
        datagen::append_xml_record(records, graph, graph.entities[i]);
        records += "</oai:metadata></oai:record>\n";
      }
      const std::optional<std::string> token = p < 2 ? std::optional<std::string>("tok" + std::to_string(p + 1)) : std::nullopt;
      pages.push_back(oai_page(records, token));
    }
  }
};

class MockServer {
 public:
  using Handler = std::function<void(const httplib::Request&, httplib::Response&)>;

  explicit MockServer(Handler handler) : handler_(std::move(handler)) {
    server_.Get("/oai", [this](const httplib::Request& req, httplib::Response& res) {
      {
        std::lock_guard lock(mutex_);
        const std::string key = req.has_param("resumptionToken") ? req.get_param_value("resumptionToken")
                                                                   : "start:" + req.get_param_value("metadataPrefix");
        log_.push_back(key);
      }
      handler_(req, res);
    });
    port_ = server_.bind_to_any_port("127.0.0.1");
    thread_ = std::thread([this] { server_.listen_after_bind(); });
    server_.wait_until_ready();
  }
  ~MockServer() {
    server_.stop();
    thread_.join();
  }

  std::string endpoint() const { return "http://127.0.0.1:" + std::to_string(port_) + "/oai"; }
  std::vector<std::string> log() {
    std::lock_guard lock(mutex_);
    return log_;
  }
  void clear_log() {
    std::lock_guard lock(mutex_);
    log_.clear();
  }

 private:
  httplib::Server server_;
  Handler handler_;
  std::thread thread_;
  int port_ = 0;
  std::mutex mutex_;
  std::vector<std::string> log_;
};

inline void serve_pages(const Repository& repo, const httplib::Request& req, httplib::Response& res) {
  std::size_t index = 0;
  if (req.has_param("resumptionToken")) {
    const auto token = req.get_param_value("resumptionToken");
    if (token == "tok1") index = 1;
    else if (token == "tok2") index = 2;
    else {
      res.set_content(oai_error("badResumptionToken"), "text/xml");
      return;
    }
  }
  res.set_content(repo.pages[index], "text/xml");
}

}  // namespace lodforge::test
