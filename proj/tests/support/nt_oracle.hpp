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


// Independent N-Triples reader for tests. Regex based and deliberately
// unrelated to the library parser.
#pragma once

#include <optional>
#include <regex>
#include <stdexcept>
#include <string>

namespace lodforge::test {

struct OracleTerm {
  bool is_iri = false;
  std::string value;  // IRI or unescaped lexical form
  std::string datatype;
  std::string language;
};

struct OracleTriple {
  std::string subject;
  std::string predicate;
  OracleTerm object;
};

inline void oracle_append_utf8(std::string& out, unsigned long cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

inline std::string oracle_unescape(const std::string& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] != '\\') {
      out.push_back(s[i]);
      continue;
    }
    const char e = s.at(++i);
    switch (e) {
      case 't': out.push_back('\t'); break;
      case 'b': out.push_back('\b'); break;
      case 'n': out.push_back('\n'); break;
      case 'r': out.push_back('\r'); break;
      case 'f': out.push_back('\f'); break;
      case '"': out.push_back('"'); break;
      case '\'': out.push_back('\''); break;
      case '\\': out.push_back('\\'); break;
      case 'u': oracle_append_utf8(out, std::stoul(s.substr(i + 1, 4), nullptr, 16)); i += 4; break;
      case 'U': oracle_append_utf8(out, std::stoul(s.substr(i + 1, 8), nullptr, 16)); i += 8; break;
      default: throw std::runtime_error("bad escape");
    }
  }
  return out;
}

inline std::optional<OracleTriple> oracle_parse(const std::string& line) {
  static const std::regex re(
      R"re(^<([^<>"{}|^`\\ ]+)> <([^<>"{}|^`\\ ]+)> (?:<([^<>"{}|^`\\ ]+)>|"((?:[^"\\\n\r]|\\.)*)"(?:\^\^<([^<>"{}|^`\\ ]+)>|@([a-zA-Z]+(?:-[a-zA-Z0-9]+)*))?) \.$)re");
  std::smatch m;
  if (!std::regex_match(line, m, re)) return std::nullopt;
  OracleTriple t;
  t.subject = m[1];
  t.predicate = m[2];
  if (m[3].matched) {
    t.object.is_iri = true;
    t.object.value = m[3];
  } else {
    t.object.value = oracle_unescape(m[4]);
    if (m[5].matched) t.object.datatype = m[5];
    if (m[6].matched) t.object.language = m[6];
  }
  return t;
}

}  // namespace lodforge::test
