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

#include "lodforge/core/ntriples.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <ostream>
#include <vector>

#include "lodforge/core/error.hpp"

namespace lodforge {
namespace {

class LineParser {
 public:
  LineParser(std::string_view line, std::size_t line_no) : s_(line), line_no_(line_no) {}

  Triple parse() {
    skip_ws();
    Iri subject = parse_iri();
    skip_ws();
    Iri predicate = parse_iri();
    skip_ws();
    Term object = peek() == '<' ? Term(parse_iri()) : Term(parse_literal());
    skip_ws();
    expect('.');
    skip_ws();
    if (pos_ != s_.size()) fail("trailing characters");
    return Triple{std::move(subject), std::move(predicate), std::move(object)};
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::kParseError,
                "line " + std::to_string(line_no_) + ", column " + std::to_string(pos_ + 1) + ": " + what);
  }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void skip_ws() {
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t')) ++pos_;
  }

  Iri parse_iri() {
    expect('<');
    const auto end = s_.find('>', pos_);
    if (end == std::string_view::npos) fail("unterminated IRI");
    std::string value(s_.substr(pos_, end - pos_));
    pos_ = end + 1;
    if (!Iri::is_valid(value)) fail("invalid IRI <" + value + ">");
    return Iri(std::move(value));
  }

  unsigned hex_digit(char c) {
    if (c >= '0' && c <= '9') return static_cast<unsigned>(c - '0');
    if (c >= 'a' && c <= 'f') return static_cast<unsigned>(c - 'a' + 10);
    if (c >= 'A' && c <= 'F') return static_cast<unsigned>(c - 'A' + 10);
    fail("bad hex digit in escape");
  }

  void append_utf8(std::string& out, std::uint32_t cp) {
    if (cp < 0x80) {
      out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
      out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
      out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x110000) {
      out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
      fail("code point out of range");
    }
  }

  Literal parse_literal() {
    expect('"');
    std::string lexical;
    while (true) {
      if (pos_ >= s_.size()) fail("unterminated literal");
      const char c = s_[pos_++];
      if (c == '"') break;
      if (c != '\\') {
        lexical.push_back(c);
        continue;
      }
      if (pos_ >= s_.size()) fail("dangling escape");
      const char e = s_[pos_++];
      switch (e) {
        case 't': lexical.push_back('\t'); break;
        case 'b': lexical.push_back('\b'); break;
        case 'n': lexical.push_back('\n'); break;
        case 'r': lexical.push_back('\r'); break;
        case 'f': lexical.push_back('\f'); break;
        case '"': lexical.push_back('"'); break;
        case '\'': lexical.push_back('\''); break;
        case '\\': lexical.push_back('\\'); break;
        case 'u':
        case 'U': {
          const std::size_t digits = e == 'u' ? 4 : 8;
          if (pos_ + digits > s_.size()) fail("short unicode escape");
          std::uint32_t cp = 0;
          for (std::size_t i = 0; i < digits; ++i) cp = cp * 16 + hex_digit(s_[pos_++]);
          append_utf8(lexical, cp);
          break;
        }
        default:
          fail(std::string("unknown escape \\") + e);
      }
    }
    if (peek() == '^') {
      ++pos_;
      expect('^');
      return Literal::typed(std::move(lexical), parse_iri());
    }
    if (peek() == '@') {
      ++pos_;
      const auto start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '-')) {
        ++pos_;
      }
      if (pos_ == start) fail("empty language tag");
      return Literal::tagged(std::move(lexical), std::string(s_.substr(start, pos_ - start)));
    }
    return Literal::plain(std::move(lexical));
  }

  std::string_view s_;
  std::size_t line_no_;
  std::size_t pos_ = 0;
};

}  // namespace

void append_iri(std::string& out, const Iri& iri) {
  out.push_back('<');
  out.append(iri.str());
  out.push_back('>');
}

void append_escaped_literal(std::string& out, std::string_view lexical) {
  static constexpr char kHex[] = "0123456789ABCDEF";
  for (unsigned char c : lexical) {
    switch (c) {
      case '"': out.append("\\\""); break;
      case '\\': out.append("\\\\"); break;
      case '\n': out.append("\\n"); break;
      case '\r': out.append("\\r"); break;
      case '\t': out.append("\\t"); break;
      default:
        if (c < 0x20 || c == 0x7f) {
          out.append("\\u00");
          out.push_back(kHex[c >> 4]);
          out.push_back(kHex[c & 0xf]);
        } else {
          out.push_back(static_cast<char>(c));
        }
    }
  }
}

void append_term(std::string& out, const Term& term) {
  if (const auto* iri = std::get_if<Iri>(&term)) {
    append_iri(out, *iri);
    return;
  }
  const auto& literal = std::get<Literal>(term);
  if (literal.datatype && literal.language) {
    throw Error(ErrorCode::kParseError, "literal has both datatype and language");
  }
  out.push_back('"');
  append_escaped_literal(out, literal.lexical);
  out.push_back('"');
  if (literal.datatype) {
    out.append("^^");
    append_iri(out, *literal.datatype);
  } else if (literal.language) {
    out.push_back('@');
    out.append(*literal.language);
  }
}

void append_ntriples(std::string& out, const Triple& triple) {
  append_iri(out, triple.subject);
  out.push_back(' ');
  append_iri(out, triple.predicate);
  out.push_back(' ');
  append_term(out, triple.object);
  out.append(" .");
}

std::string to_ntriples(const Triple& triple) {
  std::string out;
  out.reserve(160);
  append_ntriples(out, triple);
  return out;
}

Triple parse_ntriples_line(std::string_view line, std::size_t line_no) {
  return LineParser(line, line_no).parse();
}

std::size_t serialize_ntriples(std::span<const Triple> triples, std::ostream& out, bool sorted) {
  std::size_t written = 0;
  if (sorted) {
    std::vector<std::string> lines;
    lines.reserve(triples.size());
    for (const auto& t : triples) lines.push_back(to_ntriples(t));
    std::sort(lines.begin(), lines.end());
    lines.erase(std::unique(lines.begin(), lines.end()), lines.end());
    for (const auto& line : lines) {
      out << line << '\n';
      ++written;
    }
  } else {
    std::string buffer;
    for (const auto& t : triples) {
      buffer.clear();
      append_ntriples(buffer, t);
      buffer.push_back('\n');
      out.write(buffer.data(), static_cast<std::streamsize>(buffer.size()));
      ++written;
    }
  }
  if (!out) throw Error(ErrorCode::kIoError, "failed writing N-Triples");
  return written;
}

}  // namespace lodforge
