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

#include "lodforge/datagen/emit.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <tuple>

#include "lodforge/core/error.hpp"
#include "lodforge/core/text.hpp"

namespace lodforge::datagen {
namespace {

constexpr std::uint32_t kMetadataField = 2;
constexpr std::uint32_t kCoauthorsField = 4;
constexpr std::uint32_t kUnknownField = 15;
constexpr std::string_view kCsvSeparator = "#!#";
constexpr std::string_view kSnapshotMagicBytes = "KVSNAP01";

constexpr std::string_view kTableNames[] = {
    "datasource", "organization", "person", "person_secondnames", "project", "project_organizations",
    "result", "result_authors", "result_datasources", "result_languages", "result_projects", "result_subjects"};

// Deterministic per-entity noise, derived from the id rather than the PRNG
// so emission order never perturbs the corpus.
bool noise(const EntityId& id, std::size_t digit, char below) { return id.hash()[digit] < below; }

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIoError, "cannot write " + path.string());
  return out;
}

void check(std::ostream& out, const std::filesystem::path& path) {
  out.flush();
  if (!out) throw Error(ErrorCode::kIoError, "write failed: " + path.string());
}

void make_dir(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error(ErrorCode::kIoError, "cannot create " + dir.string() + ": " + ec.message());
}

std::string numbered(std::string_view prefix, std::size_t n, std::string_view ext) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%05zu", n);
  return std::string(prefix) + buf + std::string(ext);
}

void append_escaped_xml(std::string& out, std::string_view text) {
  for (const char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out.push_back(c);
    }
  }
}

void text_element(std::string& out, std::string_view name, std::string_view value, std::string_view attrs = {}) {
  out += "    <";
  out += name;
  out += attrs;
  out += '>';
  append_escaped_xml(out, value);
  out += "</";
  out += name;
  out += ">\n";
}

std::string class_attrs(std::string_view scheme, std::string_view classid, std::string_view classname) {
  std::string out = " schemename=\"" + std::string(scheme) + "\" classname=\"";
  append_escaped_xml(out, classname);
  out += "\" schemeid=\"" + std::string(scheme) + "\" classid=\"";
  append_escaped_xml(out, classid);
  out += '"';
  return out;
}

void empty_classified(std::string& out, std::string_view name, std::string_view scheme, std::string_view classid,
                      std::string_view classname) {
  out += "    <";
  out += name;
  out += class_attrs(scheme, classid, classname);
  out += "/>\n";
}

const std::string* first_value(const Entity& e, std::string_view name) {
  const auto* v = e.values(name);
  return v == nullptr || v->empty() ? nullptr : &v->front();
}

std::string display_name(const Entity* person) {
  if (person == nullptr) return "unknown";
  std::string out;
  if (const auto* f = first_value(*person, "firstname")) out = *f;
  if (const auto* l = first_value(*person, "secondnames")) out += " " + *l;
  return out;
}

void append_result_fields(std::string& out, const Entity& e) {
  const std::string main_title = class_attrs("dnet:dataCite_title", "main title", "main title");
  for (const auto& t : *e.values("title")) text_element(out, "title", t, main_title);
  if (noise(e.id, 0, '5')) {
    text_element(out, "title", "Supplementary Material",
                 class_attrs("dnet:dataCite_title", "subtitle", "subtitle"));
  }
  for (const auto& v : *e.values("dateofacceptance")) text_element(out, "dateofacceptance", v);
  if (const auto* p = e.values("publisher")) {
    for (const auto& v : *p) text_element(out, "publisher", v);
  }
  const std::string& type = e.values("resulttype")->front();
  empty_classified(out, "resulttype", "dnet:result_typologies", type, type);
  for (const auto& two : *e.values("language")) {
    const Language* lang = find_language_by_two(two);
    empty_classified(out, "language", "dnet:languages", lang->three, lang->english_name);
  }
  if (const auto* subjects = e.values("subject")) {
    for (const auto& s : *subjects) text_element(out, "subject", s, class_attrs("dnet:subject", "keyword", "keyword"));
  }
  for (const auto& v : *e.values("publicationyear")) text_element(out, "publicationyear", v);
  text_element(out, "format", "application/pdf");
}

void append_plain_fields(std::string& out, const Entity& e) {
  for (const auto& attr : kind_def(e.id.kind()).attributes) {
    const auto* values = e.values(attr.name);
    if (values == nullptr) continue;
    for (const auto& v : *values) {
      if (attr.name == "country") {
        empty_classified(out, "country", "dnet:countries", v, v);
      } else if (attr.name == "datasourcetype") {
        empty_classified(out, "datasourcetype", "dnet:datasource_typologies", v, v);
      } else {
        text_element(out, attr.name, v);
      }
    }
  }
}

void append_rels(std::string& out, const EntityGraph& graph, const Entity& e) {
  const auto links = outgoing_links(graph, e.id);
  if (links.empty()) return;
  out += "    <rels>\n";
  for (const auto& link : links) {
    out += "      <rel>\n        <to class=\"" + link.family + "\" type=\"" +
           std::string(kind_name(link.object.kind())) + "\">" + link.object.to_string() + "</to>\n";
    if (link.ranking) out += "        <ranking>" + std::to_string(*link.ranking) + "</ranking>\n";
    const Entity* other = graph.find(link.object);
    if (link.object.kind() == EntityKind::kPerson) {
      out += "        <fullname>";
      append_escaped_xml(out, display_name(other));
      out += "</fullname>\n";
    } else if (other != nullptr) {
      if (const auto* title = first_value(*other, "title")) {
        // same element name and class as the record's own title, one level deeper
        out += "        <title classid=\"main title\" classname=\"main title\">";
        append_escaped_xml(out, *title);
        out += "</title>\n";
      }
    }
    out += "      </rel>\n";
  }
  out += "    </rels>\n";
}

}  // namespace

void WireWriter::append_varint(std::string& out, std::uint64_t value) {
  while (value >= 0x80) {
    out.push_back(static_cast<char>((value & 0x7f) | 0x80));
    value >>= 7;
  }
  out.push_back(static_cast<char>(value));
}

void WireWriter::varint_field(std::uint32_t number, std::uint64_t value) {
  append_varint(out_, (static_cast<std::uint64_t>(number) << 3) | 0);
  append_varint(out_, value);
}

void WireWriter::bytes_field(std::uint32_t number, std::string_view bytes) {
  append_varint(out_, (static_cast<std::uint64_t>(number) << 3) | 2);
  append_varint(out_, bytes.size());
  out_.append(bytes);
}

std::string encode_body(const Entity& entity) {
  WireWriter metadata;
  for (const auto& attr : kind_def(entity.id.kind()).attributes) {
    const auto* values = entity.values(attr.name);
    if (values == nullptr) continue;
    for (const auto& v : *values) {
      if (attr.wire_int) {
        metadata.varint_field(attr.wire_field, static_cast<std::uint64_t>(std::stoll(v)));
      } else {
        metadata.bytes_field(attr.wire_field, v);
      }
    }
  }
  WireWriter body;
  body.bytes_field(kMetadataField, metadata.bytes());
  if (entity.id.kind() == EntityKind::kPerson && noise(entity.id, 1, '4')) {
    WireWriter co_meta;
    co_meta.bytes_field(1, "Anonymous");
    WireWriter coauthor;
    coauthor.bytes_field(kMetadataField, co_meta.bytes());
    body.bytes_field(kCoauthorsField, coauthor.bytes());
  }
  if (noise(entity.id, 2, '3')) body.bytes_field(kUnknownField, "2015-06-01");
  return body.bytes();
}

std::string encode_ranking(std::int64_t ranking) {
  WireWriter w;
  w.varint_field(1, static_cast<std::uint64_t>(ranking));
  return w.bytes();
}

std::span<const Link> outgoing_links(const EntityGraph& graph, const EntityId& id) {
  const auto lo = std::lower_bound(graph.links.begin(), graph.links.end(), id,
                                   [](const Link& l, const EntityId& key) { return l.subject < key; });
  auto hi = lo;
  while (hi != graph.links.end() && hi->subject == id) ++hi;
  return {lo, hi};
}

std::string encode_row(const Entity& entity, std::span<const Link> outgoing) {
  struct Cell {
    std::string family, qualifier, value;
  };
  std::vector<Cell> cells;
  cells.push_back({std::string(kind_name(entity.id.kind())), "body", encode_body(entity)});
  for (const auto& link : outgoing) {
    cells.push_back({link.family, link.object.to_string(), link.ranking ? encode_ranking(*link.ranking) : ""});
  }
  std::sort(cells.begin(), cells.end(),
            [](const Cell& a, const Cell& b) { return std::tie(a.family, a.qualifier) < std::tie(b.family, b.qualifier); });
  std::string out;
  const std::string key = entity.id.to_string();
  WireWriter::append_varint(out, key.size());
  out += key;
  WireWriter::append_varint(out, cells.size());
  for (const auto& c : cells) {
    for (const std::string* part : {&c.family, &c.qualifier, &c.value}) {
      WireWriter::append_varint(out, part->size());
      out += *part;
    }
  }
  return out;
}

std::string_view xml_file_header() {
  return "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
         "<oaf:records xmlns:oaf=\"http://namespace.openaire.eu/oaf\">\n";
}

std::string_view xml_file_footer() { return "</oaf:records>\n"; }

void append_xml_record(std::string& out, const EntityGraph& graph, const Entity& entity) {
  const std::string element = "oaf:" + std::string(kind_name(entity.id.kind()));
  out += "  <" + element + " objIdentifier=\"" + entity.id.to_string() + "\">\n";
  if (entity.id.kind() == EntityKind::kResult) {
    append_result_fields(out, entity);
  } else {
    append_plain_fields(out, entity);
  }
  append_rels(out, graph, entity);
  out += "  </" + element + ">\n";
}

std::size_t Manifest::csv_records() const {
  std::size_t n = 0;
  for (const auto& [_, c] : csv_record_counts) n += c;
  return n;
}

void write_manifest(std::ostream& out, const Manifest& m) {
  out << "seed=" << m.seed << '\n';
  for (const auto& [kind, n] : m.entity_counts) out << "count." << kind << '=' << n << '\n';
  out << "rowCount=" << m.row_count << '\n';
  out << "snapshotSplits=" << m.snapshot_splits << '\n';
  for (const auto& [table, n] : m.csv_record_counts) out << "csv." << table << '=' << n << '\n';
  out << "csvRecords=" << m.csv_records() << '\n';
  out << "xmlRecordCount=" << m.xml_record_count << '\n';
  out << "xmlFiles=" << m.xml_files << '\n';
  out << "xmlRepeat=" << m.xml_repeat << '\n';
  out << "oracleTriples=" << m.oracle_triples << '\n';
}

Manifest read_manifest(std::istream& in) {
  Manifest m;
  std::string line;
  while (std::getline(in, line)) {
    if (is_blank_or_comment(line)) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw Error(ErrorCode::kParseError, "manifest: bad line '" + line + "'");
    const std::string key = line.substr(0, eq);
    const std::string value = line.substr(eq + 1);
    const auto n = static_cast<std::size_t>(std::stoull(value));
    if (key == "seed") m.seed = std::stoull(value);
    else if (key.starts_with("count.")) m.entity_counts[key.substr(6)] = n;
    else if (key == "rowCount") m.row_count = n;
    else if (key == "snapshotSplits") m.snapshot_splits = n;
    else if (key.starts_with("csv.")) m.csv_record_counts[key.substr(4)] = n;
    else if (key == "xmlRecordCount") m.xml_record_count = n;
    else if (key == "xmlFiles") m.xml_files = n;
    else if (key == "xmlRepeat") m.xml_repeat = n;
    else if (key == "oracleTriples") m.oracle_triples = n;
  }
  return m;
}

std::size_t write_snapshot(const EntityGraph& graph, const std::filesystem::path& dir, std::size_t rows_per_split) {
  if (rows_per_split == 0) throw Error(ErrorCode::kConfigError, "rows per split must be positive");
  make_dir(dir);
  std::size_t splits = 0;
  for (std::size_t begin = 0; begin < graph.entities.size() || splits == 0; begin += rows_per_split) {
    const auto path = dir / numbered("part-", splits++, ".kvsnap");
    auto out = open_out(path);
    std::string buf(kSnapshotMagicBytes);
    const std::size_t end = std::min(graph.entities.size(), begin + rows_per_split);
    for (std::size_t i = begin; i < end; ++i) {
      const Entity& e = graph.entities[i];
      buf += encode_row(e, outgoing_links(graph, e.id));
    }
    out << buf;
    check(out, path);
    if (end == graph.entities.size()) break;
  }
  return splits;
}

std::map<std::string, std::size_t> write_csv(const EntityGraph& graph, const std::filesystem::path& dir,
                                             bool inject_fault) {
  make_dir(dir);
  std::map<std::string, std::string> tables;
  std::map<std::string, std::size_t> counts;
  for (const auto name : kTableNames) {
    tables[std::string(name)];
    counts[std::string(name)] = 0;
  }
  auto record = [&](const std::string& table, const std::vector<const std::string*>& cells) {
    std::string& out = tables[table];
    out.push_back('#');
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i > 0) out += kCsvSeparator;
      out += cells[i] == nullptr ? std::string("null") : *cells[i];
    }
    if (inject_fault && table == "result" && counts[table] == 0) {
      out += kCsvSeparator;
      out += "unexpected";
    }
    out += "#!\n";
    ++counts[table];
  };

  for (const auto& e : graph.entities) {
    const std::string kind(kind_name(e.id.kind()));
    const std::string id = e.id.local_part();
    std::vector<const std::string*> cells{&id};
    for (const auto& attr : kind_def(e.id.kind()).attributes) {
      if (attr.repeated) continue;
      cells.push_back(first_value(e, attr.name));
    }
    record(kind, cells);
    for (const auto& attr : kind_def(e.id.kind()).attributes) {
      if (!attr.repeated) continue;
      const auto* values = e.values(attr.name);
      if (values == nullptr) continue;
      const std::string table = kind + "_" + (attr.name == "secondnames" ? std::string("secondnames")
                                                                         : std::string(attr.name) + "s");
      for (const auto& v : *values) record(table, {&id, &v});
    }
  }
  for (const auto& link : graph.links) {
    bool inverse = false;
    find_link(link.family, &inverse);
    if (inverse) continue;
    const std::string table = link.family == "hasAuthor"
                                  ? std::string("result_authors")
                                  : std::string(kind_name(link.subject.kind())) + "_" +
                                        std::string(kind_name(link.object.kind())) + "s";
    const std::string subject = link.subject.local_part();
    const std::string object = link.object.local_part();
    if (link.ranking) {
      const std::string ranking = std::to_string(*link.ranking);
      record(table, {&subject, &object, &ranking});
    } else {
      record(table, {&subject, &object});
    }
  }
  for (const auto& [name, body] : tables) {
    const auto path = dir / (name + ".csv");
    auto out = open_out(path);
    out << body;
    check(out, path);
  }
  return counts;
}

std::size_t write_xml(const EntityGraph& graph, const std::filesystem::path& dir, std::size_t per_file,
                      std::size_t repeat) {
  if (per_file == 0) throw Error(ErrorCode::kConfigError, "records per file must be positive");
  make_dir(dir);
  const std::size_t total = graph.entities.size() * repeat;
  std::size_t files = 0;
  std::size_t next = 0;
  do {
    const auto path = dir / numbered("part-", files++, ".xml");
    auto out = open_out(path);
    std::string buf(xml_file_header());
    const std::size_t end = std::min(total, next + per_file);
    for (; next < end; ++next) {
      append_xml_record(buf, graph, graph.entities[next % graph.entities.size()]);
      if (buf.size() > (1u << 20)) {
        out << buf;
        buf.clear();
      }
    }
    buf += xml_file_footer();
    out << buf;
    check(out, path);
  } while (next < total);
  return files;
}

Manifest emit_all(const EntityGraph& graph, std::uint64_t seed, const std::filesystem::path& out_dir,
                  const EmitOptions& options) {
  make_dir(out_dir);
  Manifest m;
  m.seed = seed;
  for (const EntityKind kind : kAllEntityKinds) m.entity_counts[std::string(kind_name(kind))] = graph.count(kind);
  m.row_count = graph.entities.size();
  if (options.with_snapshot) m.snapshot_splits = write_snapshot(graph, out_dir / "snapshot", options.rows_per_split);
  if (options.with_csv) m.csv_record_counts = write_csv(graph, out_dir / "csv", options.inject_csv_fault);
  if (options.with_xml) {
    m.xml_repeat = options.xml_repeat;
    m.xml_record_count = graph.entities.size() * options.xml_repeat;
    m.xml_files = write_xml(graph, out_dir / "xml", options.records_per_xml_file, options.xml_repeat);
  }
  const auto lines = oracle_lines(graph);
  m.oracle_triples = lines.size();
  {
    const auto path = out_dir / "oracle.nt";
    auto out = open_out(path);
    for (const auto& l : lines) out << l << '\n';
    check(out, path);
  }
  if (options.with_fixture) emit_fixture(out_dir / "fixture");
  const auto path = out_dir / "manifest.txt";
  auto out = open_out(path);
  write_manifest(out, m);
  check(out, path);
  return m;
}

void emit_fixture(const std::filesystem::path& dir) {
  const EntityGraph graph = running_example();
  write_snapshot(graph, dir / "snapshot", 4096);
  write_csv(graph, dir / "csv");
  write_xml(graph, dir / "xml", 2000);
  const auto path = dir / "expected.nt";
  auto out = open_out(path);
  for (const auto& l : oracle_lines(graph)) out << l << '\n';
  check(out, path);
}

std::span<const std::string_view> csv_table_names() { return kTableNames; }

}  // namespace lodforge::datagen
