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

#include "lodforge/datagen/model.hpp"

#include <algorithm>
#include <cstdio>
#include <set>

#include "lodforge/core/error.hpp"
#include "lodforge/core/md5.hpp"
#include "lodforge/core/ntriples.hpp"
#include "lodforge/datagen/prng.hpp"

namespace lodforge::datagen {
namespace {


#define DCTERMS(x) "http://purl.org/dc/terms/" x
#define FOAF(x) "http://xmlns.com/foaf/0.1/" x
#define OAV(x) "http://lod.openaire.eu/vocab#" x

const std::array<KindDef, 5> kKinds = {{
    {EntityKind::kDatasource,
     {OAV("Datasource")},
     {{"officialname", false, false, OAV("officialName"), ObjectForm::kPlain, 1, false},
      {"englishname", false, true, OAV("englishName"), ObjectForm::kPlain, 2, false},
      {"datasourcetype", false, false, OAV("datasourceType"), ObjectForm::kPlain, 3, false},
      {"websiteurl", false, false, OAV("websiteURL"), ObjectForm::kPlain, 4, false}}},
    {EntityKind::kOrganization,
     {OAV("Organization")},
     {{"legalname", false, false, OAV("legalName"), ObjectForm::kPlain, 1, false},
      {"legalshortname", false, true, OAV("legalShortName"), ObjectForm::kPlain, 2, false},
      {"country", false, false, OAV("country"), ObjectForm::kPlain, 3, false},
      {"websiteurl", false, true, OAV("websiteURL"), ObjectForm::kPlain, 4, false}}},
    {EntityKind::kPerson,
     {FOAF("Person")},
     {{"firstname", false, false, FOAF("firstName"), ObjectForm::kPlain, 1, false},
      {"secondnames", true, false, FOAF("lastName"), ObjectForm::kPlain, 2, false},
      {"nationality", false, true, OAV("nationality"), ObjectForm::kPlain, 9, false}}},
    {EntityKind::kProject,
     {OAV("Project")},
     {{"code", false, false, OAV("projectCode"), ObjectForm::kPlain, 1, false},
      {"acronym", false, false, OAV("acronym"), ObjectForm::kPlain, 2, false},
      {"title", false, false, DCTERMS("title"), ObjectForm::kPlain, 3, false},
      {"startdate", false, false, OAV("startDate"), ObjectForm::kDate, 4, false},
      {"enddate", false, false, OAV("endDate"), ObjectForm::kDate, 5, false}}},
    {EntityKind::kResult,
     {OAV("Result")},
     {{"title", false, false, DCTERMS("title"), ObjectForm::kEnglish, 1, false},
      {"dateofacceptance", false, false, DCTERMS("dateAccepted"), ObjectForm::kDate, 2, false},
      {"publisher", false, true, DCTERMS("publisher"), ObjectForm::kPlain, 3, false},
      {"language", true, false, DCTERMS("language"), ObjectForm::kPlain, 4, false},
      {"publicationyear", false, false, OAV("publicationYear"), ObjectForm::kInteger, 5, true},
      {"resulttype", false, false, "http://www.w3.org/1999/02/22-rdf-syntax-ns#type", ObjectForm::kResultClass, 6,
       false},
      {"subject", true, true, DCTERMS("subject"), ObjectForm::kPlain, 7, false}}},
}};

const std::array<LinkDef, 4> kLinks = {{
    {"hasAuthor", EntityKind::kResult, DCTERMS("creator"), EntityKind::kPerson, "isAuthorOf", OAV("isAuthorOf"),
     true},
    {"isProducedBy", EntityKind::kResult, OAV("isProducedBy"), EntityKind::kProject, "produces", OAV("produces"),
     false},
    {"collectedFrom", EntityKind::kResult, OAV("collectedFrom"), EntityKind::kDatasource, "provides",
     OAV("provides"), false},
    {"hasParticipant", EntityKind::kProject, OAV("hasParticipant"), EntityKind::kOrganization, "isParticipant",
     OAV("isParticipant"), false},
}};

#undef DCTERMS
#undef FOAF
#undef OAV

const std::array<Language, 25> kLanguages = {{
    {"eng", "en", "English"},    {"fre", "fr", "French"},     {"ger", "de", "German"},
    {"ita", "it", "Italian"},    {"spa", "es", "Spanish"},    {"por", "pt", "Portuguese"},
    {"dut", "nl", "Dutch"},      {"gre", "el", "Greek"},      {"pol", "pl", "Polish"},
    {"swe", "sv", "Swedish"},    {"dan", "da", "Danish"},     {"fin", "fi", "Finnish"},
    {"nor", "no", "Norwegian"},  {"cze", "cs", "Czech"},      {"hun", "hu", "Hungarian"},
    {"rum", "ro", "Romanian"},   {"bul", "bg", "Bulgarian"},  {"hrv", "hr", "Croatian"},
    {"slv", "sl", "Slovenian"},  {"slo", "sk", "Slovak"},     {"est", "et", "Estonian"},
    {"lav", "lv", "Latvian"},    {"lit", "lt", "Lithuanian"}, {"tur", "tr", "Turkish"},
    {"rus", "ru", "Russian"},
}};

// Value pools. No entry contains '#', none equals "null", none is empty or
// has surrounding whitespace; several exercise escaping in every format.
constexpr std::string_view kNamespaces[] = {"dedup_wf_001", "od______2367", "doajarticles", "opendoar____",
                                            "corda_______", "re3data_____", "driver______"};
constexpr std::string_view kTitleHeads[] = {"A Survey of",       "Towards",         "On the Complexity of",
                                            "Scalable",          "Revisiting",      "An Empirical Study of",
                                            "Rethinking",        "Foundations of",  "Lessons Learned from",
                                            "A Framework for",   "Measuring",       "Understanding"};
constexpr std::string_view kTitleTopics[] = {"Linked Open Data",        "Research Infrastructures",
                                             "Scholarly Communication",  "Metadata Aggregation",
                                             "Stream Processing",        "Citation Networks",
                                             "Open Access Repositories", "Digital Libraries",
                                             "Graph Databases",          "Data Provenance",
                                             "Semantic Interoperability", "Bibliometric Indicators"};
constexpr std::string_view kTitleTails[] = {
    "in Europe",
    ", Revisited",
    "Wow! A Case Study",
    "with \"Quoted\" Terms",
    "under C:\\Temp\\paths",
    "for Stra\xc3\x9f" "e, na\xc3\xafve caf\xc3\xa9 and \xce\xbb-calculus",
    "across Two\nLines",
    "in R&D <Prototypes>",
    "at 50% > 40% Load",
    "(Extended Version)",
};
constexpr std::string_view kPublishers[] = {"Springer", "Elsevier", "IEEE",      "ACM",  "Wiley",
                                            "Taylor & Francis", "De Gruyter", "MDPI", "Zenodo"};
constexpr std::string_view kSubjects[] = {"computer science", "information retrieval", "open science",
                                          "metadata",         "semantic web",          "bibliometrics",
                                          "digital libraries", "data management",      "physics"};
constexpr std::string_view kFirstNames[] = {"Paolo", "Nikos",  "Maria", "Jochen", "Sahar", "Christoph",
                                            "Anna",  "Giulia", "Jan",   "Zo\xc3\xab", "Miguel", "Ingrid"};
constexpr std::string_view kLastNames[] = {"Manghi", "Houssos", "Lange",     "Vahdati", "Rossi", "M\xc3\xbcller",
                                           "Novak",  "Garc\xc3\xad" "a", "Jensen", "O'Brien", "Kowalski", "Dupont"};
constexpr std::string_view kCountries[] = {"IT", "GR", "DE", "FR", "ES", "NL", "PL", "SE", "GB", "PT"};
constexpr std::string_view kOrgHeads[] = {"University of", "National Research Council of", "Institute for Science of",
                                          "Technical University of", "Academy of Sciences of"};
constexpr std::string_view kCities[] = {"Pisa", "Athens", "Bonn", "Lyon", "Madrid", "Delft", "Krak\xc3\xb3w",
                                        "Uppsala", "Leeds", "Porto"};
constexpr std::string_view kDatasourceTypes[] = {"pubsrepository::institutional", "pubsrepository::journals",
                                                 "datarepository::unknown", "aggregator::pubsrepository::unknown"};
constexpr std::string_view kDatasourceNames[] = {"Repository", "Open Archive", "Data Hub", "Journal Platform",
                                                 "Digital Collection"};

template <typename T, std::size_t N>
std::string_view pick(SplitMix64& rng, const T (&pool)[N]) {
  return pool[rng.below(N)];
}

std::string two_digits(int v) {
  char buf[8];
  std::snprintf(buf, sizeof buf, "%02d", v);
  return buf;
}

std::string date(int year, int month, int day) { return std::to_string(year) + "-" + two_digits(month) + "-" + two_digits(day); }

std::string slug(std::string_view text) {
  std::string out;
  for (const char c : text) {
    if ((c >= 'a' && c <= 'z') || (c >= '0' && c <= '9')) out.push_back(c);
    else if (c >= 'A' && c <= 'Z') out.push_back(static_cast<char>(c - 'A' + 'a'));
  }
  return out;
}

using Attributes = std::map<std::string, std::vector<std::string>, std::less<>>;

void put(Attributes& attrs, std::string_view name, std::string value) {
  attrs[std::string(name)].push_back(std::move(value));
}

Attributes make_result(SplitMix64& rng, const std::vector<const Language*>& langs) {
  Attributes a;
  std::string title = std::string(pick(rng, kTitleHeads)) + " " + std::string(pick(rng, kTitleTopics));
  if (rng.chance(60)) {
    const auto tail = pick(rng, kTitleTails);
    if (!tail.starts_with(',')) title.push_back(' ');
    title.append(tail);
  }
  put(a, "title", std::move(title));
  const int year = rng.between(1995, 2024);
  put(a, "dateofacceptance", date(year, rng.between(1, 12), rng.between(1, 28)));
  if (rng.chance(90)) put(a, "publisher", std::string(pick(rng, kPublishers)));
  const std::size_t lang_count = rng.chance(15) ? 2 : 1;
  std::vector<std::size_t> chosen;
  while (chosen.size() < std::min(lang_count, langs.size())) {
    const std::size_t i = rng.below(langs.size());
    if (std::find(chosen.begin(), chosen.end(), i) == chosen.end()) chosen.push_back(i);
  }
  for (const std::size_t i : chosen) put(a, "language", std::string(langs[i]->two));
  put(a, "publicationyear", std::to_string(year));
  put(a, "resulttype", rng.chance(80) ? "publication" : "dataset");
  const int subjects = rng.between(0, 2);
  std::set<std::string_view> seen;
  for (int i = 0; i < subjects; ++i) {
    const auto s = pick(rng, kSubjects);
    if (seen.insert(s).second) put(a, "subject", std::string(s));
  }
  return a;
}

Attributes make_person(SplitMix64& rng) {
  Attributes a;
  put(a, "firstname", std::string(pick(rng, kFirstNames)));
  put(a, "secondnames", std::string(pick(rng, kLastNames)));
  if (rng.chance(10)) {
    const auto second = pick(rng, kLastNames);
    if (second != a["secondnames"].front()) put(a, "secondnames", std::string(second));
  }
  if (rng.chance(70)) put(a, "nationality", std::string(pick(rng, kCountries)));
  return a;
}

Attributes make_project(SplitMix64& rng) {
  Attributes a;
  put(a, "code", std::to_string(200000 + rng.below(800000)));
  const auto topic = pick(rng, kTitleTopics);
  std::string acronym;
  for (const char c : topic) {
    if (c >= 'A' && c <= 'Z') acronym.push_back(c);
  }
  acronym += std::to_string(rng.between(1, 2030));
  put(a, "acronym", std::move(acronym));
  put(a, "title", std::string(pick(rng, kTitleHeads)) + " " + std::string(topic));
  const int start = rng.between(2000, 2022);
  const int month = rng.between(1, 12);
  put(a, "startdate", date(start, month, 1));
  put(a, "enddate", date(start + rng.between(2, 4), month, 28));
  return a;
}

Attributes make_organization(SplitMix64& rng) {
  Attributes a;
  const auto city = pick(rng, kCities);
  put(a, "legalname", std::string(pick(rng, kOrgHeads)) + " " + std::string(city));
  if (rng.chance(60)) put(a, "legalshortname", "U" + slug(city).substr(0, 3));
  put(a, "country", std::string(pick(rng, kCountries)));
  if (rng.chance(75)) put(a, "websiteurl", "https://www." + slug(city) + ".example.org/");
  return a;
}

Attributes make_datasource(SplitMix64& rng) {
  Attributes a;
  const auto city = pick(rng, kCities);
  const auto name = pick(rng, kDatasourceNames);
  put(a, "officialname", std::string(city) + " " + std::string(name));
  if (rng.chance(50)) put(a, "englishname", std::string(name) + " of " + std::string(city));
  put(a, "datasourcetype", std::string(pick(rng, kDatasourceTypes)));
  put(a, "websiteurl", "https://" + slug(name) + "." + slug(city) + ".example.org/?page=1&lang=en");
  return a;
}

/// md5 over sorted "name=value" lines; kind and sequence number make every
/// generated entity distinct even when its attributes repeat.
std::string attribute_hash(EntityKind kind, std::uint64_t seq, const Attributes& attrs) {
  std::vector<std::string> lines{"kind=" + std::string(kind_name(kind)), "_seq=" + std::to_string(seq)};
  for (const auto& [name, values] : attrs) {
    for (const auto& v : values) lines.push_back(name + "=" + v);
  }
  std::sort(lines.begin(), lines.end());
  std::string canonical;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (i > 0) canonical.push_back('\n');
    canonical += lines[i];
  }
  return md5_hex(canonical);
}

void add_link(EntityGraph& g, const LinkDef& def, const EntityId& subject, const EntityId& object,
              std::optional<std::int64_t> ranking) {
  g.links.push_back(Link{subject, std::string(def.family), object, ranking});
  g.links.push_back(Link{object, std::string(def.inverse_family), subject, ranking});
}

void finish(EntityGraph& g) {
  std::sort(g.entities.begin(), g.entities.end(), [](const Entity& a, const Entity& b) { return a.id < b.id; });
  std::sort(g.links.begin(), g.links.end(), [](const Link& a, const Link& b) {
    return std::tie(a.subject, a.family, a.object) < std::tie(b.subject, b.family, b.object);
  });
}

Term object_for(const AttributeDef& def, const std::string& value) {
  switch (def.form) {
    case ObjectForm::kPlain: return Literal::plain(value);
    case ObjectForm::kEnglish: return Literal::tagged(value, "en");
    case ObjectForm::kDate: return Literal::typed(value, Iri(std::string(iri::kXsd) + "date"));
    case ObjectForm::kInteger: return Literal::typed(value, Iri(std::string(iri::kXsd) + "integer"));
    case ObjectForm::kResultClass: return Iri(std::string(*result_class(value)));
  }
  return Literal::plain(value);
}

}  // namespace

const KindDef& kind_def(EntityKind kind) { return kKinds[static_cast<std::size_t>(kind)]; }

std::span<const LinkDef> link_defs() { return kLinks; }

const LinkDef* find_link(std::string_view family, bool* inverse) {
  for (const auto& def : kLinks) {
    if (def.family == family || def.inverse_family == family) {
      if (inverse != nullptr) *inverse = def.inverse_family == family;
      return &def;
    }
  }
  return nullptr;
}

std::optional<std::string_view> result_class(std::string_view resulttype) {
  if (resulttype == "publication") return "http://purl.org/ontology/bibo/Publication";
  if (resulttype == "dataset") return "http://www.w3.org/ns/dcat#Dataset";
  return std::nullopt;
}

std::span<const Language> languages() { return kLanguages; }

const Language* find_language_by_three(std::string_view code) {
  for (const auto& l : kLanguages) {
    if (l.three == code) return &l;
  }
  return nullptr;
}

const Language* find_language_by_two(std::string_view code) {
  for (const auto& l : kLanguages) {
    if (l.two == code) return &l;
  }
  return nullptr;
}

std::size_t GenConfig::total() const {
  std::size_t n = 0;
  for (const auto c : counts) n += c;
  return n;
}

GenConfig GenConfig::for_total(std::size_t entities, std::uint64_t seed) {
  GenConfig config;
  config.seed = seed;
  config.count(EntityKind::kResult) = entities * 40 / 100;
  config.count(EntityKind::kPerson) = entities * 35 / 100;
  config.count(EntityKind::kProject) = entities * 10 / 100;
  config.count(EntityKind::kOrganization) = entities * 10 / 100;
  config.count(EntityKind::kDatasource) =
      entities - config.count(EntityKind::kResult) - config.count(EntityKind::kPerson) -
      config.count(EntityKind::kProject) - config.count(EntityKind::kOrganization);
  return config;
}

const std::vector<std::string>* Entity::values(std::string_view name) const {
  const auto it = attributes.find(name);
  return it == attributes.end() ? nullptr : &it->second;
}

const Entity* EntityGraph::find(const EntityId& id) const {
  const auto it = std::lower_bound(entities.begin(), entities.end(), id,
                                   [](const Entity& e, const EntityId& key) { return e.id < key; });
  return it != entities.end() && it->id == id ? &*it : nullptr;
}

std::size_t EntityGraph::count(EntityKind kind) const {
  return static_cast<std::size_t>(
      std::count_if(entities.begin(), entities.end(), [kind](const Entity& e) { return e.id.kind() == kind; }));
}

EntityGraph generate(const GenConfig& config) {
  if (config.authors_min < 1 || config.authors_max < config.authors_min) {
    throw Error(ErrorCode::kConfigError, "authorsPerResult range must satisfy 1 <= min <= max");
  }
  std::vector<const Language*> langs;
  if (config.languages.empty()) {
    for (const auto& l : kLanguages) langs.push_back(&l);
  } else {
    for (const auto& code : config.languages) {
      const Language* l = find_language_by_three(code);
      if (l == nullptr) throw Error(ErrorCode::kConfigError, "unsupported language code '" + code + "'");
      langs.push_back(l);
    }
  }

  SplitMix64 rng(config.seed);
  EntityGraph g;
  std::uint64_t seq = 0;
  std::array<std::vector<EntityId>, 5> ids;
  // Fixed kind order keeps the random stream, and thus the corpus, stable.
  for (const EntityKind kind : {EntityKind::kDatasource, EntityKind::kOrganization, EntityKind::kPerson,
                                EntityKind::kProject, EntityKind::kResult}) {
    for (std::size_t i = 0; i < config.count(kind); ++i) {
      Attributes attrs;
      switch (kind) {
        case EntityKind::kDatasource: attrs = make_datasource(rng); break;
        case EntityKind::kOrganization: attrs = make_organization(rng); break;
        case EntityKind::kPerson: attrs = make_person(rng); break;
        case EntityKind::kProject: attrs = make_project(rng); break;
        case EntityKind::kResult: attrs = make_result(rng, langs); break;
      }
      const std::string ns(pick(rng, kNamespaces));
      EntityId id(kind, ns, attribute_hash(kind, seq++, attrs));
      ids[static_cast<std::size_t>(kind)].push_back(id);
      g.entities.push_back(Entity{std::move(id), std::move(attrs)});
    }
  }

  const auto& persons = ids[static_cast<std::size_t>(EntityKind::kPerson)];
  const auto& projects = ids[static_cast<std::size_t>(EntityKind::kProject)];
  const auto& orgs = ids[static_cast<std::size_t>(EntityKind::kOrganization)];
  const auto& sources = ids[static_cast<std::size_t>(EntityKind::kDatasource)];
  for (const auto& result : ids[static_cast<std::size_t>(EntityKind::kResult)]) {
    if (!persons.empty()) {
      const auto wanted = static_cast<std::size_t>(rng.between(config.authors_min, config.authors_max));
      std::vector<std::size_t> chosen;
      while (chosen.size() < std::min(wanted, persons.size())) {
        const std::size_t p = rng.below(persons.size());
        if (std::find(chosen.begin(), chosen.end(), p) == chosen.end()) chosen.push_back(p);
      }
      for (std::size_t rank = 0; rank < chosen.size(); ++rank) {
        add_link(g, kLinks[0], result, persons[chosen[rank]], static_cast<std::int64_t>(rank + 1));
      }
    }
    if (!projects.empty() && rng.chance(50)) add_link(g, kLinks[1], result, projects[rng.below(projects.size())], {});
    if (!sources.empty()) add_link(g, kLinks[2], result, sources[rng.below(sources.size())], {});
  }
  for (const auto& project : projects) {
    if (orgs.empty()) break;
    const std::size_t first = rng.below(orgs.size());
    add_link(g, kLinks[3], project, orgs[first], {});
    if (orgs.size() > 1 && rng.chance(50)) {
      std::size_t second = rng.below(orgs.size() - 1);
      if (second >= first) ++second;
      add_link(g, kLinks[3], project, orgs[second], {});
    }
  }
  finish(g);
  return g;
}

EntityGraph running_example() {
  EntityGraph g;
  const EntityId result(EntityKind::kResult, "dedup_wf_001", "39b91277f9a2c25b1655436ab996a76b");
  const EntityId paolo(EntityKind::kPerson, "dedup_wf_001", "98973e5bd1c7f2a64e0b8d13c5a9f720");
  const EntityId nikos(EntityKind::kPerson, "dedup_wf_001", "ef29a4c07d5b18e3f6920c4b7d1e8a53");
  Attributes r;
  put(r, "title", "The Data Model of the OpenAIRE Scientific Communication e-Infrastructure");
  put(r, "dateofacceptance", "2012-01-01");
  put(r, "publisher", "Springer");
  put(r, "language", "en");
  put(r, "publicationyear", "2012");
  put(r, "resulttype", "publication");
  g.entities.push_back(Entity{result, std::move(r)});
  Attributes p;
  put(p, "firstname", "Paolo");
  put(p, "secondnames", "Manghi");
  g.entities.push_back(Entity{paolo, std::move(p)});
  Attributes n;
  put(n, "firstname", "Nikos");
  put(n, "secondnames", "Houssos");
  g.entities.push_back(Entity{nikos, std::move(n)});
  add_link(g, kLinks[0], result, paolo, 1);
  add_link(g, kLinks[0], result, nikos, 2);
  finish(g);
  return g;
}

std::vector<Triple> oracle_triples(const EntityGraph& graph) {
  std::vector<Triple> out;
  const Iri type{std::string(iri::kRdfType)};
  for (const auto& entity : graph.entities) {
    const Iri subject = entity_uri(entity.id);
    const KindDef& def = kind_def(entity.id.kind());
    for (const auto cls : def.classes) out.push_back(Triple{subject, type, Iri(std::string(cls))});
    for (const auto& attr : def.attributes) {
      const auto* values = entity.values(attr.name);
      if (values == nullptr) continue;
      for (const auto& v : *values) {
        out.push_back(Triple{subject, Iri(std::string(attr.predicate)), object_for(attr, v)});
      }
    }
  }
  for (const auto& link : graph.links) {
    bool inverse = false;
    const LinkDef* def = find_link(link.family, &inverse);
    const auto predicate = inverse ? def->inverse_predicate : def->predicate;
    out.push_back(Triple{entity_uri(link.subject), Iri(std::string(predicate)), entity_uri(link.object)});
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::string> oracle_lines(const EntityGraph& graph) {
  std::vector<std::string> lines;
  for (const auto& t : oracle_triples(graph)) lines.push_back(to_ntriples(t));
  std::sort(lines.begin(), lines.end());
  lines.erase(std::unique(lines.begin(), lines.end()), lines.end());
  return lines;
}

}  // namespace lodforge::datagen
