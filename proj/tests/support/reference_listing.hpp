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


// The running-example triples, transcribed by hand from the reference
// Turtle listing with prefixes expanded and the abbreviated identifiers
// filled in. "foaf:firstname" on the second person is read as firstName.
#pragma once

#include <algorithm>
#include <string>
#include <vector>

namespace lodforge::test {

inline std::vector<std::string> reference_listing_lines() {
  const std::string oad = "http://lod.openaire.eu/data/";
  const std::string oav = "http://lod.openaire.eu/vocab#";
  const std::string rdf_type = "<http://www.w3.org/1999/02/22-rdf-syntax-ns#type>";
  const std::string dct = "http://purl.org/dc/terms/";
  const std::string foaf = "http://xmlns.com/foaf/0.1/";
  const std::string xsd = "http://www.w3.org/2001/XMLSchema#";

  const std::string r = "<" + oad + "result/dedup_wf_001::39b91277f9a2c25b1655436ab996a76b>";
  const std::string p1 = "<" + oad + "person/dedup_wf_001::98973e5bd1c7f2a64e0b8d13c5a9f720>";
  const std::string p2 = "<" + oad + "person/dedup_wf_001::ef29a4c07d5b18e3f6920c4b7d1e8a53>";

  std::vector<std::string> lines = {
      r + " " + rdf_type + " <" + oav + "Result> .",
      r + " " + rdf_type + " <http://purl.org/ontology/bibo/Publication> .",
      r + " <" + dct + "title> \"The Data Model of the OpenAIRE Scientific Communication "
          "e-Infrastructure\"@en .",
      r + " <" + dct + "dateAccepted> \"2012-01-01\"^^<" + xsd + "date> .",
      r + " <" + dct + "language> \"en\" .",
      r + " <" + oav + "publicationYear> \"2012\"^^<" + xsd + "integer> .",
      r + " <" + dct + "publisher> \"Springer\" .",
      r + " <" + dct + "creator> " + p1 + " .",
      r + " <" + dct + "creator> " + p2 + " .",
      p1 + " " + rdf_type + " <" + foaf + "Person> .",
      p1 + " <" + foaf + "firstName> \"Paolo\" .",
      p1 + " <" + foaf + "lastName> \"Manghi\" .",
      p1 + " <" + oav + "isAuthorOf> " + r + " .",
      p2 + " " + rdf_type + " <" + foaf + "Person> .",
      p2 + " <" + foaf + "firstName> \"Nikos\" .",
      p2 + " <" + foaf + "lastName> \"Houssos\" .",
      p2 + " <" + oav + "isAuthorOf> " + r + " .",
  };
  std::sort(lines.begin(), lines.end());
  return lines;
}

}  // namespace lodforge::test
