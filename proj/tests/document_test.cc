// Copyright 2026 The Annolog Authors.
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

#include "annolog/document.h"

#include "annolog/error.h"
#include "doctest.h"
#include "testing/testing.h"

namespace annolog {
namespace {

using testing::LoadFixture;
using testing::SharedTypes;

std::string SchemaFailure(const std::string &text) {
  try {
    ParseDocument(text, SharedTypes());
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::kSchemaError);
    return e.message();
  }
  FAIL("expected a SchemaError");
  return {};
}

const char kMinimal[] = R"({"id": "d", "text": "Hi there", "root": 1,
  "nodes": [{"id": 1, "begin": 0, "end": 2, "lemma": "hi", "pennTag": "UH"},
            {"id": 2, "begin": 3, "end": 8, "lemma": "there",
             "pennTag": "RB", "semanticTypes": ["x.Place"]}],
  "edges": [{"type": "child", "from": 1, "to": 2}]})";

TEST_CASE("documents load into parse nodes, edges and a question") {
  Document doc = ParseDocument(kMinimal, SharedTypes());
  CHECK(doc.cas.document_id() == "d");
  CHECK(doc.cas.AnnotationsOfType(types::kParseNode).size() == 2);
  auto deps = doc.cas.AnnotationsOfType(types::kDependency);
  REQUIRE(deps.size() == 1);
  CHECK(deps[0]->begin == 0);
  CHECK(deps[0]->end == 8);
  auto q = doc.cas.AnnotationsOfType(types::kQuestion);
  REQUIRE(q.size() == 1);
  CHECK(q[0]->end == 8);
}

TEST_CASE("schema errors name the offending field") {
  CHECK(SchemaFailure(R"({"id": "d", "text": "", "nodes": [], "edges": []})")
            .find("$.root") != std::string::npos);
  CHECK(SchemaFailure(R"({"id": "d", "text": "ab", "root": 1,
      "nodes": [{"id": 1, "begin": 0, "end": 9, "lemma": "a",
                 "pennTag": "X"}], "edges": []})")
            .find("$.nodes[0]") != std::string::npos);
  CHECK(SchemaFailure(R"({"id": "d", "text": "ab", "root": 1,
      "nodes": [{"id": 1, "begin": 0, "end": 1, "lemma": "a",
                 "pennTag": "X"}],
      "edges": [{"type": "likes", "from": 1, "to": 1}]})")
            .find("$.edges[0].type") != std::string::npos);
  CHECK(SchemaFailure(R"({"id": "d", "text": "ab", "root": 5,
      "nodes": [{"id": 1, "begin": 0, "end": 1, "lemma": "a",
                 "pennTag": "X"}], "edges": []})")
            .find("$.root") != std::string::npos);
  CHECK(SchemaFailure("{not json").find("$") != std::string::npos);
  CHECK(SchemaFailure("[]").find("$") != std::string::npos);
}

TEST_CASE("output keeps the input and lists derived annotations") {
  Document doc = ParseDocument(kMinimal, SharedTypes());
  doc.cas.AddAnnotation(types::kFocus, 3, 8,
                        {{"patternId", std::string("P")},
                         {"nodes", std::vector<AnnotationRef>{{2}}}});
  Json out = DocumentToJson(doc);
  CHECK(out["id"] == "d");
  CHECK(out["nodes"].size() == 2);
  REQUIRE(out["annotations"].size() == 1);
  const Json &a = out["annotations"][0];
  CHECK(a["type"] == types::kFocus);
  CHECK(a["begin"] == 3);
  CHECK(a["features"]["nodes"] == Json::array({2}));
  std::string text = SerializeDocument(doc);
  CHECK(text.back() == '\n');
}

TEST_CASE("input annotations are ignored on load") {
  Document doc = ParseDocument(kMinimal, SharedTypes());
  doc.cas.AddAnnotation(types::kFocus, 0, 2);
  Document again = ParseDocument(SerializeDocument(doc), SharedTypes());
  CHECK(again.cas.AnnotationsOfType(types::kFocus).empty());
  CHECK(SerializeDocument(again) ==
        SerializeDocument(ParseDocument(kMinimal, SharedTypes())));
}

TEST_CASE("every fixture loads") {
  for (const char *id : {"q_symbol", "q_river", "q_hexagons", "q_dome",
                         "q_capitol", "q_woolf", "q_club", "q_imperative",
                         "q_empty", "s_castof", "s_castof_two"}) {
    Document doc = LoadFixture(id);
    CHECK(doc.cas.document_id() == id);
  }
}

TEST_CASE("symbol fixture offsets") {
  Document doc = LoadFixture("q_symbol");
  CHECK(doc.cas.text() == "What is the democratic party symbol?");
  bool found = false;
  for (const Annotation *a : doc.cas.AnnotationsOfType(types::kParseNode)) {
    if (doc.cas.CoveredText(*a) == "symbol") {
      CHECK(a->begin == 29);
      CHECK(a->end == 35);
      found = true;
    }
  }
  CHECK(found);
}

TEST_CASE("load errors carry the path") {
  try {
    LoadDocument("/nonexistent/doc.json", SharedTypes());
    FAIL("expected IoError");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::kIoError);
  }
}

}  // namespace
}  // namespace annolog
