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

// Exercises the shared library through its C interface only.

#include "annolog/annolog.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

std::string Data(const std::string &relative) {
  return std::string(ANNOLOG_DATA_DIR) + "/" + relative;
}

std::string Slurp(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string TakeString(char *s) {
  std::string out = s ? s : "";
  annolog_string_free(s);
  return out;
}

struct Session {
  annolog_session *handle = nullptr;
  explicit Session(const annolog_lexicon *lex = nullptr) {
    REQUIRE(annolog_session_create(lex, &handle) == ANNOLOG_OK);
  }
  ~Session() { annolog_session_free(handle); }

  std::vector<std::string> Query(const char *goal) {
    annolog_solutions *s = nullptr;
    REQUIRE(annolog_session_query(handle, goal, &s) == ANNOLOG_OK);
    std::vector<std::string> lines;
    for (size_t i = 0; i < annolog_solutions_count(s); ++i) {
      lines.push_back(annolog_solutions_line(s, i));
    }
    annolog_solutions_free(s);
    return lines;
  }
};

TEST_CASE("version") { CHECK(std::string(annolog_version()) == "1.0.0"); }

TEST_CASE("sessions consult rules and answer queries") {
  Session s;
  REQUIRE(annolog_session_consult_text(s.handle, "p(1). p(2). q(X) :- p(X), !.") ==
          ANNOLOG_OK);
  CHECK(s.Query("q(X)") == std::vector<std::string>{"X = 1"});
  CHECK(s.Query("member(X, [a, b])") ==
        std::vector<std::string>{"X = a", "X = b"});
  CHECK(s.Query("p(3)").empty());
}

TEST_CASE("errors map to status classes") {
  Session s;
  CHECK(annolog_session_consult_text(s.handle, "p(") ==
        ANNOLOG_ERROR_RULE_LOAD);
  CHECK(std::string(annolog_last_error_code()) == "ParseError");
  annolog_solutions *out = nullptr;
  CHECK(annolog_session_query(s.handle, "nope(X)", &out) ==
        ANNOLOG_ERROR_RUNTIME);
  CHECK(out == nullptr);
  CHECK(std::string(annolog_last_error_code()) == "UnknownPredicate");
  REQUIRE(annolog_session_consult_text(s.handle, "loop :- loop.") ==
          ANNOLOG_OK);
  REQUIRE(annolog_session_set_limits(s.handle, 500, 100) == ANNOLOG_OK);
  CHECK(annolog_session_query(s.handle, "loop", &out) ==
        ANNOLOG_ERROR_RUNTIME);
  CHECK(std::string(annolog_last_error_code()) == "ResourceExhausted");
  CHECK(annolog_session_load_document(s.handle, "/nonexistent.json") ==
        ANNOLOG_ERROR_USAGE);
  CHECK(annolog_session_query(nullptr, "p", &out) == ANNOLOG_ERROR_USAGE);
  CHECK(std::string(annolog_last_error_code()) == "InvalidArgument");
}

TEST_CASE("document facts with the lexicon") {
  annolog_lexicon *lex = nullptr;
  REQUIRE(annolog_lexicon_load(Data("lexicon").c_str(), &lex) == ANNOLOG_OK);
  {
    Session s(lex);
    REQUIRE(annolog_session_load_document(
                s.handle, Data("fixtures/docs/s_castof.json").c_str()) ==
            ANNOLOG_OK);
    REQUIRE(annolog_session_consult(
                s.handle, Data("rules/relations.pl").c_str()) == ANNOLOG_OK);
    CHECK(s.Query("castOf(P, C)") ==
          std::vector<std::string>{"P = n1, C = n6"});
  }
  annolog_lexicon_free(lex);
}

TEST_CASE("pipeline run and single document annotation") {
  annolog_pipeline *p = nullptr;
  REQUIRE(annolog_pipeline_load(Data("pipeline.json").c_str(), &p) ==
          ANNOLOG_OK);
  auto out = std::filesystem::temp_directory_path() / "annolog_c_api_test";
  std::filesystem::remove_all(out);
  std::filesystem::create_directories(out);
  char *report = nullptr;
  int exit_class = -1;
  REQUIRE(annolog_pipeline_run(p, Data("fixtures/docs").c_str(),
                               out.string().c_str(), &report,
                               &exit_class) == ANNOLOG_OK);
  CHECK(exit_class == 0);
  auto j = nlohmann::json::parse(TakeString(report));
  CHECK(j["summary"]["failed"] == 0);

  char *annotated = nullptr;
  std::string doc = Slurp(Data("fixtures/docs/q_capitol.json"));
  REQUIRE(annolog_annotate_json(p, doc.c_str(), &annotated) == ANNOLOG_OK);
  std::string text = TakeString(annotated);
  CHECK(text == Slurp((out / "q_capitol.json").string()));
  CHECK(text.find("timeAnswerType") != std::string::npos);

  CHECK(annolog_annotate_json(p, "{\"id\": \"x\"}", &annotated) ==
        ANNOLOG_ERROR_SCHEMA);
  CHECK(std::string(annolog_last_error()).find("$.") != std::string::npos);
  annolog_pipeline_free(p);
  std::filesystem::remove_all(out);
}

TEST_CASE("pipeline load failures") {
  annolog_pipeline *p = nullptr;
  CHECK(annolog_pipeline_load("/nonexistent/pipeline.json", &p) ==
        ANNOLOG_ERROR_USAGE);
  CHECK(p == nullptr);
}

TEST_CASE("evaluation") {
  annolog_report *r = nullptr;
  REQUIRE(annolog_evaluate(Data("eval/pred.tsv").c_str(),
                           Data("eval/gold.tsv").c_str(),
                           Data("lexicon/taxonomy.tsv").c_str(),
                           &r) == ANNOLOG_OK);
  CHECK(std::string(annolog_report_table(r)).find("33.3") !=
        std::string::npos);
  auto j = nlohmann::json::parse(annolog_report_json(r));
  CHECK(j["accuracy"] == "33.3");
  annolog_report_free(r);
  CHECK(annolog_evaluate(Data("eval/pred.tsv").c_str(), "/nonexistent.tsv",
                         Data("lexicon/taxonomy.tsv").c_str(),
                         &r) == ANNOLOG_ERROR_USAGE);
}

}  // namespace
