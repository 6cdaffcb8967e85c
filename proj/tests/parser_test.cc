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

#include "annolog/parser.h"

#include "annolog/error.h"
#include "doctest.h"

namespace annolog {
namespace {

TEST_CASE("facts and rules parse") {
  SourceProgram p = ParseProgram(R"(
p(a).
q(X) :- p(X), !.
r(X, Y) :- p(X), \+ q(Y), X = Y, X == Y.
)");
  REQUIRE(p.clauses.size() == 3);
  CHECK(p.clauses[0].is_fact());
  CHECK(p.clauses[1].body.size() == 2);
  CHECK(p.clauses[1].body[1].kind == Goal::Kind::kCut);
  CHECK(p.clauses[2].body[1].kind == Goal::Kind::kNot);
  CHECK(p.clauses[2].body[2].ToString() == "X = Y");
  CHECK(p.clauses[2].body[3].ToString() == "X == Y");
}

TEST_CASE("quoted atoms, lists and module-qualified goals") {
  SourceProgram p = ParseProgram(
      "c(P) :- lemmaForm(V, T), wordNet:synonym(T, [\"be\", 'play']), "
      "semanticType(P, \"com.ibm.hutt.Person\").");
  REQUIRE(p.clauses.size() == 1);
  const Goal &g = p.clauses[0].body[1];
  CHECK(g.module == "wordNet");
  CHECK(g.term.name() == "synonym");
  CHECK(g.term.args()[1].ListItems()->size() == 2);
  CHECK(p.clauses[0].body[2].term.args()[1].name() == "com.ibm.hutt.Person");
}

TEST_CASE("clause labels come from @id comments or defaults") {
  SourceProgram p = ParseProgram(R"(
% @id FIRST
f(a).
f(b). % trailing comment
% plain comment
f(c).
)");
  REQUIRE(p.clauses.size() == 3);
  CHECK(p.clauses[0].label == "FIRST");
  CHECK(p.clauses[1].label == "f/1#2");
  CHECK(p.clauses[2].label == "f/1#3");
}

TEST_CASE("anonymous variables are distinct") {
  SourceProgram p = ParseProgram("p(_, _).");
  auto args = p.clauses[0].head.args();
  CHECK(args[0].var_id() != args[1].var_id());
}

TEST_CASE("named variables are shared within a clause") {
  SourceProgram p = ParseProgram("p(X, X).");
  auto args = p.clauses[0].head.args();
  CHECK(args[0].var_id() == args[1].var_id());
}

TEST_CASE("parse errors carry line and column") {
  try {
    ParseProgram("p(");
    FAIL("expected a ParseError");
  } catch (const ParseError &e) {
    CHECK(e.line() == 1);
    CHECK(e.column() == 3);
    CHECK(e.code() == ErrorCode::kParseError);
  }
  try {
    ParseProgram("p(a).\nq(b) :- .");
    FAIL("expected a ParseError");
  } catch (const ParseError &e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(ParseProgram("p(a)"), ParseError);
  CHECK_THROWS_AS(ParseProgram("X :- p."), ParseError);
}

TEST_CASE("queries list their named variables") {
  Query q = ParseQuery("member(X, [a, b]), Y = X, _ = Y");
  CHECK(q.goals.size() == 3);
  REQUIRE(q.variables.size() == 2);
  CHECK(q.variables[0].first == "X");
  CHECK(q.variables[1].first == "Y");
}

TEST_CASE("printing round-trips") {
  const char *text = R"(
% @id WHAT
focus(R, [P]) :- getDescendantNodes(R, V), lemmaForm(V, "be"), \+ p(V), wordNet:synonym(V, [a|T]), !.
coveredText(n1, "What's this?").
span(n1, 0, -4).
)";
  SourceProgram a = ParseProgram(text);
  SourceProgram b = ParseProgram(PrintProgram(a));
  REQUIRE(a.clauses.size() == b.clauses.size());
  for (std::size_t i = 0; i < a.clauses.size(); ++i) {
    CHECK(AlphaEquivalent(a.clauses[i], b.clauses[i]));
    CHECK(a.clauses[i].label == b.clauses[i].label);
  }
}

TEST_CASE("missing rule files raise IoError") {
  try {
    ParseProgramFile("/nonexistent/rules.pl");
    FAIL("expected an error");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::kIoError);
  }
}

}  // namespace
}  // namespace annolog
