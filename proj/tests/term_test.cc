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

#include "annolog/term.h"

#include "annolog/error.h"
#include "doctest.h"

namespace annolog {
namespace {

Term X() { return Term::Var(1, "X"); }
Term Y() { return Term::Var(2, "Y"); }
Term Z() { return Term::Var(3, "Z"); }
Term A(const char *s) { return Term::Atom(s); }
Term F(const char *f, std::vector<Term> args) {
  return Term::Compound(f, std::move(args));
}

TEST_CASE("terms print in rule syntax") {
  CHECK(A("be").ToString() == "be");
  CHECK(A("com.ibm.hutt.Person").ToString() == "\"com.ibm.hutt.Person\"");
  CHECK(A("Hello world").ToString() == "\"Hello world\"");
  CHECK(Term::Int(-3).ToString() == "-3");
  CHECK(X().ToString() == "X");
  CHECK(F("f", {X(), A("a")}).ToString() == "f(X,a)");
  CHECK(Term::List({A("a"), A("b")}).ToString() == "[a,b]");
  CHECK(Term::List({A("a")}, X()).ToString() == "[a|X]");
  CHECK(Term::Nil().ToString() == "[]");
}

TEST_CASE("compound terms need arguments") {
  CHECK_THROWS_AS(Term::Compound("f", {}), Error);
}

TEST_CASE("list helpers") {
  Term l = Term::List({A("a"), Term::Int(1)});
  REQUIRE(l.ListItems());
  CHECK(l.ListItems()->size() == 2);
  CHECK(l.is_cons());
  CHECK(Term::Nil().is_nil());
  CHECK_FALSE(Term::List({A("a")}, X()).ListItems());
  CHECK_FALSE(A("a").ListItems());
}

TEST_CASE("groundness and variable collection") {
  CHECK(F("f", {A("a"), Term::Int(2)}).IsGround());
  CHECK_FALSE(F("f", {A("a"), X()}).IsGround());
  std::vector<VarId> vars;
  F("g", {X(), F("h", {Y(), X()})}).CollectVars(&vars);
  CHECK(vars.size() >= 2);
  CHECK(std::find(vars.begin(), vars.end(), 1) != vars.end());
  CHECK(std::find(vars.begin(), vars.end(), 2) != vars.end());
}

TEST_CASE("unification binds variables") {
  auto s = Unify(F("f", {X(), A("b")}), F("f", {A("a"), Y()}));
  REQUIRE(s);
  CHECK(Apply(*s, X()) == A("a"));
  CHECK(Apply(*s, Y()) == A("b"));
}

TEST_CASE("unification failures") {
  CHECK_FALSE(Unify(A("a"), A("b")));
  CHECK_FALSE(Unify(F("f", {X()}), F("g", {X()})));
  CHECK_FALSE(Unify(F("f", {X()}), F("f", {X(), Y()})));
  CHECK_FALSE(Unify(Term::Int(1), A("1")));
  CHECK_FALSE(Unify(F("f", {X(), X()}), F("f", {A("a"), A("b")})));
}

TEST_CASE("occurs check") {
  Term fx = F("f", {X()});
  CHECK(Unify(X(), fx, {}, OccursCheck::kOff));
  CHECK_FALSE(Unify(X(), fx, {}, OccursCheck::kOn));
}

TEST_CASE("variable chains resolve through Apply") {
  auto s = Unify(F("f", {X(), Y()}), F("f", {Y(), Z()}));
  REQUIRE(s);
  s = Unify(Z(), A("c"), *s);
  REQUIRE(s);
  CHECK(Apply(*s, X()) == A("c"));
}

TEST_CASE("substitution trail undoes bindings") {
  Substitution s;
  std::size_t mark = s.Mark();
  REQUIRE(UnifyInPlace(F("f", {X(), Y()}), F("f", {A("a"), A("b")}), s));
  CHECK(s.size() == 2);
  s.UndoTo(mark);
  CHECK(s.empty());
  CHECK(s.Lookup(1) == nullptr);
}

TEST_CASE("renaming apart preserves structure") {
  Clause c;
  c.head = F("p", {X(), Y()});
  c.body.push_back(Goal::Call(F("q", {Y(), X()})));
  VarIdSource fresh(100);
  Clause r = RenameApart(c, fresh);
  CHECK(AlphaEquivalent(c, r));
  std::vector<VarId> vars;
  r.head.CollectVars(&vars);
  for (VarId v : vars) CHECK(v >= 100);
}

TEST_CASE("alpha equivalence distinguishes sharing") {
  CHECK(AlphaEquivalent(F("f", {X(), Y()}), F("f", {Y(), X()})));
  CHECK_FALSE(AlphaEquivalent(F("f", {X(), X()}), F("f", {X(), Y()})));
  CHECK_FALSE(AlphaEquivalent(F("f", {X()}), F("f", {A("a")})));
}

TEST_CASE("predicate keys") {
  auto k = KeyOf(F("castOf", {X(), Y()}));
  REQUIRE(k);
  CHECK(k->ToString() == "castOf/2");
  CHECK(KeyOf(A("true"))->arity == 0);
  CHECK_FALSE(KeyOf(X()));
  CHECK_FALSE(KeyOf(Term::Int(3)));
}

}  // namespace
}  // namespace annolog
