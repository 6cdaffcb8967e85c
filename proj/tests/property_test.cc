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

// Randomized properties of unification and resolution.

#include <set>

#include "annolog/parser.h"
#include "annolog/solver.h"
#include "annolog/term.h"
#include "doctest.h"
#include "testing/testing.h"

namespace annolog {
namespace {

using testing::BottomUp;
using testing::DlProgram;
using testing::ProgramKb;
using testing::RandomProgram;
using testing::SolverAnswerList;
using testing::SolverAnswers;
using testing::TermGen;
using testing::Tuple;

constexpr int kUnifyPairs = 1500;
constexpr int kPrograms = 300;

std::vector<VarId> VarsOf(std::initializer_list<Term> terms) {
  std::vector<VarId> out;
  for (const Term &t : terms) t.CollectVars(&out);
  return out;
}

TEST_CASE("property: unification is symmetric") {
  TermGen gen(101);
  int unified = 0;
  for (int i = 0; i < kUnifyPairs; ++i) {
    Term a = gen.Random(3);
    Term b = gen.Random(3);
    auto ab = Unify(a, b, {}, OccursCheck::kOn);
    auto ba = Unify(b, a, {}, OccursCheck::kOn);
    REQUIRE(ab.has_value() == ba.has_value());
    if (!ab) continue;
    ++unified;
    Term ab_a = Apply(*ab, a);
    CHECK(ab_a == Apply(*ab, b));
    CHECK(Apply(*ba, a) == Apply(*ba, b));
    CHECK(AlphaEquivalent(ab_a, Apply(*ba, a)));
  }
  // The generator must exercise both outcomes.
  CHECK(unified > kUnifyPairs / 10);
  CHECK(unified < kUnifyPairs);
}

TEST_CASE("property: apply is idempotent") {
  TermGen gen(202);
  for (int i = 0; i < kUnifyPairs; ++i) {
    Term a = gen.Random(3);
    Term b = gen.Random(3);
    auto s = Unify(a, b, {}, OccursCheck::kOn);
    if (!s) continue;
    for (const Term &t : {a, b, gen.Random(3)}) {
      Term once = Apply(*s, t);
      CHECK(Apply(*s, once) == once);
    }
  }
}

TEST_CASE("property: every unifier factors through the mgu") {
  TermGen gen(303);
  for (int i = 0; i < kUnifyPairs; ++i) {
    Term ground = gen.Ground(3);
    std::map<std::string, VarId> pool;
    VarId next = 1;
    Term a = gen.Generalize(ground, &pool, &next);
    Term b = gen.Generalize(ground, &pool, &next);
    // theta grounds both generalizations back to the same term.
    auto theta = Unify(a, ground);
    REQUIRE(theta);
    theta = Unify(b, ground, *theta);
    REQUIRE(theta);
    CHECK(Apply(*theta, a) == ground);
    CHECK(Apply(*theta, b) == ground);

    auto mgu = Unify(a, b, {}, OccursCheck::kOn);
    REQUIRE(mgu);
    CHECK(Apply(*mgu, a) == Apply(*mgu, b));
    for (VarId v : VarsOf({a, b})) {
      Term var = Term::Var(v);
      CHECK(Apply(*theta, Apply(*mgu, var)) == Apply(*theta, var));
    }
  }
}

TEST_CASE("property: occurs check only removes cyclic unifiers") {
  TermGen gen(404);
  for (int i = 0; i < kUnifyPairs; ++i) {
    Term a = gen.Random(2);
    Term b = gen.Random(2);
    if (Unify(a, b, {}, OccursCheck::kOn)) {
      CHECK(Unify(a, b, {}, OccursCheck::kOff));
    }
  }
}

TEST_CASE("property: solve agrees with a bottom-up fixpoint") {
  TermGen gen(505);
  int nonempty = 0;
  for (int i = 0; i < kPrograms; ++i) {
    DlProgram p = RandomProgram(gen);
    CAPTURE(p.ToText());
    KnowledgeBase kb = ProgramKb(p);
    std::vector<std::set<Tuple>> expected = BottomUp(p);
    for (std::size_t pred = 0; pred < p.arity.size(); ++pred) {
      std::set<Tuple> got = SolverAnswers(kb, p, static_cast<int>(pred));
      CHECK(got == expected[pred]);
      if (pred > 0 && !got.empty()) ++nonempty;
    }
  }
  CHECK(nonempty > kPrograms / 4);
}

TEST_CASE("property: cuts only prune") {
  TermGen gen(606);
  int pruned = 0;
  for (int i = 0; i < kPrograms; ++i) {
    DlProgram p = RandomProgram(gen);
    DlProgram cut = testing::WithRandomCuts(p, gen);
    CAPTURE(cut.ToText());
    KnowledgeBase plain_kb = ProgramKb(p);
    KnowledgeBase cut_kb = ProgramKb(cut);
    for (std::size_t pred = 0; pred < p.arity.size(); ++pred) {
      int k = static_cast<int>(pred);
      std::set<Tuple> all = SolverAnswers(plain_kb, p, k);
      std::vector<Tuple> with_cuts = SolverAnswerList(cut_kb, cut, k);
      for (const Tuple &t : with_cuts) CHECK(all.count(t) == 1);
      if (std::set<Tuple>(with_cuts.begin(), with_cuts.end()).size() <
          all.size()) {
        ++pruned;
      }
    }
  }
  CHECK(pruned > 0);
}

TEST_CASE("property: negation agrees with emptiness") {
  TermGen gen(707);
  const char *constants[] = {"a", "b", "c", "d"};
  for (int i = 0; i < kPrograms; ++i) {
    DlProgram p = RandomProgram(gen);
    KnowledgeBase kb = ProgramKb(p);
    for (int probe = 0; probe < 4; ++probe) {
      int pred = gen.Uniform(0, static_cast<int>(p.arity.size()) - 1);
      std::string goal = p.PredName(pred) + "(";
      for (int k = 0; k < p.arity[pred]; ++k) {
        if (k) goal += ", ";
        goal += constants[gen.Uniform(0, 3)];
      }
      goal += ")";
      CAPTURE(goal);
      bool provable = !SolveAll(kb, {}, ParseQuery(goal)).empty();
      bool negated = !SolveAll(kb, {}, ParseQuery("\\+ " + goal)).empty();
      CHECK(provable != negated);
    }
  }
}

TEST_CASE("property: solving is deterministic") {
  TermGen gen(808);
  for (int i = 0; i < 100; ++i) {
    DlProgram p = testing::WithRandomCuts(RandomProgram(gen), gen);
    KnowledgeBase kb = ProgramKb(p);
    int pred = static_cast<int>(p.arity.size()) - 1;
    CHECK(SolverAnswerList(kb, p, pred) == SolverAnswerList(kb, p, pred));
    KnowledgeBase again = ProgramKb(p);
    CHECK(SolverAnswerList(again, p, pred) == SolverAnswerList(kb, p, pred));
  }
}

}  // namespace
}  // namespace annolog
