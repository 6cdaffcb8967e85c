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

#include "annolog/relations.h"

#include <random>
#include <set>

#include "annolog/error.h"
#include "annolog/parser.h"
#include "annolog/qparse.h"
#include "doctest.h"
#include "testing/testing.h"

namespace annolog {
namespace {

using testing::DataPath;
using testing::LexiconRegistry;
using testing::LoadFixture;
using Pair = std::pair<std::int64_t, std::int64_t>;

const KnowledgeBase &Rules() {
  static const KnowledgeBase rules =
      LoadRuleFiles({DataPath("rules/relations.pl")});
  return rules;
}

const OutputSpec &Spec() {
  static const OutputSpec spec = {
      RelationOutput("castOf", {"person", "composition"})};
  return spec;
}

// Direct nested-loop evaluation of the castOf rule over the input JSON,
// in input node ids.
std::set<Pair> CastOfOracle(const Json &source) {
  std::map<std::int64_t, const Json *> nodes;
  for (const Json &n : source["nodes"]) {
    nodes[n["id"].get<std::int64_t>()] = &n;
  }
  auto edges = [&](const char *type) {
    std::multimap<std::int64_t, std::int64_t> out;
    for (const Json &e : source["edges"]) {
      if (e["type"] == type) {
        out.emplace(e["from"].get<std::int64_t>(), e["to"].get<std::int64_t>());
      }
    }
    return out;
  };
  auto tag = [&](std::int64_t id) {
    return (*nodes[id])["pennTag"].get<std::string>();
  };
  auto has_type = [&](std::int64_t id, const std::string &type) {
    const Json &n = *nodes[id];
    if (!n.contains("semanticTypes")) return false;
    for (const Json &t : n["semanticTypes"]) {
      if (t == type) return true;
    }
    return false;
  };
  auto subj = edges("subj"), pred = edges("pred"), mod = edges("modifier"),
       objprep = edges("objprep");
  const MiniWordNet &wn = testing::SharedLexicon()->wordnet;
  std::set<Pair> out;
  for (const auto &[verb, node] : nodes) {
    if (!wn.Synonym((*node)["lemma"].get<std::string>(),
                    {"be", "play", "portray"})) {
      continue;
    }
    for (auto [s, se] = subj.equal_range(verb); s != se; ++s) {
      if (!has_type(s->second, "com.ibm.hutt.Person")) continue;
      for (auto [p, pe] = pred.equal_range(verb); p != pe; ++p) {
        if (tag(p->second) != "NNP") continue;
        for (auto [m, me] = mod.equal_range(verb); m != me; ++m) {
          if (tag(m->second) != "IN") continue;
          for (auto [o, oe] = objprep.equal_range(m->second); o != oe; ++o) {
            if (tag(o->second) == "NN" &&
                has_type(o->second, "com.ibm.hutt.Composition")) {
              out.emplace(s->second, o->second);
            }
          }
        }
      }
    }
  }
  return out;
}

std::set<Pair> Extracted(const Document &doc, const FactBase &fb,
                         const KnowledgeBase &kb) {
  std::set<Pair> out;
  for (const RelationResult &r :
       ExtractRelations(kb, LexiconRegistry(), Spec())) {
    auto id = [&](const Term &t) {
      const Annotation &a = doc.cas.Get(*fb.AnnotationOf(t.name()));
      return std::get<std::int64_t>(*a.Feature("nodeId"));
    };
    out.emplace(id(r.arguments[0]), id(r.arguments[1]));
  }
  return out;
}

TEST_CASE("castOf fires once on the positive fixture") {
  Document doc = LoadFixture("s_castof");
  FactBase fb = CasToFacts(doc.cas);
  auto results =
      ExtractRelations(WithFacts(Rules(), fb), LexiconRegistry(), Spec());
  REQUIRE(results.size() == 1);
  CHECK(results[0].relation == "castOf");
  CHECK(results[0].rule_id == "castOf");
  CHECK(results[0].arguments[0].ToString() == "n1");
  CHECK(results[0].arguments[1].ToString() == "n6");
  CHECK(results[0].roles == std::vector<std::string>{"person", "composition"});
}

TEST_CASE("two attachments give two relations") {
  Document doc = LoadFixture("s_castof_two");
  RelationOutcome out =
      AnnotateRelations(doc.cas, Rules(), LexiconRegistry(), Spec());
  CHECK(out.relations.size() == 2);
  CHECK(out.added.size() == 2);
  CHECK(doc.cas.AnnotationsOfType(types::kRelation).size() == 2);
}

TEST_CASE("every single-goal ablation blocks the rule") {
  std::vector<testing::Ablation> ablations = testing::CastOfAblations();
  CHECK(ablations.size() == 11);
  for (const testing::Ablation &a : ablations) {
    CAPTURE(a.goal);
    CHECK(testing::CastOfCount(a.facts) == 0);
  }
  Document doc = LoadFixture("s_castof");
  CHECK(testing::CastOfCount(CasToFacts(doc.cas).facts) == 1);
}

TEST_CASE("results match a direct join on every fixture") {
  for (const char *id : {"q_symbol", "q_river", "q_hexagons", "q_dome",
                         "q_capitol", "q_woolf", "q_club", "q_imperative",
                         "q_empty", "s_castof", "s_castof_two"}) {
    CAPTURE(id);
    Document doc = LoadFixture(id);
    FactBase fb = CasToFacts(doc.cas);
    CHECK(Extracted(doc, fb, WithFacts(Rules(), fb)) ==
          CastOfOracle(doc.source));
  }
}

TEST_CASE("property: adding facts never removes a relation") {
  std::mt19937 rng(5);
  Document doc = LoadFixture("s_castof_two");
  FactBase fb = CasToFacts(doc.cas);
  std::set<Pair> base = Extracted(doc, fb, WithFacts(Rules(), fb));
  std::vector<std::string> node_ids;
  for (const auto &[n, ann] : fb.node_to_annotation) node_ids.push_back(n);
  const char *edge_preds[] = {"subj", "pred", "modifier", "objprep"};
  const char *tags[] = {"NN", "NNP", "IN", "VBD"};
  for (int round = 0; round < 100; ++round) {
    FactBase more = fb;
    int extra = 1 + rng() % 6;
    for (int i = 0; i < extra; ++i) {
      Term a = Term::Atom(node_ids[rng() % node_ids.size()]);
      Term b = Term::Atom(node_ids[rng() % node_ids.size()]);
      Clause c;
      switch (rng() % 3) {
        case 0:
          c.head = Term::Compound(edge_preds[rng() % 4], {a, b});
          break;
        case 1:
          c.head = Term::Compound("pennTag", {a, Term::Atom(tags[rng() % 4])});
          break;
        default:
          c.head = Term::Compound(
              "semanticType",
              {a, Term::Atom(rng() % 2 ? "com.ibm.hutt.Person"
                                       : "com.ibm.hutt.Composition")});
      }
      more.facts.push_back(c);
    }
    std::set<Pair> grown = Extracted(doc, more, WithFacts(Rules(), more));
    for (const Pair &p : base) CHECK(grown.count(p) == 1);
  }
}

TEST_CASE("relation results print with their rule id") {
  RelationResult r{"castOf", {Term::Atom("n1"), Term::Atom("n6")},
                   {"person", "composition"}, "castOf"};
  CHECK(r.ToString().find("castOf") == 0);
}

}  // namespace
}  // namespace annolog
