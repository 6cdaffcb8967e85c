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

#include "testing/testing.h"

#include <algorithm>
#include <filesystem>
#include <atomic>
#include <functional>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "annolog/parser.h"
#include "annolog/qparse.h"

namespace annolog {
namespace testing {

std::string DataPath(const std::string &relative) {
  return (std::filesystem::path(ANNOLOG_DATA_DIR) / relative).string();
}

std::string FixturePath(const std::string &doc_id) {
  return DataPath("fixtures/docs/" + doc_id + ".json");
}

std::shared_ptr<const TypeSystem> SharedTypes() {
  static const auto types =
      std::make_shared<const TypeSystem>(StandardTypeSystem());
  return types;
}

std::shared_ptr<const Lexicon> SharedLexicon() {
  static const auto lexicon = std::make_shared<const Lexicon>(
      Lexicon::LoadDirectory(DataPath("lexicon")));
  return lexicon;
}

const ExternalRegistry &LexiconRegistry() {
  static const ExternalRegistry *registry = [] {
    auto *r = new ExternalRegistry;
    RegisterLexiconPredicates(*r, SharedLexicon());
    return r;
  }();
  return *registry;
}

Document LoadFixture(const std::string &doc_id) {
  return LoadDocument(FixturePath(doc_id), SharedTypes());
}

std::vector<std::string> FixtureIds() {
  std::vector<std::string> ids;
  for (const auto &e :
       std::filesystem::directory_iterator(DataPath("fixtures/docs"))) {
    if (e.path().extension() == ".json") ids.push_back(e.path().stem());
  }
  std::sort(ids.begin(), ids.end());
  return ids;
}

TempDir::TempDir() {
  static std::atomic<int> counter{0};
  std::random_device rd;
  auto base = std::filesystem::temp_directory_path();
  for (;;) {
    auto p = base / ("annolog_test_" + std::to_string(rd()) + "_" +
                     std::to_string(counter++));
    if (std::filesystem::create_directory(p)) {
      path_ = p.string();
      return;
    }
  }
}

TempDir::~TempDir() {
  std::error_code ec;
  std::filesystem::remove_all(path_, ec);
}

std::string TempDir::File(const std::string &name) const {
  return (std::filesystem::path(path_) / name).string();
}

std::string ReadFile(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void WriteFile(const std::string &path, const std::string &content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
  if (!out) throw std::runtime_error("cannot write " + path);
}

std::vector<std::string> SolveLines(const KnowledgeBase &kb,
                                    const std::string &query,
                                    const ExternalRegistry &registry,
                                    SolveConfig config) {
  std::vector<std::string> out;
  for (const Solution &s : SolveAll(kb, registry, ParseQuery(query), config)) {
    out.push_back(s.ToString());
  }
  return out;
}

// --- TermGen --------------------------------------------------------------

int TermGen::Uniform(int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng_);
}

bool TermGen::Chance(double p) {
  return std::bernoulli_distribution(p)(rng_);
}

Term TermGen::Random(int depth, VarId first_var, int vars) {
  int pick = Uniform(0, depth > 0 ? 9 : 5);
  if (pick <= 1) return Term::Atom(std::string(1, static_cast<char>('a' + Uniform(0, 2))));
  if (pick == 2) return Term::Int(Uniform(0, 2));
  if (pick <= 5) {
    VarId id = first_var + Uniform(0, vars - 1);
    return Term::Var(id, "V" + std::to_string(id));
  }
  static const char *functors[] = {"f", "g", "h"};
  int arity = Uniform(1, 3);
  std::vector<Term> args;
  for (int i = 0; i < arity; ++i) args.push_back(Random(depth - 1, first_var, vars));
  return Term::Compound(functors[arity - 1], std::move(args));
}

Term TermGen::Ground(int depth) {
  int pick = Uniform(0, depth > 0 ? 5 : 2);
  if (pick <= 1) return Term::Atom(std::string(1, static_cast<char>('a' + Uniform(0, 2))));
  if (pick == 2) return Term::Int(Uniform(0, 2));
  static const char *functors[] = {"f", "g", "h"};
  int arity = Uniform(1, 3);
  std::vector<Term> args;
  for (int i = 0; i < arity; ++i) args.push_back(Ground(depth - 1));
  return Term::Compound(functors[arity - 1], std::move(args));
}

Term TermGen::Generalize(const Term &t, std::map<std::string, VarId> *pool,
                         VarId *next_var) {
  if (Chance(0.3)) {
    std::string key = t.ToString();
    auto it = pool->find(key);
    VarId id;
    if (it != pool->end() && Chance(0.7)) {
      id = it->second;
    } else {
      id = (*next_var)++;
      // Later generalizations of the same subterm may reuse this variable.
      (*pool)[key] = id;
    }
    return Term::Var(id, "V" + std::to_string(id));
  }
  if (!t.is_compound()) return t;
  std::vector<Term> args;
  for (const Term &a : t.args()) args.push_back(Generalize(a, pool, next_var));
  return Term::Compound(t.name(), std::move(args));
}

// --- Datalog programs -----------------------------------------------------

namespace {

bool IsVar(const std::string &s) { return !s.empty() && s[0] >= 'A' && s[0] <= 'Z'; }

const std::vector<std::string> kConstants = {"a", "b", "c", "d"};
const std::vector<std::string> kVars = {"X", "Y", "Z"};

}  // namespace

std::string DlProgram::AtomText(const DlAtom &a) const {
  std::string out = PredName(a.pred) + "(";
  for (std::size_t i = 0; i < a.args.size(); ++i) {
    if (i > 0) out += ", ";
    out += a.args[i];
  }
  return out + ")";
}

std::string DlProgram::ToText() const {
  std::string out;
  for (const DlAtom &f : facts) out += AtomText(f) + ".\n";
  for (const DlRule &r : rules) {
    out += AtomText(r.head) + " :- ";
    for (std::size_t i = 0; i < r.body.size(); ++i) {
      if (i > 0) out += ", ";
      out += AtomText(r.body[i]);
      if (static_cast<int>(i) == r.cut_after) out += ", !";
    }
    out += ".\n";
  }
  return out;
}

DlProgram RandomProgram(TermGen &gen) {
  DlProgram p;
  int preds = gen.Uniform(1, 4);
  for (int i = 0; i < preds; ++i) p.arity.push_back(gen.Uniform(1, 2));

  // Facts go to base predicates and, sometimes, to derived ones too.
  int facts = gen.Uniform(1, 12);
  for (int i = 0; i < facts; ++i) {
    DlAtom f;
    f.pred = gen.Chance(0.7) ? 0 : gen.Uniform(0, preds - 1);
    for (int k = 0; k < p.arity[f.pred]; ++k) {
      f.args.push_back(kConstants[gen.Uniform(0, 3)]);
    }
    bool seen = false;
    for (const DlAtom &g : p.facts) {
      seen = seen || (g.pred == f.pred && g.args == f.args);
    }
    if (!seen) p.facts.push_back(std::move(f));
  }

  if (preds > 1) {
    int rules = gen.Uniform(0, 6);
    for (int i = 0; i < rules; ++i) {
      DlRule r;
      r.head.pred = gen.Uniform(1, preds - 1);
      int body = gen.Uniform(1, 3);
      std::set<std::string> body_vars;
      for (int b = 0; b < body; ++b) {
        DlAtom a;
        a.pred = gen.Uniform(0, r.head.pred - 1);
        for (int k = 0; k < p.arity[a.pred]; ++k) {
          std::string arg = gen.Chance(0.75) ? kVars[gen.Uniform(0, 2)]
                                             : kConstants[gen.Uniform(0, 3)];
          if (IsVar(arg)) body_vars.insert(arg);
          a.args.push_back(arg);
        }
        r.body.push_back(std::move(a));
      }
      std::vector<std::string> vars(body_vars.begin(), body_vars.end());
      for (int k = 0; k < p.arity[r.head.pred]; ++k) {
        if (!vars.empty() && gen.Chance(0.8)) {
          r.head.args.push_back(vars[gen.Uniform(0, static_cast<int>(vars.size()) - 1)]);
        } else {
          r.head.args.push_back(kConstants[gen.Uniform(0, 3)]);
        }
      }
      p.rules.push_back(std::move(r));
    }
  }
  return p;
}

DlProgram WithRandomCuts(const DlProgram &p, TermGen &gen) {
  DlProgram out = p;
  for (DlRule &r : out.rules) {
    if (gen.Chance(0.5)) {
      r.cut_after = gen.Uniform(0, static_cast<int>(r.body.size()) - 1);
    }
  }
  return out;
}

KnowledgeBase ProgramKb(const DlProgram &p) {
  KnowledgeBase kb;
  for (std::size_t i = 0; i < p.arity.size(); ++i) {
    kb.Declare({p.PredName(static_cast<int>(i)),
                static_cast<std::size_t>(p.arity[i])});
  }
  kb.Assert(ParseProgram(p.ToText()));
  return kb;
}

std::vector<std::set<Tuple>> BottomUp(const DlProgram &p) {
  std::vector<std::set<Tuple>> db(p.arity.size());
  for (const DlAtom &f : p.facts) db[f.pred].insert(f.args);

  bool changed = true;
  while (changed) {
    changed = false;
    for (const DlRule &r : p.rules) {
      std::vector<Tuple> derived;
      std::map<std::string, std::string> env;
      std::function<void(std::size_t)> join = [&](std::size_t i) {
        if (i == r.body.size()) {
          Tuple t;
          for (const std::string &a : r.head.args) {
            t.push_back(IsVar(a) ? env.at(a) : a);
          }
          derived.push_back(std::move(t));
          return;
        }
        const DlAtom &goal = r.body[i];
        for (const Tuple &fact : db[goal.pred]) {
          std::map<std::string, std::string> saved = env;
          bool ok = true;
          for (std::size_t k = 0; k < fact.size() && ok; ++k) {
            const std::string &a = goal.args[k];
            if (!IsVar(a)) {
              ok = a == fact[k];
            } else if (auto it = env.find(a); it != env.end()) {
              ok = it->second == fact[k];
            } else {
              env[a] = fact[k];
            }
          }
          if (ok) join(i + 1);
          env = std::move(saved);
        }
      };
      join(0);
      for (Tuple &t : derived) {
        if (db[r.head.pred].insert(std::move(t)).second) changed = true;
      }
    }
  }
  return db;
}

std::vector<Tuple> SolverAnswerList(const KnowledgeBase &kb,
                                    const DlProgram &p, int pred) {
  std::string q = p.PredName(pred) + "(";
  for (int k = 0; k < p.arity[pred]; ++k) {
    if (k > 0) q += ", ";
    q += "V" + std::to_string(k);
  }
  q += ")";
  std::vector<Tuple> out;
  for (const Solution &s : SolveAll(kb, ExternalRegistry{}, ParseQuery(q))) {
    Tuple t;
    for (int k = 0; k < p.arity[pred]; ++k) {
      t.push_back(s.Get("V" + std::to_string(k))->ToString());
    }
    out.push_back(std::move(t));
  }
  return out;
}

std::set<Tuple> SolverAnswers(const KnowledgeBase &kb, const DlProgram &p,
                              int pred) {
  std::vector<Tuple> list = SolverAnswerList(kb, p, pred);
  return std::set<Tuple>(list.begin(), list.end());
}

// --- castOf ablations ------------------------------------------------------

namespace {

struct AblationTarget {
  const char *goal;
  const char *fact;  // printed form of the fact to drop
};

const AblationTarget kAblations[] = {
    {"lemmaForm(Verb,Text)", "lemmaForm(n2,portray)"},
    {"wordNet:synonym(Text,[\"be\",\"play\",\"portray\"])", ""},
    {"subj(Verb,Person)", "subj(n2,n1)"},
    {"semanticType(Person,\"com.ibm.hutt.Person\")",
     "semanticType(n1,\"com.ibm.hutt.Person\")"},
    {"pred(Verb,Pred)", "pred(n2,n3)"},
    {"pennTag(Pred,\"NNP\")", "pennTag(n3,\"NNP\")"},
    {"modifier(Verb,Mod)", "modifier(n2,n4)"},
    {"pennTag(Mod,\"IN\")", "pennTag(n4,\"IN\")"},
    {"objprep(Mod,Composition)", "objprep(n4,n6)"},
    {"pennTag(Composition,\"NN\")", "pennTag(n6,\"NN\")"},
    {"semanticType(Composition,\"com.ibm.hutt.Composition\")",
     "semanticType(n6,\"com.ibm.hutt.Composition\")"},
};

}  // namespace

std::vector<Ablation> CastOfAblations() {
  Document doc = LoadFixture("s_castof");
  std::vector<Clause> base = CasToFacts(doc.cas).facts;
  std::vector<Ablation> out;
  for (const AblationTarget &t : kAblations) {
    Ablation a;
    a.goal = t.goal;
    std::size_t changed = 0;
    for (const Clause &c : base) {
      std::string text = c.head.ToString();
      if (*t.fact == '\0') {
        if (text == "lemmaForm(n2,portray)") {
          Clause eat = c;
          eat.head = Term::Compound(
              "lemmaForm", {Term::Atom("n2"), Term::Atom("eat")});
          a.facts.push_back(eat);
          ++changed;
          continue;
        }
      } else if (text == t.fact) {
        ++changed;
        continue;
      }
      a.facts.push_back(c);
    }
    if (changed != 1) {
      throw std::runtime_error(std::string("ablation target not found: ") +
                               t.goal);
    }
    out.push_back(std::move(a));
  }
  return out;
}

std::size_t CastOfCount(const std::vector<Clause> &facts) {
  static const KnowledgeBase rules =
      LoadRuleFiles({DataPath("rules/relations.pl")});
  FactBase fb;
  fb.facts = facts;
  KnowledgeBase kb = WithFacts(rules, fb);
  return SolveAll(kb, LexiconRegistry(), ParseQuery("castOf(P, C)")).size();
}

}  // namespace testing
}  // namespace annolog
