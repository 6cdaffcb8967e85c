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

#include "annolog/qparse.h"

#include "annolog/error.h"
#include "annolog/parser.h"

namespace annolog {

std::optional<FocusResult> DetectFocus(const KnowledgeBase &kb,
                                       const ExternalRegistry &registry,
                                       const std::string &root,
                                       const SolveConfig &config) {
  if (root.empty()) return std::nullopt;
  Query q;
  Term f = q.NewVar("F");
  q.goals.push_back(Goal::Call(Term::Compound("focus", {Term::Atom(root), f})));
  std::optional<Solution> s = SolveFirst(kb, registry, std::move(q), config);
  if (!s) return std::nullopt;
  return FocusResult{s->clause_label, *s->Get("F")};
}

std::optional<AnswerTypeResult> DetectAnswerType(
    const KnowledgeBase &kb, const ExternalRegistry &registry,
    const std::string &root, const Term &focus_list,
    const SolveConfig &config) {
  if (root.empty()) return std::nullopt;
  Query q;
  Term id = q.NewVar("Id");
  Term types = q.NewVar("ATs");
  q.goals.push_back(Goal::Call(Term::Compound(
      "answerType", {Term::Atom(root), focus_list, id, types})));
  std::optional<Solution> s = SolveFirst(kb, registry, std::move(q), config);
  if (!s) return std::nullopt;
  AnswerTypeResult r;
  const Term &pid = *s->Get("Id");
  const Term &ats = *s->Get("ATs");
  if (!pid.is_atom()) {
    throw Error(ErrorCode::kUngroundOutput,
                "answerType pattern id is not an atom: " + pid.ToString());
  }
  r.pattern_id = pid.name();
  auto items = ats.ListItems();
  if (!items) {
    throw Error(ErrorCode::kUngroundOutput,
                "answerType types are not a list: " + ats.ToString());
  }
  for (const Term &t : *items) {
    if (!t.is_atom()) {
      throw Error(ErrorCode::kUngroundOutput,
                  "answerType type is not an atom: " + t.ToString());
    }
    r.types.push_back(t.name());
  }
  return r;
}

QuestionAnalysis AnalyzeQuestion(const KnowledgeBase &kb,
                                 const ExternalRegistry &registry,
                                 const std::string &root,
                                 const SolveConfig &config) {
  QuestionAnalysis a;
  a.focus = DetectFocus(kb, registry, root, config);
  if (a.focus) {
    a.answer_type =
        DetectAnswerType(kb, registry, root, a.focus->nodes, config);
  }
  return a;
}

AnnotateOutcome AnnotateQuestion(Cas &cas, const KnowledgeBase &rules,
                                 const ExternalRegistry &registry,
                                 const SolveConfig &config,
                                 const std::vector<InputSpec> &inputs) {
  AnnotateOutcome out;
  FactBase facts = CasToFacts(cas, inputs);
  KnowledgeBase kb = WithFacts(rules, facts);
  out.analysis = AnalyzeQuestion(kb, registry, facts.root_node, config);
  if (!out.analysis.focus) {
    out.diagnostics.push_back(kNoPattern);
    return out;
  }
  Term root = Term::Atom(facts.root_node);
  const FocusResult &f = *out.analysis.focus;
  for (AnnotationId id : BindingsToAnnotations(
           cas, facts, FocusOutput(), {{{root, f.nodes}, f.pattern_id}})) {
    out.added.push_back(id);
  }
  if (out.analysis.answer_type) {
    const AnswerTypeResult &at = *out.analysis.answer_type;
    std::vector<Term> types;
    for (const std::string &t : at.types) types.push_back(Term::Atom(t));
    OutputRecord r{{root, f.nodes, Term::Atom(at.pattern_id),
                    Term::List(types)},
                   at.pattern_id};
    for (AnnotationId id :
         BindingsToAnnotations(cas, facts, AnswerTypeOutput(), {r})) {
      out.added.push_back(id);
    }
  }
  return out;
}

void DeclareQuestionPredicates(KnowledgeBase &kb) {
  kb.Declare({"focus", 2});
  kb.Declare({"answerType", 4});
}

KnowledgeBase LoadRuleFiles(const std::vector<std::string> &paths,
                            const std::vector<InputSpec> &inputs) {
  KnowledgeBase kb;
  DeclareSchema(kb, inputs);
  for (const std::string &p : paths) kb.Assert(ParseProgramFile(p));
  return kb;
}

}  // namespace annolog
