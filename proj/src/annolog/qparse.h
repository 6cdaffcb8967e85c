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

// Question analysis: focus detection followed by lexical answer-type
// detection, both driven by rule files.
//
// Focus rules define focus(QuestionRoot, NodeList); the label of the clause
// that fires is the focus pattern id. Answer-type rules define
// answerType(QuestionRoot, FocusList, PatternId, TypeList).

#ifndef ANNOLOG_QPARSE_H_
#define ANNOLOG_QPARSE_H_

#include <optional>
#include <string>
#include <vector>

#include "annolog/bridge.h"
#include "annolog/cas.h"
#include "annolog/solver.h"

namespace annolog {

struct FocusResult {
  std::string pattern_id;
  Term nodes;  // ground list of node atoms
};

struct AnswerTypeResult {
  std::string pattern_id;
  std::vector<std::string> types;
};

struct QuestionAnalysis {
  std::optional<FocusResult> focus;
  std::optional<AnswerTypeResult> answer_type;
};

// kb holds rules and document facts. Both return nullopt when no rule
// matches or root is empty.
std::optional<FocusResult> DetectFocus(const KnowledgeBase &kb,
                                       const ExternalRegistry &registry,
                                       const std::string &root,
                                       const SolveConfig &config = {});
std::optional<AnswerTypeResult> DetectAnswerType(
    const KnowledgeBase &kb, const ExternalRegistry &registry,
    const std::string &root, const Term &focus_list,
    const SolveConfig &config = {});

QuestionAnalysis AnalyzeQuestion(const KnowledgeBase &kb,
                                 const ExternalRegistry &registry,
                                 const std::string &root,
                                 const SolveConfig &config = {});

struct AnnotateOutcome {
  QuestionAnalysis analysis;
  std::vector<AnnotationId> added;
  std::vector<std::string> diagnostics;  // e.g. "no-pattern"
};

inline constexpr char kNoPattern[] = "no-pattern";

// Translates cas into facts, runs the analysis against rules and writes a
// Focus and an AnswerType annotation. Nothing is written when no focus rule
// matches; the outcome then carries the "no-pattern" diagnostic.
AnnotateOutcome AnnotateQuestion(Cas &cas, const KnowledgeBase &rules,
                                 const ExternalRegistry &registry,
                                 const SolveConfig &config = {},
                                 const std::vector<InputSpec> &inputs = {});

// Declares focus/2 and answerType/4 so that a rule set defining only one of
// them yields no result for the other instead of UnknownPredicate.
void DeclareQuestionPredicates(KnowledgeBase &kb);

// Rule base with the schema declared and the given files appended in order.
KnowledgeBase LoadRuleFiles(const std::vector<std::string> &paths,
                            const std::vector<InputSpec> &inputs = {});

}  // namespace annolog

#endif  // ANNOLOG_QPARSE_H_
