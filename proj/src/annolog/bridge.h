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

// Translation between a Cas and ground facts, and from solved output terms
// back to annotations.
//
// Fact vocabulary (node ids are atoms n1, n2, ... in span order):
//
//   node(N).  span(N, Begin, End).  coveredText(N, Text).
//   lemmaForm(N, Lemma).  pennTag(N, Tag).  semanticType(N, Type).
//   subj(G, D).  pred(G, D).  modifier(G, D).  objprep(G, D).
//   whadv(G, D).  child(Parent, Child).  questionRoot(N).
//
// Edge facts take the governor first.

#ifndef ANNOLOG_BRIDGE_H_
#define ANNOLOG_BRIDGE_H_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "annolog/cas.h"
#include "annolog/solver.h"
#include "json.hpp"

namespace annolog {

// Annotations of an earlier annotator re-exposed as facts. Every node of a
// matching annotation gets semanticType(N, type); when predicate is set,
// predicate(Root, [Nodes...]) is emitted too, Root being the question root.
struct InputSpec {
  std::string type;
  std::string predicate;
};

struct FactBase {
  std::vector<Clause> facts;
  std::map<std::string, AnnotationId> node_to_annotation;
  std::map<AnnotationId, std::string> annotation_to_node;
  std::string root_node;  // empty when the document has no parse nodes

  std::optional<AnnotationId> AnnotationOf(const std::string &node) const;
};

// Throws SchemaViolation when an edge references a non-node annotation.
FactBase CasToFacts(const Cas &cas, const std::vector<InputSpec> &inputs = {});

// Copy of rules with the document facts asserted as dynamic clauses.
KnowledgeBase WithFacts(const KnowledgeBase &rules, const FactBase &facts);

// The fixed fact vocabulary.
const std::vector<PredicateKey> &SchemaPredicates();
// Declares the schema predicates plus the input predicates so that rules
// calling them fail quietly on documents lacking such facts.
void DeclareSchema(KnowledgeBase &kb,
                   const std::vector<InputSpec> &inputs = {});

// Where an output annotation feature takes its value from.
struct FeatureSource {
  enum class Kind { kArg, kArgs, kClauseLabel, kConstant };
  Kind kind = Kind::kArg;
  std::vector<std::size_t> args;
  std::vector<std::string> constant;
  bool constant_is_list = false;
};

// Maps the solutions of predicate/arity onto annotations of type. The span
// covers the nodes found in the span_args positions.
struct OutputEntry {
  std::string predicate;
  std::size_t arity = 0;
  std::string type;
  std::vector<std::size_t> span_args;
  std::map<std::string, FeatureSource> features;

  PredicateKey key() const { return {predicate, arity}; }
};

using OutputSpec = std::vector<OutputEntry>;

// Throws ConfigError for out-of-range positions, missing span sources,
// unknown types or features.
void ValidateOutputEntry(const OutputEntry &entry, const TypeSystem &ts);

// JSON form:
//   {"predicate": "castOf", "arity": 2, "type": "annolog.Relation",
//    "span": [0, 1],
//    "features": {"patternId": "label", "nodes": {"arg": 1},
//                 "arguments": {"args": [0, 1]}, "relation": {"const": "x"}}}
// A Relation entry may give "roles": [...] instead of features.
OutputEntry OutputEntryFromJson(const nlohmann::ordered_json &j,
                                const std::string &path);

// Standard entries.
OutputEntry FocusOutput();
OutputEntry AnswerTypeOutput();
OutputEntry RelationOutput(const std::string &predicate,
                           std::vector<std::string> roles);

struct OutputRecord {
  std::vector<Term> args;
  std::string clause_label;
};

// pred(V1, ..., Vn) with fresh variables named A1..An.
Query OutputQuery(const OutputEntry &entry);
OutputRecord RecordFromSolution(const OutputEntry &entry,
                                const Solution &solution);

// One annotation per structurally distinct record, in record order. Throws
// UngroundOutput, UnknownNode, SchemaViolation for ill-shaped arguments.
std::vector<AnnotationId> BindingsToAnnotations(
    Cas &cas, const FactBase &facts, const OutputEntry &entry,
    const std::vector<OutputRecord> &records);

}  // namespace annolog

#endif  // ANNOLOG_BRIDGE_H_
