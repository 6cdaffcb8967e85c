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

// Relation extraction: every solution of each declared output predicate
// becomes a relation between parse nodes.

#ifndef ANNOLOG_RELATIONS_H_
#define ANNOLOG_RELATIONS_H_

#include <string>
#include <vector>

#include "annolog/bridge.h"
#include "annolog/cas.h"
#include "annolog/solver.h"

namespace annolog {

struct RelationResult {
  std::string relation;
  std::vector<Term> arguments;
  std::vector<std::string> roles;
  std::string rule_id;

  // "castOf(n1, n4) [castOf/2#1]"
  std::string ToString() const;
};

// kb holds rules and document facts. Results are deduplicated structurally
// and listed in derivation order, entry by entry.
std::vector<RelationResult> ExtractRelations(const KnowledgeBase &kb,
                                             const ExternalRegistry &registry,
                                             const OutputSpec &spec,
                                             const SolveConfig &config = {});

struct RelationOutcome {
  std::vector<RelationResult> relations;
  std::vector<AnnotationId> added;
};

RelationOutcome AnnotateRelations(Cas &cas, const KnowledgeBase &rules,
                                  const ExternalRegistry &registry,
                                  const OutputSpec &spec,
                                  const SolveConfig &config = {},
                                  const std::vector<InputSpec> &inputs = {});

}  // namespace annolog

#endif  // ANNOLOG_RELATIONS_H_
