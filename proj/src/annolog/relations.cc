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

#include <algorithm>

namespace annolog {

namespace {

std::vector<std::string> RolesOf(const OutputEntry &entry) {
  auto it = entry.features.find("roles");
  if (it != entry.features.end() &&
      it->second.kind == FeatureSource::Kind::kConstant) {
    return it->second.constant;
  }
  return {};
}

std::vector<OutputRecord> Enumerate(const KnowledgeBase &kb,
                                    const ExternalRegistry &registry,
                                    const OutputEntry &entry,
                                    const SolveConfig &config) {
  std::vector<OutputRecord> records;
  for (const Solution &s : SolveAll(kb, registry, OutputQuery(entry), config)) {
    OutputRecord r = RecordFromSolution(entry, s);
    bool dup = std::any_of(records.begin(), records.end(),
                           [&](const OutputRecord &o) { return o.args == r.args; });
    if (!dup) records.push_back(std::move(r));
  }
  return records;
}

}  // namespace

std::string RelationResult::ToString() const {
  std::string out = relation + "(";
  for (std::size_t i = 0; i < arguments.size(); ++i) {
    if (i > 0) out += ", ";
    out += arguments[i].ToString();
  }
  return out + ") [" + rule_id + "]";
}

std::vector<RelationResult> ExtractRelations(const KnowledgeBase &kb,
                                             const ExternalRegistry &registry,
                                             const OutputSpec &spec,
                                             const SolveConfig &config) {
  std::vector<RelationResult> out;
  for (const OutputEntry &entry : spec) {
    std::vector<std::string> roles = RolesOf(entry);
    for (OutputRecord &r : Enumerate(kb, registry, entry, config)) {
      out.push_back({entry.predicate, std::move(r.args), roles,
                     std::move(r.clause_label)});
    }
  }
  return out;
}

RelationOutcome AnnotateRelations(Cas &cas, const KnowledgeBase &rules,
                                  const ExternalRegistry &registry,
                                  const OutputSpec &spec,
                                  const SolveConfig &config,
                                  const std::vector<InputSpec> &inputs) {
  RelationOutcome out;
  FactBase facts = CasToFacts(cas, inputs);
  KnowledgeBase kb = WithFacts(rules, facts);
  for (const OutputEntry &entry : spec) {
    std::vector<OutputRecord> records = Enumerate(kb, registry, entry, config);
    std::vector<std::string> roles = RolesOf(entry);
    for (const OutputRecord &r : records) {
      out.relations.push_back({entry.predicate, r.args, roles, r.clause_label});
    }
    for (AnnotationId id : BindingsToAnnotations(cas, facts, entry, records)) {
      out.added.push_back(id);
    }
  }
  return out;
}

}  // namespace annolog
