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

// Top-down SLD resolution with depth-first search, leftmost goal selection
// and clauses tried in assertion order.
//
// Supported control: clause-level cut ("!"), negation as failure ("\+").
// Built-ins: =/2, ==/2, true/0, fail/0. The library program supplies
// member/2 and getDescendantNodes/2 and is visible to every solve.
//
// Predicates that have neither clauses, a built-in, a library definition, an
// external handler nor a declaration raise UnknownPredicate instead of failing
// silently.

#ifndef ANNOLOG_SOLVER_H_
#define ANNOLOG_SOLVER_H_

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "annolog/parser.h"
#include "annolog/term.h"

namespace annolog {

enum class Provenance : std::uint8_t { kStatic, kDynamic };

class KnowledgeBase {
 public:
  void Assert(Clause clause, Provenance provenance = Provenance::kStatic);
  void Assert(const std::vector<Clause> &clauses,
              Provenance provenance = Provenance::kStatic);
  void Assert(const SourceProgram &program,
              Provenance provenance = Provenance::kStatic);

  // Marks a predicate as known; calling it with no clauses fails quietly.
  void Declare(const PredicateKey &key);

  // Clauses of a predicate in assertion order, or nullptr if none exist and
  // the predicate was never declared.
  const std::vector<Clause> *Lookup(const PredicateKey &key) const;
  bool Knows(const PredicateKey &key) const;

  std::size_t size() const { return size_; }
  std::size_t CountWithProvenance(Provenance p) const;

  // All clauses in global assertion order.
  std::vector<Clause> AllClauses() const;

 private:
  struct Entry {
    std::vector<Clause> clauses;
    std::vector<std::size_t> order;      // global assertion sequence numbers
    std::vector<Provenance> provenance;
  };
  std::unordered_map<PredicateKey, Entry, PredicateKeyHash> preds_;
  std::size_t size_ = 0;
};

// Answers for an external predicate: each tuple is unified with the call's
// arguments as one alternative, in order. Handlers receive fully applied
// arguments and must be deterministic and free of side effects.
using ExternalAnswers = std::vector<std::vector<Term>>;
using ExternalHandler =
    std::function<ExternalAnswers(std::span<const Term> args)>;

class ExternalRegistry {
 public:
  // module is empty for unqualified predicates.
  void Register(const std::string &module, const std::string &name,
                std::size_t arity, ExternalHandler handler);
  const ExternalHandler *Find(const std::string &module,
                              const PredicateKey &key) const;
  std::vector<std::string> Names() const;

 private:
  std::unordered_map<std::string, ExternalHandler> handlers_;
};

struct SolveConfig {
  std::uint64_t max_resolution_steps = 1'000'000;
  std::uint64_t max_depth = 10'000;
};

struct Solution {
  // Query variable name -> applied binding, in query order.
  std::vector<std::pair<std::string, Term>> bindings;
  // Label of the clause that resolved the first query goal; empty when that
  // goal was a built-in or external call.
  std::string clause_label;

  const Term *Get(const std::string &name) const;
  // "X = a, Y = b", or "yes" when the query has no named variables.
  std::string ToString() const;
};

// The rules shipped with every solve (member/2, getDescendantNodes/2).
const KnowledgeBase &LibraryProgram();

// Lazy solution stream over one query. The knowledge base and registry must
// outlive the stream and stay unchanged while it is in use.
class SolutionStream {
 public:
  SolutionStream(const KnowledgeBase &kb, const ExternalRegistry &registry,
                 Query query, SolveConfig config = {});
  ~SolutionStream();
  SolutionStream(SolutionStream &&) noexcept;
  SolutionStream &operator=(SolutionStream &&) noexcept;

  // Next solution in derivation order, or nullopt when exhausted. Throws
  // Error(kResourceExhausted) or Error(kUnknownPredicate).
  std::optional<Solution> Next();

  std::uint64_t steps() const;

 private:
  class Engine;
  std::unique_ptr<Engine> engine_;
  Query query_;
  bool started_ = false;
  bool done_ = false;
};

SolutionStream Solve(const KnowledgeBase &kb, const ExternalRegistry &registry,
                     Query query, SolveConfig config = {});

// Collects every solution.
std::vector<Solution> SolveAll(const KnowledgeBase &kb,
                               const ExternalRegistry &registry, Query query,
                               SolveConfig config = {});

std::optional<Solution> SolveFirst(const KnowledgeBase &kb,
                                   const ExternalRegistry &registry,
                                   Query query, SolveConfig config = {});

}  // namespace annolog

#endif  // ANNOLOG_SOLVER_H_
