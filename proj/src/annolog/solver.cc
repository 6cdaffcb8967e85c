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

#include "annolog/solver.h"

#include <algorithm>

#include "annolog/error.h"

namespace annolog {

// --- KnowledgeBase --------------------------------------------------------

void KnowledgeBase::Assert(Clause clause, Provenance provenance) {
  std::optional<PredicateKey> key = KeyOf(clause.head);
  if (!key) {
    throw Error(ErrorCode::kSchemaError,
                "clause head must be an atom or compound: " +
                    clause.head.ToString());
  }
  Entry &e = preds_[*key];
  e.clauses.push_back(std::move(clause));
  e.order.push_back(size_++);
  e.provenance.push_back(provenance);
}

void KnowledgeBase::Assert(const std::vector<Clause> &clauses,
                           Provenance provenance) {
  for (const Clause &c : clauses) Assert(c, provenance);
}

void KnowledgeBase::Assert(const SourceProgram &program,
                           Provenance provenance) {
  Assert(program.clauses, provenance);
}

void KnowledgeBase::Declare(const PredicateKey &key) { preds_[key]; }

const std::vector<Clause> *KnowledgeBase::Lookup(
    const PredicateKey &key) const {
  auto it = preds_.find(key);
  return it == preds_.end() ? nullptr : &it->second.clauses;
}

bool KnowledgeBase::Knows(const PredicateKey &key) const {
  return preds_.count(key) > 0;
}

std::size_t KnowledgeBase::CountWithProvenance(Provenance p) const {
  std::size_t n = 0;
  for (const auto &[key, e] : preds_) {
    n += std::count(e.provenance.begin(), e.provenance.end(), p);
  }
  return n;
}

std::vector<Clause> KnowledgeBase::AllClauses() const {
  std::vector<std::pair<std::size_t, const Clause *>> all;
  for (const auto &[key, e] : preds_) {
    for (std::size_t i = 0; i < e.clauses.size(); ++i) {
      all.emplace_back(e.order[i], &e.clauses[i]);
    }
  }
  std::sort(all.begin(), all.end(),
            [](const auto &a, const auto &b) { return a.first < b.first; });
  std::vector<Clause> out;
  out.reserve(all.size());
  for (const auto &[order, c] : all) out.push_back(*c);
  return out;
}

// --- ExternalRegistry -----------------------------------------------------

namespace {

std::string RegistryKey(const std::string &module, const std::string &name,
                        std::size_t arity) {
  return module + ":" + name + "/" + std::to_string(arity);
}

}  // namespace

void ExternalRegistry::Register(const std::string &module,
                                const std::string &name, std::size_t arity,
                                ExternalHandler handler) {
  handlers_.insert_or_assign(RegistryKey(module, name, arity),
                             std::move(handler));
}

const ExternalHandler *ExternalRegistry::Find(const std::string &module,
                                              const PredicateKey &key) const {
  auto it = handlers_.find(RegistryKey(module, key.name, key.arity));
  return it == handlers_.end() ? nullptr : &it->second;
}

std::vector<std::string> ExternalRegistry::Names() const {
  std::vector<std::string> names;
  for (const auto &[k, h] : handlers_) names.push_back(k);
  std::sort(names.begin(), names.end());
  return names;
}

// --- Solutions ------------------------------------------------------------

const Term *Solution::Get(const std::string &name) const {
  for (const auto &[n, t] : bindings) {
    if (n == name) return &t;
  }
  return nullptr;
}

std::string Solution::ToString() const {
  if (bindings.empty()) return "yes";
  std::string out;
  for (const auto &[name, value] : bindings) {
    if (!out.empty()) out += ", ";
    out += name + " = " + value.ToString();
  }
  return out;
}

const KnowledgeBase &LibraryProgram() {
  static const KnowledgeBase *library = [] {
    auto *kb = new KnowledgeBase;
    // getDescendantNodes enumerates the nodes below the root in pre-order,
    // children in child/2 order; the root itself is excluded.
    kb->Assert(ParseProgram(R"(
member(X, [X|_]).
member(X, [_|T]) :- member(X, T).
getDescendantNodes(Root, Node) :- child(Root, Child), subtreeNode(Child, Node).
subtreeNode(Node, Node).
subtreeNode(Top, Node) :- child(Top, Child), subtreeNode(Child, Node).
)"));
    return kb;
  }();
  return *library;
}

// --- Engine ---------------------------------------------------------------

namespace engine {

struct ContCell;
using Cont = std::shared_ptr<const ContCell>;
using GoalList = std::shared_ptr<const std::vector<Goal>>;

// Remaining goals of one clause body, then the parent continuation.
struct ContCell {
  GoalList goals;
  std::size_t index = 0;
  std::size_t cut_barrier = 0;
  std::uint64_t depth = 0;
  Cont next;
};

Cont MakeCell(GoalList goals, std::size_t cut_barrier, std::uint64_t depth,
              Cont next) {
  if (goals->empty()) return next;
  auto cell = std::make_shared<ContCell>();
  cell->goals = std::move(goals);
  cell->cut_barrier = cut_barrier;
  cell->depth = depth;
  cell->next = std::move(next);
  return cell;
}

Cont Advance(const Cont &c) {
  if (c->index + 1 >= c->goals->size()) return c->next;
  auto cell = std::make_shared<ContCell>(*c);
  ++cell->index;
  return cell;
}

// State shared between an engine and the sub-engines it starts for negation.
struct SharedState {
  Substitution subst;
  VarIdSource fresh;
  std::uint64_t steps = 0;
  SolveConfig config;
};

}  // namespace engine

using engine::Cont;
using engine::ContCell;
using engine::GoalList;
using engine::SharedState;
using engine::Advance;
using engine::MakeCell;

class SolutionStream::Engine {
 public:
  Engine(const KnowledgeBase &kb, const ExternalRegistry &registry,
         std::shared_ptr<SharedState> state)
      : kb_(kb), registry_(registry), state_(std::move(state)) {}

  bool Start(GoalList goals, std::uint64_t depth) {
    query_goals_ = goals;
    cont_ = MakeCell(std::move(goals), 0, depth, nullptr);
    return Run();
  }

  bool Resume() { return Backtrack() && Run(); }

  SharedState &state() { return *state_; }
  const std::string &first_label() const { return first_label_; }

 private:
  struct ChoicePoint {
    bool clauses_kind = true;
    std::size_t trail_mark = 0;
    Cont rest;
    std::uint64_t depth = 0;
    Term goal;
    const std::vector<Clause> *clauses = nullptr;
    std::shared_ptr<const ExternalAnswers> answers;
    std::size_t next = 0;
    std::size_t cut_barrier = 0;
    bool first = false;
  };

  bool Run() {
    while (cont_) {
      Cont cell = cont_;
      const Goal &goal = (*cell->goals)[cell->index];
      Cont rest = Advance(cell);
      bool ok = true;
      switch (goal.kind) {
        case Goal::Kind::kCut:
          choices_.erase(choices_.begin() + static_cast<std::ptrdiff_t>(
                                                std::min(cell->cut_barrier,
                                                         choices_.size())),
                         choices_.end());
          cont_ = rest;
          break;
        case Goal::Kind::kNot:
          if (ProveNegated(goal.inner, cell->depth)) {
            ok = false;
          } else {
            cont_ = rest;
          }
          break;
        case Goal::Kind::kCall:
          ok = Call(goal, *cell, rest);
          break;
      }
      if (!ok && !Backtrack()) return false;
    }
    return true;
  }

  bool ProveNegated(const std::vector<Goal> &inner, std::uint64_t depth) {
    std::size_t mark = state_->subst.Mark();
    Engine sub(kb_, registry_, state_);
    bool found = sub.Start(std::make_shared<const std::vector<Goal>>(inner),
                           depth);
    state_->subst.UndoTo(mark);
    return found;
  }

  bool Call(const Goal &goal, const ContCell &cell, const Cont &rest) {
    Substitution &s = state_->subst;
    Term t = s.Deref(goal.term);
    if (t.is_var()) {
      throw Error(ErrorCode::kInstantiationError,
                  "goal is an unbound variable");
    }
    std::optional<PredicateKey> key = KeyOf(t);
    if (!key) {
      throw Error(ErrorCode::kInstantiationError,
                  "goal is not callable: " + t.ToString());
    }
    bool first = cell.goals == query_goals_ && cell.index == 0;

    if (goal.module.empty()) {
      if (key->arity == 0 && key->name == "true") {
        if (first) first_label_.clear();
        cont_ = rest;
        return true;
      }
      if (key->arity == 0 && (key->name == "fail" || key->name == "false")) {
        return false;
      }
      if (key->arity == 2 && key->name == "=") {
        if (!UnifyInPlace(t.args()[0], t.args()[1], s)) return false;
        if (first) first_label_.clear();
        cont_ = rest;
        return true;
      }
      if (key->arity == 2 && key->name == "==") {
        if (!(Apply(s, t.args()[0]) == Apply(s, t.args()[1]))) return false;
        if (first) first_label_.clear();
        cont_ = rest;
        return true;
      }

      const std::vector<Clause> *clauses = kb_.Lookup(*key);
      if (clauses == nullptr) clauses = LibraryProgram().Lookup(*key);
      if (clauses != nullptr) {
        std::uint64_t depth = cell.depth + 1;
        if (depth > state_->config.max_depth) {
          throw Error(ErrorCode::kResourceExhausted,
                      "depth limit " +
                          std::to_string(state_->config.max_depth) +
                          " exceeded at " + key->ToString());
        }
        return Resolve(t, clauses, 0, rest, depth, first, choices_.size());
      }
    }

    const ExternalHandler *handler = registry_.Find(goal.module, *key);
    if (handler == nullptr) {
      std::string name = goal.module.empty()
                             ? key->ToString()
                             : goal.module + ":" + key->ToString();
      throw Error(ErrorCode::kUnknownPredicate, name);
    }
    std::vector<Term> args;
    for (const Term &a : t.args()) args.push_back(Apply(s, a));
    auto answers = std::make_shared<const ExternalAnswers>((*handler)(args));
    return TryAnswers(t, answers, 0, rest, first);
  }

  bool Resolve(const Term &goal, const std::vector<Clause> *clauses,
               std::size_t start, const Cont &rest, std::uint64_t depth,
               bool first, std::size_t barrier) {
    Substitution &s = state_->subst;
    for (std::size_t i = start; i < clauses->size(); ++i) {
      if (++state_->steps > state_->config.max_resolution_steps) {
        throw Error(ErrorCode::kResourceExhausted,
                    "resolution step limit " +
                        std::to_string(state_->config.max_resolution_steps) +
                        " exceeded");
      }
      const Clause &c = (*clauses)[i];
      std::size_t mark = s.Mark();
      bool ground_fact = c.body.empty() && c.head.IsGround();
      Clause renamed;
      const Clause *use = &c;
      if (!ground_fact) {
        renamed = RenameApart(c, state_->fresh);
        use = &renamed;
      }
      if (!UnifyInPlace(use->head, goal, s)) {
        s.UndoTo(mark);
        continue;
      }
      if (i + 1 < clauses->size()) {
        ChoicePoint cp;
        cp.clauses_kind = true;
        cp.trail_mark = mark;
        cp.rest = rest;
        cp.depth = depth;
        cp.goal = goal;
        cp.clauses = clauses;
        cp.next = i + 1;
        cp.cut_barrier = barrier;
        cp.first = first;
        choices_.push_back(std::move(cp));
      }
      if (first) first_label_ = c.label;
      if (use->body.empty()) {
        cont_ = rest;
      } else {
        auto body = std::make_shared<const std::vector<Goal>>(
            ground_fact ? c.body : std::move(renamed.body));
        cont_ = MakeCell(std::move(body), barrier, depth, rest);
      }
      return true;
    }
    return false;
  }

  bool TryAnswers(const Term &goal,
                  const std::shared_ptr<const ExternalAnswers> &answers,
                  std::size_t start, const Cont &rest, bool first) {
    Substitution &s = state_->subst;
    for (std::size_t i = start; i < answers->size(); ++i) {
      const std::vector<Term> &tuple = (*answers)[i];
      std::size_t mark = s.Mark();
      bool ok = tuple.size() == goal.arity();
      for (std::size_t j = 0; ok && j < tuple.size(); ++j) {
        ok = UnifyInPlace(goal.args()[j], tuple[j], s);
      }
      if (!ok) {
        s.UndoTo(mark);
        continue;
      }
      if (i + 1 < answers->size()) {
        ChoicePoint cp;
        cp.clauses_kind = false;
        cp.trail_mark = mark;
        cp.rest = rest;
        cp.goal = goal;
        cp.answers = answers;
        cp.next = i + 1;
        cp.first = first;
        choices_.push_back(std::move(cp));
      }
      if (first) first_label_.clear();
      cont_ = rest;
      return true;
    }
    return false;
  }

  bool Backtrack() {
    while (!choices_.empty()) {
      ChoicePoint cp = std::move(choices_.back());
      choices_.pop_back();
      state_->subst.UndoTo(cp.trail_mark);
      bool ok = cp.clauses_kind
                    ? Resolve(cp.goal, cp.clauses, cp.next, cp.rest, cp.depth,
                              cp.first, cp.cut_barrier)
                    : TryAnswers(cp.goal, cp.answers, cp.next, cp.rest,
                                 cp.first);
      if (ok) return true;
    }
    cont_ = nullptr;
    return false;
  }

  const KnowledgeBase &kb_;
  const ExternalRegistry &registry_;
  std::shared_ptr<SharedState> state_;
  GoalList query_goals_;
  Cont cont_;
  std::vector<ChoicePoint> choices_;
  std::string first_label_;
};

SolutionStream::SolutionStream(const KnowledgeBase &kb,
                               const ExternalRegistry &registry, Query query,
                               SolveConfig config)
    : query_(std::move(query)) {
  if (config.max_resolution_steps == 0 || config.max_depth == 0) {
    throw Error(ErrorCode::kConfigError, "solver limits must be positive");
  }
  auto state = std::make_shared<SharedState>();
  state->fresh = VarIdSource(query_.next_var);
  state->config = config;
  engine_ = std::make_unique<Engine>(kb, registry, std::move(state));
}

SolutionStream::~SolutionStream() = default;
SolutionStream::SolutionStream(SolutionStream &&) noexcept = default;
SolutionStream &SolutionStream::operator=(SolutionStream &&) noexcept =
    default;

std::optional<Solution> SolutionStream::Next() {
  if (done_) return std::nullopt;
  bool found = false;
  try {
    if (!started_) {
      started_ = true;
      found = engine_->Start(
          std::make_shared<const std::vector<Goal>>(query_.goals), 0);
    } else {
      found = engine_->Resume();
    }
  } catch (...) {
    done_ = true;
    throw;
  }
  if (!found) {
    done_ = true;
    return std::nullopt;
  }
  Solution solution;
  const Substitution &s = engine_->state().subst;
  for (const auto &[name, id] : query_.variables) {
    if (name.empty() || name[0] == '_') continue;
    solution.bindings.emplace_back(name, Apply(s, Term::Var(id, name)));
  }
  solution.clause_label = engine_->first_label();
  return solution;
}

std::uint64_t SolutionStream::steps() const { return engine_->state().steps; }

SolutionStream Solve(const KnowledgeBase &kb, const ExternalRegistry &registry,
                     Query query, SolveConfig config) {
  return SolutionStream(kb, registry, std::move(query), config);
}

std::vector<Solution> SolveAll(const KnowledgeBase &kb,
                               const ExternalRegistry &registry, Query query,
                               SolveConfig config) {
  SolutionStream stream(kb, registry, std::move(query), config);
  std::vector<Solution> out;
  while (auto s = stream.Next()) out.push_back(std::move(*s));
  return out;
}

std::optional<Solution> SolveFirst(const KnowledgeBase &kb,
                                   const ExternalRegistry &registry,
                                   Query query, SolveConfig config) {
  SolutionStream stream(kb, registry, std::move(query), config);
  return stream.Next();
}

}  // namespace annolog
