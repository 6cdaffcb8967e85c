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

// Logic terms, clauses, substitutions and unification.
//
// Terms are immutable values backed by shared nodes, so copying a term is
// cheap and a term can be shared freely across threads. Variables are
// identified by a numeric id; the name is kept only for printing and for
// reporting query bindings.

#ifndef ANNOLOG_TERM_H_
#define ANNOLOG_TERM_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace annolog {

using VarId = std::uint64_t;

class Term {
 public:
  enum class Kind : std::uint8_t { kVariable, kAtom, kInteger, kCompound };

  // Default-constructed term is the empty list atom "[]".
  Term();

  static Term Var(VarId id, std::string name = {});
  static Term Atom(std::string text);
  static Term Int(std::int64_t value);
  // Throws Error(kSchemaError) when args is empty; compounds have arity >= 1.
  static Term Compound(std::string functor, std::vector<Term> args);
  static Term Nil();
  static Term Cons(Term head, Term tail);
  static Term List(const std::vector<Term> &items, Term tail = Nil());

  Kind kind() const;
  bool is_var() const { return kind() == Kind::kVariable; }
  bool is_atom() const { return kind() == Kind::kAtom; }
  bool is_int() const { return kind() == Kind::kInteger; }
  bool is_compound() const { return kind() == Kind::kCompound; }
  bool is_nil() const;
  bool is_cons() const;

  // Variable id; only valid for variables.
  VarId var_id() const;
  // Variable name, atom text, or compound functor.
  const std::string &name() const;
  std::int64_t int_value() const;
  std::span<const Term> args() const;
  std::size_t arity() const { return args().size(); }

  // Elements of a proper list, or nullopt for anything else.
  std::optional<std::vector<Term>> ListItems() const;

  bool IsGround() const;
  void CollectVars(std::vector<VarId> *out) const;

  // Structural equality; variables compare by id.
  friend bool operator==(const Term &a, const Term &b);

  // Prints in rule-language syntax; the output re-parses to an equal term
  // modulo variable ids.
  std::string ToString() const;

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// Mapping from variable id to term. Bindings may chain through other
// variables; Deref and Apply follow chains. A trail records bind order so the
// solver can undo bindings on backtracking.
class Substitution {
 public:
  const Term *Lookup(VarId id) const;
  void Bind(VarId id, Term value);

  // Follows variable chains at the top of t only.
  Term Deref(const Term &t) const;

  std::size_t Mark() const { return trail_.size(); }
  void UndoTo(std::size_t mark);

  std::size_t size() const { return bindings_.size(); }
  bool empty() const { return bindings_.empty(); }
  const std::unordered_map<VarId, Term> &bindings() const { return bindings_; }

 private:
  std::unordered_map<VarId, Term> bindings_;
  std::vector<VarId> trail_;
};

enum class OccursCheck { kOff, kOn };

// Unifies a and b under s, extending s in place. On failure, s may hold
// partial bindings; callers that need to restore it use Mark/UndoTo.
bool UnifyInPlace(const Term &a, const Term &b, Substitution &s,
                  OccursCheck check = OccursCheck::kOff);

// Functional form: returns the extended substitution or nullopt.
std::optional<Substitution> Unify(const Term &a, const Term &b,
                                  Substitution s = {},
                                  OccursCheck check = OccursCheck::kOff);

// Replaces every bound variable in t, transitively.
Term Apply(const Substitution &s, const Term &t);

// Fresh variable ids for one derivation.
class VarIdSource {
 public:
  explicit VarIdSource(VarId first = 1) : next_(first) {}
  VarId Next() { return next_++; }
  VarId peek() const { return next_; }

 private:
  VarId next_;
};

struct SourcePos {
  int line = 0;
  int column = 0;
};

struct Goal {
  enum class Kind : std::uint8_t { kCall, kCut, kNot };

  Kind kind = Kind::kCall;
  std::string module;         // empty when unqualified
  Term term;                  // kCall only
  std::vector<Goal> inner;    // kNot only

  static Goal Call(Term term, std::string module = {});
  static Goal Cut();
  static Goal Not(std::vector<Goal> inner);

  std::string ToString() const;
};

struct Clause {
  Term head;
  std::vector<Goal> body;
  // Identifier reported when this clause proves a top-level goal. Set from a
  // "% @id NAME" line directly above the clause, else "name/arity#k".
  std::string label;
  SourcePos pos;

  bool is_fact() const { return body.empty(); }
  std::string ToString() const;
};

// Returns an alpha-equivalent copy whose variables are all fresh.
Clause RenameApart(const Clause &clause, VarIdSource &fresh);

// Goal sequences and clauses that differ only in variable ids.
bool AlphaEquivalent(const Clause &a, const Clause &b);
bool AlphaEquivalent(const Term &a, const Term &b);

// "functor/arity" key used for predicate lookup.
struct PredicateKey {
  std::string name;
  std::size_t arity = 0;

  friend bool operator==(const PredicateKey &, const PredicateKey &) = default;
  std::string ToString() const;
};

struct PredicateKeyHash {
  std::size_t operator()(const PredicateKey &k) const;
};

// Key of a callable term (atom or compound); nullopt for anything else.
std::optional<PredicateKey> KeyOf(const Term &t);

}  // namespace annolog

#endif  // ANNOLOG_TERM_H_
