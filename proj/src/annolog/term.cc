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

#include "annolog/term.h"

#include <functional>
#include <utility>

#include "annolog/error.h"

namespace annolog {

struct Term::Node {
  Kind kind;
  std::string text;       // variable name, atom text or functor
  VarId var = 0;
  std::int64_t value = 0;
  std::vector<Term> args;
};

namespace {

const std::string kNilText = "[]";
const std::string kConsFunctor = ".";

bool IsBareAtom(const std::string &text) {
  if (text.empty() || !(text[0] >= 'a' && text[0] <= 'z')) return false;
  for (char c : text) {
    bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
              (c >= '0' && c <= '9') || c == '_';
    if (!ok) return false;
  }
  return true;
}

std::string QuoteAtom(const std::string &text) {
  if (text == kNilText || IsBareAtom(text)) return text;
  std::string out = "\"";
  for (char c : text) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  out += '"';
  return out;
}

}  // namespace

Term::Term() : Term(Nil()) {}

Term Term::Var(VarId id, std::string name) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::kVariable;
  n->var = id;
  n->text = std::move(name);
  return Term(std::move(n));
}

Term Term::Atom(std::string text) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::kAtom;
  n->text = std::move(text);
  return Term(std::move(n));
}

Term Term::Int(std::int64_t value) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::kInteger;
  n->value = value;
  return Term(std::move(n));
}

Term Term::Compound(std::string functor, std::vector<Term> args) {
  if (args.empty()) {
    throw Error(ErrorCode::kSchemaError,
                "compound term '" + functor + "' needs at least one argument");
  }
  auto n = std::make_shared<Node>();
  n->kind = Kind::kCompound;
  n->text = std::move(functor);
  n->args = std::move(args);
  return Term(std::move(n));
}

Term Term::Nil() {
  static const Term nil = Atom(kNilText);
  return nil;
}

Term Term::Cons(Term head, Term tail) {
  return Compound(kConsFunctor, {std::move(head), std::move(tail)});
}

Term Term::List(const std::vector<Term> &items, Term tail) {
  Term list = std::move(tail);
  for (auto it = items.rbegin(); it != items.rend(); ++it) {
    list = Cons(*it, std::move(list));
  }
  return list;
}

Term::Kind Term::kind() const { return node_->kind; }

bool Term::is_nil() const {
  return node_->kind == Kind::kAtom && node_->text == kNilText;
}

bool Term::is_cons() const {
  return node_->kind == Kind::kCompound && node_->args.size() == 2 &&
         node_->text == kConsFunctor;
}

VarId Term::var_id() const { return node_->var; }
const std::string &Term::name() const { return node_->text; }
std::int64_t Term::int_value() const { return node_->value; }
std::span<const Term> Term::args() const { return node_->args; }

std::optional<std::vector<Term>> Term::ListItems() const {
  std::vector<Term> items;
  const Term *cur = this;
  while (cur->is_cons()) {
    items.push_back(cur->args()[0]);
    cur = &cur->args()[1];
  }
  if (!cur->is_nil()) return std::nullopt;
  return items;
}

bool Term::IsGround() const {
  switch (kind()) {
    case Kind::kVariable: return false;
    case Kind::kCompound:
      for (const Term &a : args()) {
        if (!a.IsGround()) return false;
      }
      return true;
    default: return true;
  }
}

void Term::CollectVars(std::vector<VarId> *out) const {
  if (is_var()) {
    for (VarId v : *out) {
      if (v == var_id()) return;
    }
    out->push_back(var_id());
  } else if (is_compound()) {
    for (const Term &a : args()) a.CollectVars(out);
  }
}

bool operator==(const Term &a, const Term &b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Term::Kind::kVariable: return a.var_id() == b.var_id();
    case Term::Kind::kAtom: return a.name() == b.name();
    case Term::Kind::kInteger: return a.int_value() == b.int_value();
    case Term::Kind::kCompound: {
      if (a.name() != b.name() || a.arity() != b.arity()) return false;
      for (std::size_t i = 0; i < a.arity(); ++i) {
        if (!(a.args()[i] == b.args()[i])) return false;
      }
      return true;
    }
  }
  return false;
}

std::string Term::ToString() const {
  switch (kind()) {
    case Kind::kVariable:
      if (!name().empty() && name() != "_") return name();
      return "_G" + std::to_string(var_id());
    case Kind::kAtom:
      return QuoteAtom(name());
    case Kind::kInteger:
      return std::to_string(int_value());
    case Kind::kCompound:
      break;
  }
  if (is_cons()) {
    std::string out = "[";
    const Term *cur = this;
    bool first = true;
    while (cur->is_cons()) {
      if (!first) out += ",";
      out += cur->args()[0].ToString();
      first = false;
      cur = &cur->args()[1];
    }
    if (!cur->is_nil()) out += "|" + cur->ToString();
    return out + "]";
  }
  std::string out = QuoteAtom(name()) + "(";
  for (std::size_t i = 0; i < arity(); ++i) {
    if (i > 0) out += ",";
    out += args()[i].ToString();
  }
  return out + ")";
}

// --- Substitution ---------------------------------------------------------

const Term *Substitution::Lookup(VarId id) const {
  auto it = bindings_.find(id);
  return it == bindings_.end() ? nullptr : &it->second;
}

void Substitution::Bind(VarId id, Term value) {
  bindings_.insert_or_assign(id, std::move(value));
  trail_.push_back(id);
}

Term Substitution::Deref(const Term &t) const {
  Term cur = t;
  while (cur.is_var()) {
    const Term *next = Lookup(cur.var_id());
    if (next == nullptr) break;
    cur = *next;
  }
  return cur;
}

void Substitution::UndoTo(std::size_t mark) {
  while (trail_.size() > mark) {
    bindings_.erase(trail_.back());
    trail_.pop_back();
  }
}

namespace {

bool Occurs(VarId v, const Term &t, const Substitution &s) {
  Term d = s.Deref(t);
  if (d.is_var()) return d.var_id() == v;
  if (d.is_compound()) {
    for (const Term &a : d.args()) {
      if (Occurs(v, a, s)) return true;
    }
  }
  return false;
}

}  // namespace

bool UnifyInPlace(const Term &a, const Term &b, Substitution &s,
                  OccursCheck check) {
  Term x = s.Deref(a);
  Term y = s.Deref(b);
  if (x.is_var() && y.is_var() && x.var_id() == y.var_id()) return true;
  if (x.is_var()) {
    if (check == OccursCheck::kOn && Occurs(x.var_id(), y, s)) return false;
    s.Bind(x.var_id(), y);
    return true;
  }
  if (y.is_var()) {
    if (check == OccursCheck::kOn && Occurs(y.var_id(), x, s)) return false;
    s.Bind(y.var_id(), x);
    return true;
  }
  if (x.kind() != y.kind()) return false;
  switch (x.kind()) {
    case Term::Kind::kAtom: return x.name() == y.name();
    case Term::Kind::kInteger: return x.int_value() == y.int_value();
    case Term::Kind::kCompound: {
      if (x.name() != y.name() || x.arity() != y.arity()) return false;
      for (std::size_t i = 0; i < x.arity(); ++i) {
        if (!UnifyInPlace(x.args()[i], y.args()[i], s, check)) return false;
      }
      return true;
    }
    case Term::Kind::kVariable: break;
  }
  return false;
}

std::optional<Substitution> Unify(const Term &a, const Term &b, Substitution s,
                                  OccursCheck check) {
  if (!UnifyInPlace(a, b, s, check)) return std::nullopt;
  return s;
}

Term Apply(const Substitution &s, const Term &t) {
  if (s.empty()) return t;
  Term d = s.Deref(t);
  if (!d.is_compound()) return d;
  std::vector<Term> args;
  args.reserve(d.arity());
  bool changed = false;
  for (const Term &a : d.args()) {
    args.push_back(Apply(s, a));
    if (!(args.back() == a)) changed = true;
  }
  if (!changed) return d;
  return Term::Compound(d.name(), std::move(args));
}

// --- Goals and clauses ----------------------------------------------------

Goal Goal::Call(Term term, std::string module) {
  Goal g;
  g.kind = Kind::kCall;
  g.term = std::move(term);
  g.module = std::move(module);
  return g;
}

Goal Goal::Cut() {
  Goal g;
  g.kind = Kind::kCut;
  return g;
}

Goal Goal::Not(std::vector<Goal> inner) {
  Goal g;
  g.kind = Kind::kNot;
  g.inner = std::move(inner);
  return g;
}

std::string Goal::ToString() const {
  switch (kind) {
    case Kind::kCut:
      return "!";
    case Kind::kNot: {
      if (inner.size() == 1 && inner[0].kind == Kind::kCall) {
        return "\\+ " + inner[0].ToString();
      }
      std::string out = "\\+ (";
      for (std::size_t i = 0; i < inner.size(); ++i) {
        if (i > 0) out += ", ";
        out += inner[i].ToString();
      }
      return out + ")";
    }
    case Kind::kCall:
      break;
  }
  if (module.empty() && term.is_compound() && term.arity() == 2 &&
      (term.name() == "=" || term.name() == "==")) {
    return term.args()[0].ToString() + " " + term.name() + " " +
           term.args()[1].ToString();
  }
  std::string out = module.empty() ? "" : QuoteAtom(module) + ":";
  return out + term.ToString();
}

std::string Clause::ToString() const {
  std::string out = head.ToString();
  if (!body.empty()) {
    out += " :-\n";
    for (std::size_t i = 0; i < body.size(); ++i) {
      out += "    " + body[i].ToString();
      out += (i + 1 < body.size()) ? ",\n" : "";
    }
  }
  return out + ".";
}

namespace {

Term RenameTerm(const Term &t, std::unordered_map<VarId, Term> &map,
                VarIdSource &fresh) {
  switch (t.kind()) {
    case Term::Kind::kVariable: {
      auto it = map.find(t.var_id());
      if (it != map.end()) return it->second;
      VarId id = fresh.Next();
      Term v = Term::Var(id, "_G" + std::to_string(id));
      map.emplace(t.var_id(), v);
      return v;
    }
    case Term::Kind::kCompound: {
      std::vector<Term> args;
      args.reserve(t.arity());
      for (const Term &a : t.args()) args.push_back(RenameTerm(a, map, fresh));
      return Term::Compound(t.name(), std::move(args));
    }
    default:
      return t;
  }
}

Goal RenameGoal(const Goal &g, std::unordered_map<VarId, Term> &map,
                VarIdSource &fresh) {
  Goal out;
  out.kind = g.kind;
  out.module = g.module;
  if (g.kind == Goal::Kind::kCall) out.term = RenameTerm(g.term, map, fresh);
  for (const Goal &in : g.inner) out.inner.push_back(RenameGoal(in, map, fresh));
  return out;
}

// Alpha-equivalence keeps a bijection between the variable ids of both sides.
struct VarBijection {
  std::unordered_map<VarId, VarId> left;
  std::unordered_map<VarId, VarId> right;

  bool Match(VarId a, VarId b) {
    auto l = left.find(a);
    auto r = right.find(b);
    if (l == left.end() && r == right.end()) {
      left.emplace(a, b);
      right.emplace(b, a);
      return true;
    }
    return l != left.end() && r != right.end() && l->second == b &&
           r->second == a;
  }
};

bool AlphaTerm(const Term &a, const Term &b, VarBijection &bij) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Term::Kind::kVariable: return bij.Match(a.var_id(), b.var_id());
    case Term::Kind::kAtom: return a.name() == b.name();
    case Term::Kind::kInteger: return a.int_value() == b.int_value();
    case Term::Kind::kCompound:
      if (a.name() != b.name() || a.arity() != b.arity()) return false;
      for (std::size_t i = 0; i < a.arity(); ++i) {
        if (!AlphaTerm(a.args()[i], b.args()[i], bij)) return false;
      }
      return true;
  }
  return false;
}

bool AlphaGoal(const Goal &a, const Goal &b, VarBijection &bij) {
  if (a.kind != b.kind || a.module != b.module) return false;
  if (a.kind == Goal::Kind::kCall && !AlphaTerm(a.term, b.term, bij)) {
    return false;
  }
  if (a.inner.size() != b.inner.size()) return false;
  for (std::size_t i = 0; i < a.inner.size(); ++i) {
    if (!AlphaGoal(a.inner[i], b.inner[i], bij)) return false;
  }
  return true;
}

}  // namespace

Clause RenameApart(const Clause &clause, VarIdSource &fresh) {
  std::unordered_map<VarId, Term> map;
  Clause out;
  out.head = RenameTerm(clause.head, map, fresh);
  out.body.reserve(clause.body.size());
  for (const Goal &g : clause.body) out.body.push_back(RenameGoal(g, map, fresh));
  out.label = clause.label;
  out.pos = clause.pos;
  return out;
}

bool AlphaEquivalent(const Clause &a, const Clause &b) {
  VarBijection bij;
  if (!AlphaTerm(a.head, b.head, bij)) return false;
  if (a.body.size() != b.body.size()) return false;
  for (std::size_t i = 0; i < a.body.size(); ++i) {
    if (!AlphaGoal(a.body[i], b.body[i], bij)) return false;
  }
  return true;
}

bool AlphaEquivalent(const Term &a, const Term &b) {
  VarBijection bij;
  return AlphaTerm(a, b, bij);
}

std::string PredicateKey::ToString() const {
  return name + "/" + std::to_string(arity);
}

std::size_t PredicateKeyHash::operator()(const PredicateKey &k) const {
  return std::hash<std::string>()(k.name) * 31 + k.arity;
}

std::optional<PredicateKey> KeyOf(const Term &t) {
  if (t.is_atom()) return PredicateKey{t.name(), 0};
  if (t.is_compound()) return PredicateKey{t.name(), t.arity()};
  return std::nullopt;
}

}  // namespace annolog
