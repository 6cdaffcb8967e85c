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

#include "annolog/bridge.h"

#include <algorithm>
#include <limits>
#include <set>

#include "annolog/error.h"

namespace annolog {

namespace {

Clause Fact(const std::string &name, std::vector<Term> args) {
  Clause c;
  c.head = Term::Compound(name, std::move(args));
  return c;
}

const std::vector<std::string> &EdgeLabels() {
  static const std::vector<std::string> labels = {
      "subj", "pred", "modifier", "objprep", "whadv", "child"};
  return labels;
}

std::string NodeOfRef(const FactBase &fb, const Cas &cas,
                      const FeatureValue *value, const Annotation &edge,
                      const char *role) {
  if (value == nullptr || !std::holds_alternative<AnnotationRef>(*value)) {
    throw Error(ErrorCode::kSchemaViolation,
                "dependency " + std::to_string(edge.id) + " lacks " + role);
  }
  AnnotationId id = std::get<AnnotationRef>(*value).id;
  auto it = fb.annotation_to_node.find(id);
  if (it == fb.annotation_to_node.end()) {
    throw Error(ErrorCode::kSchemaViolation,
                "dependency " + std::to_string(edge.id) + " " + role +
                    " references annotation " + std::to_string(id) +
                    (cas.Contains(id) ? ", which is not a parse node"
                                      : ", which does not exist"));
  }
  return it->second;
}

std::vector<AnnotationRef> RefList(const Annotation &a, const char *name) {
  const FeatureValue *v = a.Feature(name);
  if (v == nullptr) return {};
  if (auto *list = std::get_if<std::vector<AnnotationRef>>(v)) return *list;
  if (auto *one = std::get_if<AnnotationRef>(v)) return {*one};
  return {};
}

}  // namespace

std::optional<AnnotationId> FactBase::AnnotationOf(
    const std::string &node) const {
  auto it = node_to_annotation.find(node);
  if (it == node_to_annotation.end()) return std::nullopt;
  return it->second;
}

const std::vector<PredicateKey> &SchemaPredicates() {
  static const std::vector<PredicateKey> keys = [] {
    std::vector<PredicateKey> k = {{"node", 1},      {"span", 3},
                                   {"coveredText", 2}, {"lemmaForm", 2},
                                   {"pennTag", 2},   {"semanticType", 2}};
    for (const std::string &label : EdgeLabels()) k.push_back({label, 2});
    k.push_back({"questionRoot", 1});
    return k;
  }();
  return keys;
}

void DeclareSchema(KnowledgeBase &kb, const std::vector<InputSpec> &inputs) {
  for (const PredicateKey &k : SchemaPredicates()) kb.Declare(k);
  for (const InputSpec &in : inputs) {
    if (!in.predicate.empty()) kb.Declare({in.predicate, 2});
  }
}

FactBase CasToFacts(const Cas &cas, const std::vector<InputSpec> &inputs) {
  FactBase fb;
  std::vector<const Annotation *> nodes =
      cas.AnnotationsOfType(types::kParseNode);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    std::string name = "n" + std::to_string(i + 1);
    fb.node_to_annotation[name] = nodes[i]->id;
    fb.annotation_to_node[nodes[i]->id] = name;
  }

  for (const Annotation *a : nodes) {
    Term n = Term::Atom(fb.annotation_to_node[a->id]);
    fb.facts.push_back(Fact("node", {n}));
    fb.facts.push_back(
        Fact("span", {n, Term::Int(a->begin), Term::Int(a->end)}));
    fb.facts.push_back(Fact("coveredText", {n, Term::Atom(cas.CoveredText(*a))}));
    if (auto *v = a->Feature("lemma")) {
      fb.facts.push_back(
          Fact("lemmaForm", {n, Term::Atom(std::get<std::string>(*v))}));
    }
    if (auto *v = a->Feature("pennTag")) {
      fb.facts.push_back(
          Fact("pennTag", {n, Term::Atom(std::get<std::string>(*v))}));
    }
    if (auto *v = a->Feature("semanticTypes")) {
      for (const std::string &t : std::get<std::vector<std::string>>(*v)) {
        fb.facts.push_back(Fact("semanticType", {n, Term::Atom(t)}));
      }
    }
  }

  // Edges in input order, which is annotation id order.
  std::vector<const Annotation *> edges =
      cas.AnnotationsOfType(types::kDependency);
  std::sort(edges.begin(), edges.end(),
            [](const Annotation *a, const Annotation *b) {
              return a->id < b->id;
            });
  for (const Annotation *e : edges) {
    const FeatureValue *label = e->Feature("label");
    if (label == nullptr || !std::holds_alternative<std::string>(*label)) {
      throw Error(ErrorCode::kSchemaViolation,
                  "dependency " + std::to_string(e->id) + " lacks a label");
    }
    const std::string &l = std::get<std::string>(*label);
    if (std::find(EdgeLabels().begin(), EdgeLabels().end(), l) ==
        EdgeLabels().end()) {
      throw Error(ErrorCode::kSchemaViolation, "unknown edge label " + l);
    }
    std::string gov = NodeOfRef(fb, cas, e->Feature("governor"), *e, "governor");
    std::string dep =
        NodeOfRef(fb, cas, e->Feature("dependent"), *e, "dependent");
    fb.facts.push_back(Fact(l, {Term::Atom(gov), Term::Atom(dep)}));
  }

  for (const Annotation *q : cas.AnnotationsOfType(types::kQuestion)) {
    const FeatureValue *root = q->Feature("root");
    if (root == nullptr) continue;
    AnnotationId id = std::get<AnnotationRef>(*root).id;
    auto it = fb.annotation_to_node.find(id);
    if (it == fb.annotation_to_node.end()) {
      throw Error(ErrorCode::kSchemaViolation,
                  "question root references annotation " + std::to_string(id) +
                      ", which is not a parse node");
    }
    fb.root_node = it->second;
    fb.facts.push_back(Fact("questionRoot", {Term::Atom(fb.root_node)}));
    break;
  }

  for (const InputSpec &in : inputs) {
    for (const Annotation *a : cas.AnnotationsOfType(in.type)) {
      std::vector<AnnotationRef> refs = RefList(*a, "nodes");
      if (refs.empty()) refs = RefList(*a, "arguments");
      std::vector<std::string> names;
      if (refs.empty()) {
        for (const Annotation *n : nodes) {
          if (n->begin >= a->begin && n->end <= a->end) {
            names.push_back(fb.annotation_to_node[n->id]);
          }
        }
      } else {
        for (const AnnotationRef &r : refs) {
          auto it = fb.annotation_to_node.find(r.id);
          if (it != fb.annotation_to_node.end()) names.push_back(it->second);
        }
      }
      for (const std::string &n : names) {
        fb.facts.push_back(
            Fact("semanticType", {Term::Atom(n), Term::Atom(in.type)}));
      }
      if (!in.predicate.empty() && !fb.root_node.empty()) {
        std::vector<Term> items;
        for (const std::string &n : names) items.push_back(Term::Atom(n));
        fb.facts.push_back(Fact(
            in.predicate, {Term::Atom(fb.root_node), Term::List(items)}));
      }
    }
  }
  return fb;
}

KnowledgeBase WithFacts(const KnowledgeBase &rules, const FactBase &facts) {
  KnowledgeBase kb = rules;
  kb.Assert(facts.facts, Provenance::kDynamic);
  return kb;
}

// --- Output specs ---------------------------------------------------------

namespace {

[[noreturn]] void ConfigFail(const std::string &msg) {
  throw Error(ErrorCode::kConfigError, msg);
}

FeatureKind RequiredKindFor(FeatureSource::Kind k, bool list) {
  switch (k) {
    case FeatureSource::Kind::kClauseLabel:
      return FeatureKind::kString;
    case FeatureSource::Kind::kConstant:
      return list ? FeatureKind::kStringList : FeatureKind::kString;
    default:
      return FeatureKind::kString;
  }
}

}  // namespace

void ValidateOutputEntry(const OutputEntry &entry, const TypeSystem &ts) {
  std::string where = "output " + entry.predicate + "/" +
                      std::to_string(entry.arity);
  if (entry.predicate.empty()) ConfigFail("output entry lacks a predicate");
  if (!ts.Has(entry.type)) ConfigFail(where + ": unknown type " + entry.type);
  if (!ts.Subsumes(types::kAnnotation, entry.type)) {
    ConfigFail(where + ": " + entry.type + " is not an annotation type");
  }
  if (entry.span_args.empty()) ConfigFail(where + ": no span source");
  for (std::size_t p : entry.span_args) {
    if (p >= entry.arity) {
      ConfigFail(where + ": span position " + std::to_string(p) +
                 " out of range");
    }
  }
  for (const auto &[name, src] : entry.features) {
    std::optional<FeatureKind> kind = ts.FeatureOf(entry.type, name);
    if (!kind) ConfigFail(where + ": " + entry.type + " has no feature " + name);
    for (std::size_t p : src.args) {
      if (p >= entry.arity) {
        ConfigFail(where + ": feature " + name + " position " +
                   std::to_string(p) + " out of range");
      }
    }
    switch (src.kind) {
      case FeatureSource::Kind::kArg:
        if (src.args.size() != 1) {
          ConfigFail(where + ": feature " + name + " needs one position");
        }
        break;
      case FeatureSource::Kind::kArgs:
        if (*kind != FeatureKind::kRefList &&
            *kind != FeatureKind::kStringList &&
            *kind != FeatureKind::kIntegerList) {
          ConfigFail(where + ": feature " + name +
                     " takes several positions but is not a list");
        }
        break;
      case FeatureSource::Kind::kClauseLabel:
      case FeatureSource::Kind::kConstant:
        if (*kind != RequiredKindFor(src.kind, src.constant_is_list)) {
          ConfigFail(where + ": feature " + name + " is " +
                     FeatureKindName(*kind) + ", source gives " +
                     FeatureKindName(
                         RequiredKindFor(src.kind, src.constant_is_list)));
        }
        break;
    }
  }
}

OutputEntry OutputEntryFromJson(const nlohmann::ordered_json &j,
                                const std::string &path) {
  auto fail = [&](const std::string &field, const std::string &msg) {
    ConfigFail(path + field + ": " + msg);
  };
  if (!j.is_object()) fail("", "expected object");
  OutputEntry e;
  if (!j.contains("predicate") || !j["predicate"].is_string()) {
    fail(".predicate", "expected string");
  }
  e.predicate = j["predicate"].get<std::string>();
  if (!j.contains("arity") || !j["arity"].is_number_unsigned()) {
    fail(".arity", "expected non-negative integer");
  }
  e.arity = j["arity"].get<std::size_t>();
  if (!j.contains("type") || !j["type"].is_string()) {
    fail(".type", "expected string");
  }
  e.type = j["type"].get<std::string>();
  auto positions = [&](const nlohmann::ordered_json &v,
                       const std::string &field) {
    std::vector<std::size_t> out;
    if (v.is_number_unsigned()) {
      out.push_back(v.get<std::size_t>());
    } else if (v.is_array()) {
      for (const auto &p : v) {
        if (!p.is_number_unsigned()) fail(field, "expected positions");
        out.push_back(p.get<std::size_t>());
      }
    } else {
      fail(field, "expected position or list of positions");
    }
    return out;
  };
  if (!j.contains("span")) fail(".span", "missing required field");
  e.span_args = positions(j["span"], ".span");

  if (j.contains("roles")) {
    if (!j["roles"].is_array()) fail(".roles", "expected array");
    std::vector<std::string> roles;
    for (const auto &r : j["roles"]) {
      if (!r.is_string()) fail(".roles", "expected strings");
      roles.push_back(r.get<std::string>());
    }
    if (roles.size() != e.arity) fail(".roles", "one role per argument");
    OutputEntry rel = RelationOutput(e.predicate, roles);
    rel.type = e.type;
    rel.span_args = e.span_args;
    e.features = rel.features;
  }

  if (j.contains("features")) {
    const auto &fs = j["features"];
    if (!fs.is_object()) fail(".features", "expected object");
    for (const auto &[name, v] : fs.items()) {
      std::string field = ".features." + name;
      FeatureSource src;
      if (v.is_string() && v.get<std::string>() == "label") {
        src.kind = FeatureSource::Kind::kClauseLabel;
      } else if (v.is_object() && v.contains("arg")) {
        src.kind = FeatureSource::Kind::kArg;
        src.args = positions(v["arg"], field + ".arg");
      } else if (v.is_object() && v.contains("args")) {
        src.kind = FeatureSource::Kind::kArgs;
        src.args = positions(v["args"], field + ".args");
      } else if (v.is_object() && v.contains("const")) {
        src.kind = FeatureSource::Kind::kConstant;
        const auto &c = v["const"];
        if (c.is_string()) {
          src.constant.push_back(c.get<std::string>());
        } else if (c.is_array()) {
          src.constant_is_list = true;
          for (const auto &s : c) {
            if (!s.is_string()) fail(field + ".const", "expected strings");
            src.constant.push_back(s.get<std::string>());
          }
        } else {
          fail(field + ".const", "expected string or list of strings");
        }
      } else {
        fail(field, "expected \"label\", {\"arg\"}, {\"args\"} or {\"const\"}");
      }
      e.features[name] = std::move(src);
    }
  }
  return e;
}

OutputEntry FocusOutput() {
  OutputEntry e;
  e.predicate = "focus";
  e.arity = 2;
  e.type = types::kFocus;
  e.span_args = {1};
  e.features["patternId"].kind = FeatureSource::Kind::kClauseLabel;
  e.features["nodes"] = {FeatureSource::Kind::kArg, {1}, {}, false};
  return e;
}

OutputEntry AnswerTypeOutput() {
  OutputEntry e;
  e.predicate = "answerType";
  e.arity = 4;
  e.type = types::kAnswerType;
  e.span_args = {1};
  e.features["patternId"] = {FeatureSource::Kind::kArg, {2}, {}, false};
  e.features["types"] = {FeatureSource::Kind::kArg, {3}, {}, false};
  e.features["nodes"] = {FeatureSource::Kind::kArg, {1}, {}, false};
  return e;
}

OutputEntry RelationOutput(const std::string &predicate,
                           std::vector<std::string> roles) {
  OutputEntry e;
  e.predicate = predicate;
  e.arity = roles.size();
  e.type = types::kRelation;
  std::vector<std::size_t> all;
  for (std::size_t i = 0; i < e.arity; ++i) all.push_back(i);
  e.span_args = all;
  e.features["relation"] = {FeatureSource::Kind::kConstant, {}, {predicate},
                            false};
  e.features["ruleId"].kind = FeatureSource::Kind::kClauseLabel;
  e.features["arguments"] = {FeatureSource::Kind::kArgs, all, {}, false};
  e.features["roles"] = {FeatureSource::Kind::kConstant, {}, std::move(roles),
                         true};
  return e;
}

Query OutputQuery(const OutputEntry &entry) {
  Query q;
  std::vector<Term> args;
  for (std::size_t i = 0; i < entry.arity; ++i) {
    args.push_back(q.NewVar("A" + std::to_string(i + 1)));
  }
  q.goals.push_back(Goal::Call(entry.arity == 0
                                   ? Term::Atom(entry.predicate)
                                   : Term::Compound(entry.predicate, args)));
  return q;
}

OutputRecord RecordFromSolution(const OutputEntry &entry,
                                const Solution &solution) {
  OutputRecord r;
  r.clause_label = solution.clause_label;
  for (std::size_t i = 0; i < entry.arity; ++i) {
    const Term *t = solution.Get("A" + std::to_string(i + 1));
    r.args.push_back(t ? *t : Term::Var(0));
  }
  return r;
}

// --- Write-back -----------------------------------------------------------

namespace {

class Converter {
 public:
  Converter(const Cas &cas, const FactBase &fb, const OutputEntry &entry)
      : cas_(cas), fb_(fb), entry_(entry) {}

  AnnotationId Node(const Term &t) const {
    if (!t.is_atom()) Fail("expected a node id, got " + t.ToString());
    auto id = fb_.AnnotationOf(t.name());
    if (!id) throw Error(ErrorCode::kUnknownNode, t.name());
    return *id;
  }

  // A node or a list of nodes.
  std::vector<AnnotationId> Nodes(const Term &t) const {
    if (auto items = t.ListItems()) {
      std::vector<AnnotationId> out;
      for (const Term &i : *items) out.push_back(Node(i));
      return out;
    }
    return {Node(t)};
  }

  std::vector<std::string> Strings(const Term &t) const {
    if (auto items = t.ListItems()) {
      std::vector<std::string> out;
      for (const Term &i : *items) out.push_back(String(i));
      return out;
    }
    return {String(t)};
  }

  std::string String(const Term &t) const {
    if (t.is_atom()) return t.name();
    if (t.is_int()) return std::to_string(t.int_value());
    Fail("expected a string, got " + t.ToString());
  }

  std::vector<std::int64_t> Ints(const Term &t) const {
    std::vector<std::int64_t> out;
    auto items = t.ListItems();
    for (const Term &i : items ? *items : std::vector<Term>{t}) {
      if (!i.is_int()) Fail("expected an integer, got " + i.ToString());
      out.push_back(i.int_value());
    }
    return out;
  }

  FeatureValue Value(FeatureKind kind, const std::vector<Term> &terms) const {
    switch (kind) {
      case FeatureKind::kString:
        return String(One(terms));
      case FeatureKind::kInteger: {
        const Term &t = One(terms);
        if (!t.is_int()) Fail("expected an integer, got " + t.ToString());
        return t.int_value();
      }
      case FeatureKind::kRef:
        return AnnotationRef{Node(One(terms))};
      case FeatureKind::kStringList: {
        std::vector<std::string> out;
        for (const Term &t : terms) {
          auto s = Strings(t);
          out.insert(out.end(), s.begin(), s.end());
        }
        return out;
      }
      case FeatureKind::kIntegerList: {
        std::vector<std::int64_t> out;
        for (const Term &t : terms) {
          auto s = Ints(t);
          out.insert(out.end(), s.begin(), s.end());
        }
        return out;
      }
      case FeatureKind::kRefList: {
        std::vector<AnnotationRef> out;
        for (const Term &t : terms) {
          for (AnnotationId id : Nodes(t)) out.push_back({id});
        }
        return out;
      }
    }
    Fail("unsupported feature kind");
  }

 private:
  const Term &One(const std::vector<Term> &terms) const {
    if (terms.size() != 1) Fail("expected a single value");
    return terms.front();
  }

  [[noreturn]] void Fail(const std::string &msg) const {
    throw Error(ErrorCode::kSchemaViolation,
                entry_.predicate + "/" + std::to_string(entry_.arity) + ": " +
                    msg);
  }

  const Cas &cas_;
  const FactBase &fb_;
  const OutputEntry &entry_;
};

}  // namespace

std::vector<AnnotationId> BindingsToAnnotations(
    Cas &cas, const FactBase &facts, const OutputEntry &entry,
    const std::vector<OutputRecord> &records) {
  const TypeSystem &ts = cas.type_system();
  Converter conv(cas, facts, entry);
  std::vector<AnnotationId> out;
  std::vector<std::vector<Term>> seen;
  for (const OutputRecord &r : records) {
    if (r.args.size() != entry.arity) {
      throw Error(ErrorCode::kSchemaViolation,
                  "record arity mismatch for " + entry.predicate);
    }
    auto used = [&](std::size_t p) {
      if (!r.args[p].IsGround()) {
        throw Error(ErrorCode::kUngroundOutput,
                    entry.predicate + " argument " + std::to_string(p + 1) +
                        " is not ground: " + r.args[p].ToString());
      }
      return r.args[p];
    };
    std::int64_t begin = std::numeric_limits<std::int64_t>::max();
    std::int64_t end = std::numeric_limits<std::int64_t>::min();
    for (std::size_t p : entry.span_args) {
      for (AnnotationId id : conv.Nodes(used(p))) {
        const Annotation &n = cas.Get(id);
        begin = std::min(begin, n.begin);
        end = std::max(end, n.end);
      }
    }
    std::map<std::string, FeatureValue> features;
    for (const auto &[name, src] : entry.features) {
      FeatureKind kind = *ts.FeatureOf(entry.type, name);
      switch (src.kind) {
        case FeatureSource::Kind::kArg:
        case FeatureSource::Kind::kArgs: {
          std::vector<Term> terms;
          for (std::size_t p : src.args) terms.push_back(used(p));
          features[name] = conv.Value(kind, terms);
          break;
        }
        case FeatureSource::Kind::kClauseLabel:
          features[name] = r.clause_label;
          break;
        case FeatureSource::Kind::kConstant:
          if (src.constant_is_list) {
            features[name] = src.constant;
          } else {
            features[name] = src.constant.empty() ? std::string()
                                                  : src.constant.front();
          }
          break;
      }
    }
    if (std::find(seen.begin(), seen.end(), r.args) != seen.end()) continue;
    if (begin > end) {
      // A span source that resolved to an empty node list.
      throw Error(ErrorCode::kSchemaViolation,
                  entry.predicate + ": span source holds no nodes");
    }
    seen.push_back(r.args);
    out.push_back(cas.AddAnnotation(entry.type, begin, end, std::move(features)));
  }
  return out;
}

}  // namespace annolog
