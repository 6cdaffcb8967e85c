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

#include "annolog/cas.h"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <tuple>

#include "annolog/error.h"

namespace annolog {

FeatureKind KindOf(const FeatureValue &value) {
  return static_cast<FeatureKind>(value.index());
}

const char *FeatureKindName(FeatureKind kind) {
  switch (kind) {
    case FeatureKind::kString: return "string";
    case FeatureKind::kInteger: return "integer";
    case FeatureKind::kRef: return "ref";
    case FeatureKind::kStringList: return "string-list";
    case FeatureKind::kIntegerList: return "integer-list";
    case FeatureKind::kRefList: return "ref-list";
  }
  return "?";
}

std::optional<FeatureKind> ParseFeatureKind(const std::string &name) {
  for (FeatureKind k :
       {FeatureKind::kString, FeatureKind::kInteger, FeatureKind::kRef,
        FeatureKind::kStringList, FeatureKind::kIntegerList,
        FeatureKind::kRefList}) {
    if (name == FeatureKindName(k)) return k;
  }
  return std::nullopt;
}

// --- TypeSystem -----------------------------------------------------------

void TypeSystem::RequireKnown(const std::string &name) const {
  if (!Has(name)) throw Error(ErrorCode::kUnknownType, name);
}

void TypeSystem::AddType(const std::string &name, const std::string &supertype,
                         const FeatureDecls &features) {
  if (name.empty()) throw Error(ErrorCode::kSchemaError, "empty type name");
  if (Has(name)) {
    throw Error(ErrorCode::kSchemaError, "duplicate type " + name);
  }
  if (!supertype.empty()) RequireKnown(supertype);
  TypeInfo info;
  info.supertype = supertype;
  for (const auto &[feature, kind] : features) {
    bool clash = info.features.count(feature) > 0 ||
                 (!supertype.empty() && FeatureOf(supertype, feature));
    if (clash) {
      throw Error(ErrorCode::kSchemaError,
                  "feature " + feature + " declared twice on " + name);
    }
    info.features.emplace(feature, kind);
  }
  types_.emplace(name, std::move(info));
}

bool TypeSystem::Has(const std::string &name) const {
  return types_.count(name) > 0;
}

bool TypeSystem::Subsumes(const std::string &general,
                          const std::string &specific) const {
  RequireKnown(general);
  RequireKnown(specific);
  const std::string *cur = &specific;
  while (!cur->empty()) {
    if (*cur == general) return true;
    cur = &types_.at(*cur).supertype;
  }
  return false;
}

std::optional<std::string> TypeSystem::SupertypeOf(
    const std::string &name) const {
  RequireKnown(name);
  const std::string &super = types_.at(name).supertype;
  if (super.empty()) return std::nullopt;
  return super;
}

std::vector<std::string> TypeSystem::Lineage(const std::string &name) const {
  RequireKnown(name);
  std::vector<std::string> out;
  for (std::string cur = name; !cur.empty(); cur = types_.at(cur).supertype) {
    out.push_back(cur);
  }
  return out;
}

std::optional<FeatureKind> TypeSystem::FeatureOf(
    const std::string &type, const std::string &feature) const {
  RequireKnown(type);
  for (std::string cur = type; !cur.empty(); cur = types_.at(cur).supertype) {
    const TypeInfo &info = types_.at(cur);
    auto it = info.features.find(feature);
    if (it != info.features.end()) return it->second;
  }
  return std::nullopt;
}

std::vector<std::string> TypeSystem::TypeNames() const {
  std::vector<std::string> names;
  for (const auto &[name, info] : types_) names.push_back(name);
  return names;
}

TypeSystem TypeSystem::ParseTaxonomy(const std::string &text,
                                     const std::string &source) {
  // Collect edges first so subtypes may precede their supertypes.
  std::vector<std::pair<std::string, std::string>> edges;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::size_t tab = line.find('\t');
    std::string type = line.substr(0, tab);
    std::string super = tab == std::string::npos ? "" : line.substr(tab + 1);
    if (type.empty() || super.find('\t') != std::string::npos) {
      throw Error(ErrorCode::kSchemaError,
                  source + ":" + std::to_string(lineno) +
                      ": expected type<TAB>supertype");
    }
    edges.emplace_back(type, super);
  }

  TypeSystem ts;
  std::vector<bool> added(edges.size(), false);
  std::size_t remaining = edges.size();
  while (remaining > 0) {
    std::size_t progress = 0;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (added[i]) continue;
      const auto &[type, super] = edges[i];
      if (!super.empty() && !ts.Has(super)) continue;
      ts.AddType(type, super);
      added[i] = true;
      ++progress;
    }
    if (progress == 0) {
      std::string stuck;
      for (std::size_t i = 0; i < edges.size(); ++i) {
        if (!added[i]) stuck += " " + edges[i].first;
      }
      throw Error(ErrorCode::kSchemaError,
                  source + ": cycle or missing supertype for:" + stuck);
    }
    remaining -= progress;
  }
  return ts;
}

TypeSystem TypeSystem::LoadTaxonomy(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot read taxonomy " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ParseTaxonomy(buffer.str(), path);
}

TypeSystem StandardTypeSystem() {
  using K = FeatureKind;
  TypeSystem ts;
  ts.AddType(types::kAnnotation);
  ts.AddType(types::kParseNode, types::kAnnotation,
             {{"nodeId", K::kInteger},
              {"lemma", K::kString},
              {"pennTag", K::kString},
              {"semanticTypes", K::kStringList}});
  ts.AddType(types::kDependency, types::kAnnotation,
             {{"label", K::kString},
              {"governor", K::kRef},
              {"dependent", K::kRef}});
  ts.AddType(types::kQuestion, types::kAnnotation, {{"root", K::kRef}});
  ts.AddType(types::kFocus, types::kAnnotation,
             {{"patternId", K::kString}, {"nodes", K::kRefList}});
  ts.AddType(types::kAnswerType, types::kAnnotation,
             {{"patternId", K::kString},
              {"types", K::kStringList},
              {"nodes", K::kRefList}});
  ts.AddType(types::kRelation, types::kAnnotation,
             {{"relation", K::kString},
              {"ruleId", K::kString},
              {"arguments", K::kRefList},
              {"roles", K::kStringList}});
  return ts;
}

// --- Annotations ----------------------------------------------------------

const FeatureValue *Annotation::Feature(const std::string &name) const {
  auto it = features.find(name);
  return it == features.end() ? nullptr : &it->second;
}

namespace {

// Byte offset of every code point plus the end offset. Throws SchemaError on
// malformed UTF-8.
std::vector<std::size_t> CodePointOffsets(const std::string &text) {
  std::vector<std::size_t> offsets;
  std::size_t i = 0;
  while (i < text.size()) {
    offsets.push_back(i);
    unsigned char c = static_cast<unsigned char>(text[i]);
    std::size_t len = c < 0x80           ? 1
                      : (c >> 5) == 0x6  ? 2
                      : (c >> 4) == 0xE  ? 3
                      : (c >> 3) == 0x1E ? 4
                                         : 0;
    if (len == 0 || i + len > text.size()) {
      throw Error(ErrorCode::kSchemaError,
                  "invalid UTF-8 at byte " + std::to_string(i));
    }
    for (std::size_t k = 1; k < len; ++k) {
      if ((static_cast<unsigned char>(text[i + k]) >> 6) != 0x2) {
        throw Error(ErrorCode::kSchemaError,
                    "invalid UTF-8 at byte " + std::to_string(i + k));
      }
    }
    i += len;
  }
  offsets.push_back(text.size());
  return offsets;
}

}  // namespace

Cas::Cas(std::shared_ptr<const TypeSystem> type_system, std::string text,
         std::string view)
    : type_system_(std::move(type_system)),
      text_(std::move(text)),
      view_(std::move(view)),
      char_offsets_(CodePointOffsets(text_)) {}

AnnotationId Cas::AddAnnotation(const std::string &type, std::int64_t begin,
                                std::int64_t end,
                                std::map<std::string, FeatureValue> features) {
  if (!type_system_->Has(type)) throw Error(ErrorCode::kUnknownType, type);
  if (begin < 0 || begin > end || end > length()) {
    throw Error(ErrorCode::kInvalidSpan,
                "[" + std::to_string(begin) + "," + std::to_string(end) +
                    ") in text of length " + std::to_string(length()));
  }
  for (const auto &[name, value] : features) {
    std::optional<FeatureKind> declared = type_system_->FeatureOf(type, name);
    if (!declared) {
      throw Error(ErrorCode::kUnknownFeature, type + "." + name);
    }
    if (*declared != KindOf(value)) {
      throw Error(ErrorCode::kUnknownFeature,
                  type + "." + name + " expects " +
                      FeatureKindName(*declared) + ", got " +
                      FeatureKindName(KindOf(value)));
    }
    auto check_ref = [&](const AnnotationRef &r) {
      if (!Contains(r.id)) {
        throw Error(ErrorCode::kUnknownNode,
                    type + "." + name + " references annotation " +
                        std::to_string(r.id));
      }
    };
    if (auto *r = std::get_if<AnnotationRef>(&value)) check_ref(*r);
    if (auto *rs = std::get_if<std::vector<AnnotationRef>>(&value)) {
      for (const AnnotationRef &r : *rs) check_ref(r);
    }
  }

  Annotation a;
  a.id = static_cast<AnnotationId>(annotations_.size()) + 1;
  a.type = type;
  a.begin = begin;
  a.end = end;
  a.features = std::move(features);
  annotations_.push_back(std::move(a));

  const Annotation &added = annotations_.back();
  auto key = [this](AnnotationId id) {
    const Annotation &x = annotations_[id - 1];
    return std::make_tuple(x.begin, x.end, x.id);
  };
  auto pos = std::upper_bound(
      order_.begin(), order_.end(), added.id,
      [&](AnnotationId a, AnnotationId b) { return key(a) < key(b); });
  order_.insert(pos, added.id);
  return added.id;
}

bool Cas::Contains(AnnotationId id) const {
  return id >= 1 && id <= static_cast<AnnotationId>(annotations_.size());
}

const Annotation &Cas::Get(AnnotationId id) const {
  if (!Contains(id)) {
    throw Error(ErrorCode::kUnknownNode, "annotation " + std::to_string(id));
  }
  return annotations_[id - 1];
}

std::vector<const Annotation *> Cas::AnnotationsOfType(
    const std::string &type) const {
  if (!type_system_->Has(type)) throw Error(ErrorCode::kUnknownType, type);
  std::vector<const Annotation *> out;
  for (AnnotationId id : order_) {
    const Annotation &a = annotations_[id - 1];
    if (type_system_->Subsumes(type, a.type)) out.push_back(&a);
  }
  return out;
}

std::vector<const Annotation *> Cas::All() const {
  std::vector<const Annotation *> out;
  out.reserve(order_.size());
  for (AnnotationId id : order_) out.push_back(&annotations_[id - 1]);
  return out;
}

std::string Cas::Substring(std::int64_t begin, std::int64_t end) const {
  if (begin < 0 || begin > end || end > length()) {
    throw Error(ErrorCode::kInvalidSpan,
                "[" + std::to_string(begin) + "," + std::to_string(end) + ")");
  }
  std::size_t from = char_offsets_[begin];
  std::size_t to = char_offsets_[end];
  return text_.substr(from, to - from);
}

std::string Cas::CoveredText(const Annotation &a) const {
  return Substring(a.begin, a.end);
}

}  // namespace annolog
