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

// Annotation store: document text plus typed, span-bearing feature structures
// under a single-inheritance type system.
//
// Offsets count Unicode code points of the UTF-8 document text and spans are
// half-open. Annotations iterate in (begin, end, id) order.

#ifndef ANNOLOG_CAS_H_
#define ANNOLOG_CAS_H_

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

namespace annolog {

using AnnotationId = std::int64_t;

struct AnnotationRef {
  AnnotationId id = 0;
  friend bool operator==(const AnnotationRef &, const AnnotationRef &) =
      default;
};

enum class FeatureKind {
  kString,
  kInteger,
  kRef,
  kStringList,
  kIntegerList,
  kRefList,
};

using FeatureValue =
    std::variant<std::string, std::int64_t, AnnotationRef,
                 std::vector<std::string>, std::vector<std::int64_t>,
                 std::vector<AnnotationRef>>;

FeatureKind KindOf(const FeatureValue &value);
const char *FeatureKindName(FeatureKind kind);
// Parses "string", "integer", "ref", "string-list", "integer-list",
// "ref-list"; nullopt otherwise.
std::optional<FeatureKind> ParseFeatureKind(const std::string &name);

using FeatureDecls = std::vector<std::pair<std::string, FeatureKind>>;

class TypeSystem {
 public:
  // Adds a type under an existing supertype (empty for a root). Throws
  // SchemaError for duplicates or a feature name clashing with an inherited
  // one, UnknownType for a missing supertype.
  void AddType(const std::string &name, const std::string &supertype = {},
               const FeatureDecls &features = {});

  bool Has(const std::string &name) const;
  // True iff general is specific or one of its ancestors. Throws
  // UnknownType.
  bool Subsumes(const std::string &general, const std::string &specific) const;
  std::optional<std::string> SupertypeOf(const std::string &name) const;
  // The type followed by its ancestors up to the root.
  std::vector<std::string> Lineage(const std::string &name) const;
  // Declared kind of a feature on the type or any ancestor.
  std::optional<FeatureKind> FeatureOf(const std::string &type,
                                       const std::string &feature) const;
  std::vector<std::string> TypeNames() const;

  // Reads "type<TAB>supertype" lines (roots omit the second column). Lines
  // may appear in any order.
  static TypeSystem LoadTaxonomy(const std::string &path);
  static TypeSystem ParseTaxonomy(const std::string &text,
                                  const std::string &source = "taxonomy");

 private:
  struct TypeInfo {
    std::string supertype;
    std::map<std::string, FeatureKind> features;
  };
  void RequireKnown(const std::string &name) const;

  std::map<std::string, TypeInfo> types_;
};

// Built-in annotation types: uima.tcas.Annotation and the annolog.* types
// used for parse nodes, dependency edges, questions, focus, answer types and
// relations.
TypeSystem StandardTypeSystem();

namespace types {
inline constexpr char kAnnotation[] = "uima.tcas.Annotation";
inline constexpr char kParseNode[] = "annolog.ParseNode";
inline constexpr char kDependency[] = "annolog.Dependency";
inline constexpr char kQuestion[] = "annolog.Question";
inline constexpr char kFocus[] = "annolog.Focus";
inline constexpr char kAnswerType[] = "annolog.AnswerType";
inline constexpr char kRelation[] = "annolog.Relation";
}  // namespace types

struct Annotation {
  AnnotationId id = 0;
  std::string type;
  std::int64_t begin = 0;
  std::int64_t end = 0;
  std::map<std::string, FeatureValue> features;

  const FeatureValue *Feature(const std::string &name) const;
};

class Cas {
 public:
  // Throws SchemaError when text is not valid UTF-8.
  Cas(std::shared_ptr<const TypeSystem> type_system, std::string text,
      std::string view = "_InitialView");

  const TypeSystem &type_system() const { return *type_system_; }
  std::shared_ptr<const TypeSystem> shared_type_system() const {
    return type_system_;
  }
  const std::string &text() const { return text_; }
  const std::string &view() const { return view_; }
  // Length in code points.
  std::int64_t length() const {
    return static_cast<std::int64_t>(char_offsets_.size()) - 1;
  }

  const std::string &document_id() const { return document_id_; }
  void set_document_id(std::string id) { document_id_ = std::move(id); }

  // Throws UnknownType, InvalidSpan or UnknownFeature.
  AnnotationId AddAnnotation(const std::string &type, std::int64_t begin,
                             std::int64_t end,
                             std::map<std::string, FeatureValue> features = {});

  // Throws UnknownNode for an id that was never issued.
  const Annotation &Get(AnnotationId id) const;
  bool Contains(AnnotationId id) const;

  // Annotations whose type is subsumed by type, in span order. Throws
  // UnknownType.
  std::vector<const Annotation *> AnnotationsOfType(
      const std::string &type) const;
  // Every annotation in span order.
  std::vector<const Annotation *> All() const;
  std::size_t size() const { return annotations_.size(); }

  std::string CoveredText(const Annotation &a) const;
  std::string Substring(std::int64_t begin, std::int64_t end) const;

 private:
  std::shared_ptr<const TypeSystem> type_system_;
  std::string text_;
  std::string view_;
  std::string document_id_;
  std::vector<std::size_t> char_offsets_;   // byte offset per code point
  std::vector<Annotation> annotations_;     // index = id - 1
  std::vector<AnnotationId> order_;         // sorted by (begin, end, id)
};

}  // namespace annolog

#endif  // ANNOLOG_CAS_H_
