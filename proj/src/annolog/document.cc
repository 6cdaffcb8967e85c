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

#include "annolog/document.h"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

#include "annolog/error.h"

namespace annolog {

namespace {

const std::set<std::string> kEdgeLabels = {"subj",     "pred",  "modifier",
                                           "objprep",  "whadv", "child"};

[[noreturn]] void SchemaFail(const std::string &path, const std::string &msg) {
  throw Error(ErrorCode::kSchemaError, path + ": " + msg);
}

const Json &Field(const Json &obj, const std::string &path,
                  const std::string &key) {
  auto it = obj.find(key);
  if (it == obj.end()) SchemaFail(path + "." + key, "missing required field");
  return *it;
}

std::string GetString(const Json &obj, const std::string &path,
                      const std::string &key) {
  const Json &v = Field(obj, path, key);
  if (!v.is_string()) SchemaFail(path + "." + key, "expected string");
  return v.get<std::string>();
}

std::int64_t GetInt(const Json &obj, const std::string &path,
                    const std::string &key) {
  const Json &v = Field(obj, path, key);
  if (!v.is_number_integer()) SchemaFail(path + "." + key, "expected integer");
  return v.get<std::int64_t>();
}

const Json &GetArray(const Json &obj, const std::string &path,
                     const std::string &key) {
  const Json &v = Field(obj, path, key);
  if (!v.is_array()) SchemaFail(path + "." + key, "expected array");
  return v;
}

struct NodeIn {
  std::int64_t id;
  std::int64_t begin;
  std::int64_t end;
  std::string lemma;
  std::string tag;
  std::vector<std::string> semantic_types;
};

}  // namespace

bool IsInputAnnotationType(const std::string &type) {
  return type == types::kParseNode || type == types::kDependency ||
         type == types::kQuestion;
}

Document DocumentFromJson(const Json &input,
                          std::shared_ptr<const TypeSystem> type_system) {
  if (!input.is_object()) SchemaFail("$", "expected object");
  Json source = input;
  source.erase("annotations");

  std::string id = GetString(source, "$", "id");
  std::string text = GetString(source, "$", "text");
  std::int64_t root = GetInt(source, "$", "root");
  const Json &nodes = GetArray(source, "$", "nodes");
  const Json &edges = GetArray(source, "$", "edges");

  Cas cas(std::move(type_system), text);
  cas.set_document_id(id);

  std::vector<NodeIn> parsed;
  std::set<std::int64_t> seen;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    std::string path = "$.nodes[" + std::to_string(i) + "]";
    const Json &n = nodes[i];
    if (!n.is_object()) SchemaFail(path, "expected object");
    NodeIn node;
    node.id = GetInt(n, path, "id");
    node.begin = GetInt(n, path, "begin");
    node.end = GetInt(n, path, "end");
    node.lemma = GetString(n, path, "lemma");
    node.tag = GetString(n, path, "pennTag");
    if (n.contains("semanticTypes")) {
      const Json &st = GetArray(n, path, "semanticTypes");
      for (std::size_t k = 0; k < st.size(); ++k) {
        if (!st[k].is_string()) {
          SchemaFail(path + ".semanticTypes[" + std::to_string(k) + "]",
                     "expected string");
        }
        node.semantic_types.push_back(st[k].get<std::string>());
      }
    }
    if (!seen.insert(node.id).second) {
      SchemaFail(path + ".id", "duplicate node id " + std::to_string(node.id));
    }
    if (node.begin < 0 || node.begin > node.end || node.end > cas.length()) {
      SchemaFail(path, "span [" + std::to_string(node.begin) + "," +
                           std::to_string(node.end) + ") outside text of " +
                           std::to_string(cas.length()) + " characters");
    }
    parsed.push_back(std::move(node));
  }

  // Parse nodes are added in span order so annotation ids follow it too.
  std::stable_sort(parsed.begin(), parsed.end(),
                   [](const NodeIn &a, const NodeIn &b) {
                     return std::tie(a.begin, a.end, a.id) <
                            std::tie(b.begin, b.end, b.id);
                   });
  std::map<std::int64_t, AnnotationId> by_input_id;
  for (const NodeIn &n : parsed) {
    by_input_id[n.id] = cas.AddAnnotation(
        types::kParseNode, n.begin, n.end,
        {{"nodeId", n.id},
         {"lemma", n.lemma},
         {"pennTag", n.tag},
         {"semanticTypes", n.semantic_types}});
  }

  for (std::size_t i = 0; i < edges.size(); ++i) {
    std::string path = "$.edges[" + std::to_string(i) + "]";
    const Json &e = edges[i];
    if (!e.is_object()) SchemaFail(path, "expected object");
    std::string label = GetString(e, path, "type");
    if (!kEdgeLabels.count(label)) {
      SchemaFail(path + ".type", "unknown edge type '" + label + "'");
    }
    std::int64_t from = GetInt(e, path, "from");
    std::int64_t to = GetInt(e, path, "to");
    auto gov = by_input_id.find(from);
    if (gov == by_input_id.end()) {
      SchemaFail(path + ".from", "unknown node " + std::to_string(from));
    }
    auto dep = by_input_id.find(to);
    if (dep == by_input_id.end()) {
      SchemaFail(path + ".to", "unknown node " + std::to_string(to));
    }
    const Annotation &g = cas.Get(gov->second);
    const Annotation &d = cas.Get(dep->second);
    cas.AddAnnotation(types::kDependency, std::min(g.begin, d.begin),
                      std::max(g.end, d.end),
                      {{"label", label},
                       {"governor", AnnotationRef{gov->second}},
                       {"dependent", AnnotationRef{dep->second}}});
  }

  std::map<std::string, FeatureValue> question;
  if (!parsed.empty()) {
    auto r = by_input_id.find(root);
    if (r == by_input_id.end()) {
      SchemaFail("$.root", "unknown node " + std::to_string(root));
    }
    question.emplace("root", AnnotationRef{r->second});
  }
  cas.AddAnnotation(types::kQuestion, 0, cas.length(), std::move(question));

  return Document{std::move(source), std::move(cas)};
}

Document ParseDocument(const std::string &json_text,
                       std::shared_ptr<const TypeSystem> type_system) {
  Json j;
  try {
    j = Json::parse(json_text);
  } catch (const nlohmann::json::parse_error &e) {
    throw Error(ErrorCode::kSchemaError, std::string("$: ") + e.what());
  }
  return DocumentFromJson(j, std::move(type_system));
}

Document LoadDocument(const std::string &path,
                      std::shared_ptr<const TypeSystem> type_system) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot read document " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return ParseDocument(buffer.str(), std::move(type_system));
  } catch (const Error &e) {
    if (e.code() == ErrorCode::kIoError) throw;
    throw Error(e.code(), path + ": " + e.message());
  }
}

namespace {

Json RefToJson(const Cas &cas, const AnnotationRef &ref) {
  const Annotation &a = cas.Get(ref.id);
  if (a.type == types::kParseNode) {
    return std::get<std::int64_t>(*a.Feature("nodeId"));
  }
  return ref.id;
}

Json FeatureToJson(const Cas &cas, const FeatureValue &value) {
  return std::visit(
      [&](const auto &v) -> Json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, AnnotationRef>) {
          return RefToJson(cas, v);
        } else if constexpr (std::is_same_v<T, std::vector<AnnotationRef>>) {
          Json arr = Json::array();
          for (const AnnotationRef &r : v) arr.push_back(RefToJson(cas, r));
          return arr;
        } else {
          return Json(v);
        }
      },
      value);
}

}  // namespace

Json DerivedAnnotationsToJson(const Cas &cas) {
  Json out = Json::array();
  for (const Annotation *a : cas.All()) {
    if (IsInputAnnotationType(a->type)) continue;
    Json features = Json::object();
    for (const auto &[name, value] : a->features) {
      features[name] = FeatureToJson(cas, value);
    }
    Json entry;
    entry["type"] = a->type;
    entry["begin"] = a->begin;
    entry["end"] = a->end;
    entry["features"] = std::move(features);
    out.push_back(std::move(entry));
  }
  return out;
}

Json DocumentToJson(const Document &doc) {
  Json out = doc.source;
  out["annotations"] = DerivedAnnotationsToJson(doc.cas);
  return out;
}

std::string SerializeDocument(const Document &doc) {
  return DocumentToJson(doc).dump(2) + "\n";
}

}  // namespace annolog
