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

// Serialized parse documents.
//
// Input, one JSON object per file:
//
//   {"id": str, "text": str, "root": int,
//    "nodes": [{"id": int, "begin": int, "end": int, "lemma": str,
//               "pennTag": str, "semanticTypes": [str]}],
//    "edges": [{"type": "subj"|"pred"|"modifier"|"objprep"|"whadv"|"child",
//               "from": int, "to": int}]}
//
// Output is the input object plus
//
//   "annotations": [{"type": str, "begin": int, "end": int,
//                    "features": {...}}]
//
// listing every annotation added by the pipeline, in span order. Features
// that reference parse nodes are written as the node's input id.

#ifndef ANNOLOG_DOCUMENT_H_
#define ANNOLOG_DOCUMENT_H_

#include <memory>
#include <string>

#include "annolog/cas.h"
#include "json.hpp"

namespace annolog {

using Json = nlohmann::ordered_json;

struct Document {
  Json source;  // input object without "annotations"
  Cas cas;
};

// Throws SchemaError naming the offending field path (e.g. "$.root"),
// IoError when the file cannot be read.
Document LoadDocument(const std::string &path,
                      std::shared_ptr<const TypeSystem> type_system);
Document ParseDocument(const std::string &json_text,
                       std::shared_ptr<const TypeSystem> type_system);
Document DocumentFromJson(const Json &source,
                          std::shared_ptr<const TypeSystem> type_system);

// Annotations that did not come from the input: everything except parse
// nodes, dependency edges and the question annotation.
Json DerivedAnnotationsToJson(const Cas &cas);
Json DocumentToJson(const Document &doc);
// Two-space indented JSON with a trailing newline.
std::string SerializeDocument(const Document &doc);

bool IsInputAnnotationType(const std::string &type);

}  // namespace annolog

#endif  // ANNOLOG_DOCUMENT_H_
