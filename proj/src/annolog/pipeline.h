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

// Annotator workflows over parse documents.
//
// Configuration file (paths relative to the file):
//
//   {"lexicon": "lexicon",
//    "annotators": [
//      {"name": "relations", "kind": "relations",
//       "rules": ["rules/relations.pl"],
//       "outputs": [{"predicate": "castOf", "arity": 2,
//                    "type": "annolog.Relation", "span": [0, 1],
//                    "roles": ["person", "composition"]}],
//       "solver": {"max_resolution_steps": 100000, "max_depth": 1000},
//       "inputs": [{"type": "annolog.Relation", "predicate": "rel"}]},
//      {"name": "qparse", "kind": "qparse",
//       "rules": ["rules/qparse_focus.pl", "rules/qparse_atype.pl"]}]}
//
// Each annotator sees a fresh fact base built from the document plus the
// annotations of earlier annotators named in its inputs.

#ifndef ANNOLOG_PIPELINE_H_
#define ANNOLOG_PIPELINE_H_

#include <memory>
#include <string>
#include <vector>

#include "annolog/bridge.h"
#include "annolog/document.h"
#include "annolog/error.h"
#include "annolog/lexicon.h"
#include "annolog/solver.h"

namespace annolog {

struct AnnotatorConfig {
  std::string name;
  std::string kind;  // "qparse" or "relations"
  std::vector<std::string> rules;
  OutputSpec outputs;
  SolveConfig solver;
  std::vector<InputSpec> inputs;
};

struct PipelineConfig {
  std::string lexicon_dir;  // empty: no lexical predicates
  std::vector<AnnotatorConfig> annotators;

  // Throws ConfigError (or IoError for the file itself).
  static PipelineConfig FromJson(const Json &j, const std::string &base_dir);
  static PipelineConfig Load(const std::string &path);
};

struct AnnotatorReport {
  std::string name;
  std::size_t added = 0;
  std::vector<std::string> diagnostics;
};

struct DocumentReport {
  std::string id;
  std::string input;
  std::string output;  // empty when nothing was written
  bool ok = true;
  std::vector<AnnotatorReport> annotators;
  std::string error_annotator;
  ErrorCode error = ErrorCode::kIoError;  // meaningful when !ok
  std::string error_code;
  std::string error_message;
  int error_class = 0;

  Json ToJson() const;
};

struct RunReport {
  std::vector<DocumentReport> documents;  // sorted by document id

  std::size_t failed() const;
  // Exit class of the first failed document, 0 when all succeeded.
  int exit_class() const;
  Json ToJson() const;
};

class Pipeline {
 public:
  // Loads the lexicon and every rule file; any failure surfaces here,
  // before a document is processed.
  explicit Pipeline(PipelineConfig config);
  static Pipeline Load(const std::string &config_path);

  // Runs every annotator in order. Each annotator works on a copy of the
  // Cas, committed only on success; the first failure stops the document.
  DocumentReport Process(Document &doc) const;

  // Processes one file or every *.json file of a directory (sorted by name),
  // writing <stem>.json files into output_dir.
  RunReport Run(const std::string &input, const std::string &output_dir) const;
  RunReport RunFiles(const std::vector<std::string> &inputs,
                     const std::string &output_dir) const;

  Document LoadDocumentFile(const std::string &path) const;
  Document ParseDocumentText(const std::string &json_text) const;

  const PipelineConfig &config() const { return config_; }
  std::shared_ptr<const TypeSystem> type_system() const { return types_; }
  const ExternalRegistry &registry() const { return registry_; }
  std::shared_ptr<const Lexicon> lexicon() const { return lexicon_; }

 private:
  struct Stage {
    AnnotatorConfig config;
    KnowledgeBase rules;
  };

  PipelineConfig config_;
  std::shared_ptr<const TypeSystem> types_;
  std::shared_ptr<const Lexicon> lexicon_;
  ExternalRegistry registry_;
  std::vector<Stage> stages_;
};

// Lists the inputs a Run would process.
std::vector<std::string> CollectInputs(const std::string &input);

}  // namespace annolog

#endif  // ANNOLOG_PIPELINE_H_
