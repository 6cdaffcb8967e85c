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

#include "annolog/annolog.h"

#include <cstring>
#include <memory>
#include <string>
#include <vector>

#include "annolog/bridge.h"
#include "annolog/document.h"
#include "annolog/error.h"
#include "annolog/eval.h"
#include "annolog/lexicon.h"
#include "annolog/parser.h"
#include "annolog/pipeline.h"
#include "annolog/solver.h"

struct annolog_lexicon {
  std::shared_ptr<const annolog::Lexicon> lexicon;
};

struct annolog_session {
  std::shared_ptr<const annolog::Lexicon> lexicon;
  std::shared_ptr<const annolog::TypeSystem> types;
  annolog::KnowledgeBase kb;
  annolog::ExternalRegistry registry;
  annolog::SolveConfig config;
};

struct annolog_solutions {
  std::vector<std::string> lines;
};

struct annolog_pipeline {
  std::unique_ptr<annolog::Pipeline> pipeline;
};

struct annolog_report {
  std::string table;
  std::string json;
};

namespace {

thread_local std::string last_error;
thread_local std::string last_error_code;

void ClearError() {
  last_error.clear();
  last_error_code.clear();
}

annolog_status Fail(annolog_status status, const std::string &code,
                    const std::string &message) {
  last_error_code = code;
  last_error = message;
  return status;
}

// Runs fn, translating exceptions into a status and the thread's last error.
template <typename Fn>
annolog_status Guard(Fn &&fn) {
  ClearError();
  try {
    fn();
    return ANNOLOG_OK;
  } catch (const annolog::Error &e) {
    return Fail(static_cast<annolog_status>(e.error_class()),
                std::string(annolog::ErrorCodeName(e.code())), e.what());
  } catch (const std::bad_alloc &) {
    return Fail(ANNOLOG_ERROR_RUNTIME, "OutOfMemory", "out of memory");
  } catch (const std::exception &e) {
    return Fail(ANNOLOG_ERROR_RUNTIME, "InternalError", e.what());
  }
}

annolog_status NullArgument(const char *name) {
  ClearError();
  return Fail(ANNOLOG_ERROR_USAGE, "InvalidArgument",
              std::string(name) + " must not be null");
}

char *CopyString(const std::string &s) {
  char *out = static_cast<char *>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

}  // namespace

extern "C" {

const char *annolog_version(void) { return "1.0.0"; }

const char *annolog_last_error(void) { return last_error.c_str(); }

const char *annolog_last_error_code(void) { return last_error_code.c_str(); }

void annolog_string_free(char *s) { std::free(s); }

annolog_status annolog_lexicon_load(const char *dir, annolog_lexicon **out) {
  if (dir == nullptr) return NullArgument("dir");
  if (out == nullptr) return NullArgument("out");
  *out = nullptr;
  return Guard([&] {
    auto lex = std::make_shared<const annolog::Lexicon>(
        annolog::Lexicon::LoadDirectory(dir));
    *out = new annolog_lexicon{std::move(lex)};
  });
}

void annolog_lexicon_free(annolog_lexicon *lexicon) { delete lexicon; }

annolog_status annolog_session_create(const annolog_lexicon *lexicon,
                                      annolog_session **out) {
  if (out == nullptr) return NullArgument("out");
  *out = nullptr;
  return Guard([&] {
    auto s = std::make_unique<annolog_session>();
    s->types = std::make_shared<const annolog::TypeSystem>(
        annolog::StandardTypeSystem());
    if (lexicon != nullptr) {
      s->lexicon = lexicon->lexicon;
      annolog::RegisterLexiconPredicates(s->registry, s->lexicon);
    }
    *out = s.release();
  });
}

annolog_status annolog_session_load_document(annolog_session *session,
                                             const char *path) {
  if (session == nullptr) return NullArgument("session");
  if (path == nullptr) return NullArgument("path");
  return Guard([&] {
    annolog::Document doc = annolog::LoadDocument(path, session->types);
    annolog::FactBase facts = annolog::CasToFacts(doc.cas);
    annolog::DeclareSchema(session->kb);
    session->kb.Assert(facts.facts, annolog::Provenance::kDynamic);
  });
}

annolog_status annolog_session_consult(annolog_session *session,
                                       const char *path) {
  if (session == nullptr) return NullArgument("session");
  if (path == nullptr) return NullArgument("path");
  return Guard([&] { session->kb.Assert(annolog::ParseProgramFile(path)); });
}

annolog_status annolog_session_consult_text(annolog_session *session,
                                            const char *text) {
  if (session == nullptr) return NullArgument("session");
  if (text == nullptr) return NullArgument("text");
  return Guard([&] { session->kb.Assert(annolog::ParseProgram(text)); });
}

annolog_status annolog_session_set_limits(annolog_session *session,
                                          uint64_t max_steps,
                                          uint64_t max_depth) {
  if (session == nullptr) return NullArgument("session");
  ClearError();
  if (max_steps == 0 || max_depth == 0) {
    return Fail(ANNOLOG_ERROR_USAGE, "InvalidArgument",
                "limits must be positive");
  }
  session->config.max_resolution_steps = max_steps;
  session->config.max_depth = max_depth;
  return ANNOLOG_OK;
}

annolog_status annolog_session_query(annolog_session *session,
                                     const char *goal,
                                     annolog_solutions **out) {
  if (session == nullptr) return NullArgument("session");
  if (goal == nullptr) return NullArgument("goal");
  if (out == nullptr) return NullArgument("out");
  *out = nullptr;
  return Guard([&] {
    auto result = std::make_unique<annolog_solutions>();
    for (const annolog::Solution &s :
         annolog::SolveAll(session->kb, session->registry,
                           annolog::ParseQuery(goal), session->config)) {
      result->lines.push_back(s.ToString());
    }
    *out = result.release();
  });
}

void annolog_session_free(annolog_session *session) { delete session; }

size_t annolog_solutions_count(const annolog_solutions *s) {
  return s == nullptr ? 0 : s->lines.size();
}

const char *annolog_solutions_line(const annolog_solutions *s, size_t index) {
  if (s == nullptr || index >= s->lines.size()) return nullptr;
  return s->lines[index].c_str();
}

void annolog_solutions_free(annolog_solutions *s) { delete s; }

annolog_status annolog_pipeline_load(const char *config_path,
                                     annolog_pipeline **out) {
  if (config_path == nullptr) return NullArgument("config_path");
  if (out == nullptr) return NullArgument("out");
  *out = nullptr;
  return Guard([&] {
    auto p = std::make_unique<annolog::Pipeline>(
        annolog::Pipeline::Load(config_path));
    *out = new annolog_pipeline{std::move(p)};
  });
}

annolog_status annolog_pipeline_run(const annolog_pipeline *pipeline,
                                    const char *input, const char *output_dir,
                                    char **report_json, int *exit_class) {
  if (pipeline == nullptr) return NullArgument("pipeline");
  if (input == nullptr) return NullArgument("input");
  if (output_dir == nullptr) return NullArgument("output_dir");
  if (report_json != nullptr) *report_json = nullptr;
  return Guard([&] {
    annolog::RunReport report = pipeline->pipeline->Run(input, output_dir);
    if (exit_class != nullptr) *exit_class = report.exit_class();
    if (report_json != nullptr) {
      *report_json = CopyString(report.ToJson().dump(2) + "\n");
    }
  });
}

annolog_status annolog_annotate_json(const annolog_pipeline *pipeline,
                                     const char *document_json,
                                     char **annotated_json) {
  if (pipeline == nullptr) return NullArgument("pipeline");
  if (document_json == nullptr) return NullArgument("document_json");
  if (annotated_json == nullptr) return NullArgument("annotated_json");
  *annotated_json = nullptr;
  return Guard([&] {
    annolog::Document doc =
        pipeline->pipeline->ParseDocumentText(document_json);
    annolog::DocumentReport r = pipeline->pipeline->Process(doc);
    if (!r.ok) {
      throw annolog::Error(r.error,
                           r.error_annotator + ": " + r.error_message);
    }
    *annotated_json = CopyString(annolog::SerializeDocument(doc));
  });
}

void annolog_pipeline_free(annolog_pipeline *pipeline) { delete pipeline; }

annolog_status annolog_evaluate(const char *predictions_path,
                                const char *gold_path,
                                const char *taxonomy_path,
                                annolog_report **out) {
  if (predictions_path == nullptr) return NullArgument("predictions_path");
  if (gold_path == nullptr) return NullArgument("gold_path");
  if (taxonomy_path == nullptr) return NullArgument("taxonomy_path");
  if (out == nullptr) return NullArgument("out");
  *out = nullptr;
  return Guard([&] {
    annolog::EvalReport r =
        annolog::EvaluateFiles(predictions_path, gold_path, taxonomy_path);
    *out = new annolog_report{r.Table(), r.ToJson().dump(2) + "\n"};
  });
}

const char *annolog_report_table(const annolog_report *report) {
  return report == nullptr ? nullptr : report->table.c_str();
}

const char *annolog_report_json(const annolog_report *report) {
  return report == nullptr ? nullptr : report->json.c_str();
}

void annolog_report_free(annolog_report *report) { delete report; }

}  // extern "C"
