/* Copyright 2026 The Annolog Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to the annolog library.
 *
 * Every fallible call returns an annolog_status. On failure the message and
 * the error name of the calling thread's last error are available through
 * annolog_last_error() and annolog_last_error_code() until the next call on
 * that thread. Handles are opaque and freed by their matching _free call;
 * strings returned through char** out-parameters are freed with
 * annolog_string_free(). Const char* results are owned by their handle.
 */

#ifndef ANNOLOG_ANNOLOG_H_
#define ANNOLOG_ANNOLOG_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define ANNOLOG_API __declspec(dllexport)
#else
#define ANNOLOG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum annolog_status {
  ANNOLOG_OK = 0,
  ANNOLOG_ERROR_USAGE = 1,
  ANNOLOG_ERROR_SCHEMA = 2,
  ANNOLOG_ERROR_RULE_LOAD = 3,
  ANNOLOG_ERROR_RUNTIME = 4
} annolog_status;

typedef struct annolog_lexicon annolog_lexicon;
typedef struct annolog_session annolog_session;
typedef struct annolog_solutions annolog_solutions;
typedef struct annolog_pipeline annolog_pipeline;
typedef struct annolog_report annolog_report;

ANNOLOG_API const char *annolog_version(void);
ANNOLOG_API const char *annolog_last_error(void);
ANNOLOG_API const char *annolog_last_error_code(void);
ANNOLOG_API void annolog_string_free(char *s);

/* Lexical resources (directory of TSV files). */
ANNOLOG_API annolog_status annolog_lexicon_load(const char *dir,
                                                annolog_lexicon **out);
ANNOLOG_API void annolog_lexicon_free(annolog_lexicon *lexicon);

/* Interactive sessions: a knowledge base plus optional document facts.
 * lexicon may be NULL; the session keeps its own reference. */
ANNOLOG_API annolog_status annolog_session_create(
    const annolog_lexicon *lexicon, annolog_session **out);
ANNOLOG_API annolog_status annolog_session_load_document(
    annolog_session *session, const char *path);
ANNOLOG_API annolog_status annolog_session_consult(annolog_session *session,
                                                   const char *path);
ANNOLOG_API annolog_status annolog_session_consult_text(
    annolog_session *session, const char *text);
ANNOLOG_API annolog_status annolog_session_set_limits(
    annolog_session *session, uint64_t max_steps, uint64_t max_depth);
ANNOLOG_API annolog_status annolog_session_query(annolog_session *session,
                                                 const char *goal,
                                                 annolog_solutions **out);
ANNOLOG_API void annolog_session_free(annolog_session *session);

/* Solutions in derivation order, one "X = a, Y = b" line each ("yes" for
 * queries without named variables). */
ANNOLOG_API size_t annolog_solutions_count(const annolog_solutions *s);
ANNOLOG_API const char *annolog_solutions_line(const annolog_solutions *s,
                                               size_t index);
ANNOLOG_API void annolog_solutions_free(annolog_solutions *s);

/* Pipelines. annolog_pipeline_run processes a document file or every
 * *.json file of a directory; per-document failures are reported in the
 * JSON report and in *exit_class (0 when every document succeeded). */
ANNOLOG_API annolog_status annolog_pipeline_load(const char *config_path,
                                                 annolog_pipeline **out);
ANNOLOG_API annolog_status annolog_pipeline_run(
    const annolog_pipeline *pipeline, const char *input,
    const char *output_dir, char **report_json, int *exit_class);
ANNOLOG_API annolog_status annolog_annotate_json(
    const annolog_pipeline *pipeline, const char *document_json,
    char **annotated_json);
ANNOLOG_API void annolog_pipeline_free(annolog_pipeline *pipeline);

/* Answer-type evaluation. */
ANNOLOG_API annolog_status annolog_evaluate(const char *predictions_path,
                                            const char *gold_path,
                                            const char *taxonomy_path,
                                            annolog_report **out);
ANNOLOG_API const char *annolog_report_table(const annolog_report *report);
ANNOLOG_API const char *annolog_report_json(const annolog_report *report);
ANNOLOG_API void annolog_report_free(annolog_report *report);

#ifdef __cplusplus
}
#endif

#endif /* ANNOLOG_ANNOLOG_H_ */
