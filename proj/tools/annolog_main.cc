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

// Command-line front end.
//
//   annolog run --pipeline <cfg> --input <dir|file> --output <dir>
//   annolog query [--doc <file>] [--rules <file>...] [--lexicon <dir>] <goal>
//   annolog eval --pred <file> --gold <file> --taxonomy <file> [--json]
//
// Exit codes: 0 success, 1 usage, 2 schema, 3 rule load, 4 runtime.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "annolog/annolog.h"

namespace {

int Report(annolog_status status) {
  std::cerr << "error: " << annolog_last_error() << "\n";
  return static_cast<int>(status);
}

struct RunArgs {
  std::string pipeline;
  std::string input;
  std::string output;
  std::string report;
};

int Run(const RunArgs &args) {
  annolog_pipeline *p = nullptr;
  if (annolog_status s = annolog_pipeline_load(args.pipeline.c_str(), &p)) {
    return Report(s);
  }
  char *report = nullptr;
  int exit_class = 0;
  annolog_status s = annolog_pipeline_run(p, args.input.c_str(),
                                          args.output.c_str(), &report,
                                          &exit_class);
  annolog_pipeline_free(p);
  if (s != ANNOLOG_OK) return Report(s);
  if (args.report.empty()) {
    std::cout << report;
  } else {
    std::ofstream out(args.report, std::ios::binary);
    if (!out) {
      annolog_string_free(report);
      std::cerr << "error: cannot write " << args.report << "\n";
      return ANNOLOG_ERROR_USAGE;
    }
    out << report;
  }
  annolog_string_free(report);
  if (exit_class != 0) {
    std::cerr << "error: some documents failed; see the run report\n";
  }
  return exit_class;
}

struct QueryArgs {
  std::string doc;
  std::vector<std::string> rules;
  std::string lexicon;
  std::uint64_t max_steps = 1'000'000;
  std::uint64_t max_depth = 10'000;
  std::string goal;
};

int Query(const QueryArgs &args) {
  annolog_lexicon *lex = nullptr;
  if (!args.lexicon.empty()) {
    if (annolog_status s = annolog_lexicon_load(args.lexicon.c_str(), &lex)) {
      return Report(s);
    }
  }
  annolog_session *session = nullptr;
  annolog_status s = annolog_session_create(lex, &session);
  annolog_lexicon_free(lex);
  if (s != ANNOLOG_OK) return Report(s);

  annolog_solutions *solutions = nullptr;
  s = annolog_session_set_limits(session, args.max_steps, args.max_depth);
  if (s == ANNOLOG_OK && !args.doc.empty()) {
    s = annolog_session_load_document(session, args.doc.c_str());
  }
  for (const std::string &r : args.rules) {
    if (s != ANNOLOG_OK) break;
    s = annolog_session_consult(session, r.c_str());
  }
  if (s == ANNOLOG_OK) {
    s = annolog_session_query(session, args.goal.c_str(), &solutions);
  }
  annolog_session_free(session);
  if (s != ANNOLOG_OK) return Report(s);

  std::size_t n = annolog_solutions_count(solutions);
  for (std::size_t i = 0; i < n; ++i) {
    std::cout << annolog_solutions_line(solutions, i) << "\n";
  }
  if (n == 0) {
    std::cout << "no.\n";
  } else {
    std::cout << n << " solutions.\n";
  }
  annolog_solutions_free(solutions);
  return 0;
}

struct EvalArgs {
  std::string pred;
  std::string gold;
  std::string taxonomy;
  bool json = false;
};

int Eval(const EvalArgs &args) {
  annolog_report *report = nullptr;
  if (annolog_status s =
          annolog_evaluate(args.pred.c_str(), args.gold.c_str(),
                           args.taxonomy.c_str(), &report)) {
    return Report(s);
  }
  std::cout << annolog_report_table(report);
  if (args.json) std::cout << "\n" << annolog_report_json(report);
  annolog_report_free(report);
  return 0;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Rule-based annotation of parsed documents"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(annolog_version()));

  RunArgs run;
  CLI::App *run_cmd = app.add_subcommand("run", "Run a pipeline over documents");
  run_cmd->add_option("--pipeline", run.pipeline, "Pipeline configuration")
      ->required();
  run_cmd->add_option("--input", run.input, "Document file or directory")
      ->required();
  run_cmd->add_option("--output", run.output, "Output directory")->required();
  run_cmd->add_option("--report", run.report,
                      "Write the run report here instead of stdout");

  QueryArgs query;
  CLI::App *query_cmd =
      app.add_subcommand("query", "Solve a goal and print every solution");
  query_cmd->add_option("--doc", query.doc, "Document whose facts to load");
  query_cmd->add_option("--rules", query.rules, "Rule files")->expected(1, -1);
  query_cmd->add_option("--lexicon", query.lexicon, "Lexicon directory");
  query_cmd->add_option("--max-steps", query.max_steps, "Resolution budget");
  query_cmd->add_option("--max-depth", query.max_depth, "Depth limit");
  query_cmd->add_option("goal", query.goal, "Goal, e.g. \"member(X, [a,b])\"")
      ->required();

  EvalArgs eval;
  CLI::App *eval_cmd =
      app.add_subcommand("eval", "Score answer types against a gold file");
  eval_cmd->add_option("--pred", eval.pred, "Predictions TSV")->required();
  eval_cmd->add_option("--gold", eval.gold, "Gold TSV")->required();
  eval_cmd->add_option("--taxonomy", eval.taxonomy, "Taxonomy TSV")
      ->required();
  eval_cmd->add_flag("--json", eval.json, "Also print the report as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return ANNOLOG_ERROR_USAGE;
  }

  if (run_cmd->parsed()) return Run(run);
  if (query_cmd->parsed()) return Query(query);
  return Eval(eval);
}
