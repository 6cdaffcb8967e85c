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

// Recursive-descent parser for the Horn-clause rule language.
//
//   program  := clause*
//   clause   := head ( ":-" goals )? "."
//   goals    := goal ( "," goal )*
//   goal     := "!" | "\+" goal | "\+" "(" goals ")" | "(" goals ")"
//             | term ( "=" | "==" ) term | ( atom ":" )? callable
//   term     := VAR | INT | atom ( "(" term ( "," term )* ")" )? | list
//   list     := "[" "]" | "[" term ( "," term )* ( "|" term )? "]"
//   atom     := lowercase-identifier | "double quoted" | 'single quoted'
//
// Line comments start with '%'. A comment of the form "% @id NAME" labels the
// clause that follows it.

#ifndef ANNOLOG_PARSER_H_
#define ANNOLOG_PARSER_H_

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "annolog/term.h"

namespace annolog {

struct SourceProgram {
  std::vector<Clause> clauses;  // file order
};

// A parsed or programmatically built goal sequence plus its named variables.
struct Query {
  std::vector<Goal> goals;
  // Named variables in order of first occurrence; "_" is never listed.
  std::vector<std::pair<std::string, VarId>> variables;
  VarId next_var = 1;

  Term NewVar(const std::string &name);
};

// Throws ParseError; the first error aborts.
SourceProgram ParseProgram(std::string_view text);
Query ParseQuery(std::string_view text);

// Reads and parses a rule file; ParseError messages are prefixed with the
// path. Throws Error(kIoError) when the file cannot be read.
SourceProgram ParseProgramFile(const std::string &path);

std::string PrintProgram(const SourceProgram &program);

}  // namespace annolog

#endif  // ANNOLOG_PARSER_H_
